#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qframes/duality.hpp"
#include "qframes/frames.hpp"
#include "qframes/superspace.hpp"

namespace qframes {

/// One .qframe.json document.  Plain instances carry dim/vectors; super
/// instances carry dims/vectors1/vectors2.  Operator fields are optional
/// and command-dependent.
struct Instance {
  std::optional<int> dim;
  std::optional<std::array<int, 2>> dims;
  std::vector<double> weights;
  std::vector<QVector> vectors;
  std::vector<QVector> vectors1;
  std::vector<QVector> vectors2;
  std::optional<QMatrix> k;
  std::optional<QMatrix> k1;
  std::optional<QMatrix> k2;
  std::optional<QMatrix> l;
  std::optional<QMatrix> m;
  std::optional<QMatrix> g;
  std::optional<QMatrix> g1;
  std::optional<QMatrix> g2;
};

Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

std::string instance_to_json(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

/// Views over a loaded instance; each throws ParseError when the fields it
/// needs are absent or inconsistent.
FrameFamily to_family(const Instance& inst);
SuperFrame to_super(const Instance& inst);

std::string read_file(const std::string& path);

}  // namespace qframes

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qframes/qvector.hpp"

namespace qframes {

/// Machine-readable run report.  Everything except the timestamp block is a
/// pure function of (input, seed), so byte comparison after dropping that
/// one field is a valid determinism check.
struct AnalysisReport {
  std::string command;
  std::string digest;  // content hash of the input file or canonical args
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, double>> numerics;
  std::vector<std::pair<std::string, std::vector<Quaternion>>> witnesses;
  std::uint64_t seed = 0;
  int trials = 0;
  double wall_ms = 0.0;

  void verdict(const std::string& name, bool value) {
    verdicts.emplace_back(name, value);
  }
  void numeric(const std::string& name, double value) {
    numerics.emplace_back(name, value);
  }
  void witness(const std::string& name, const std::vector<Quaternion>& w) {
    witnesses.emplace_back(name, w);
  }
};

/// JSON rendering with sorted keys; infinities become the string "inf".
std::string report_to_json(const AnalysisReport& rep);

/// FNV-1a 64-bit, hex encoded.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace qframes

#include "qframes/report.hpp"

#include <cmath>
#include <cstdint>

#include <nlohmann/json.hpp>

namespace qframes {

namespace {

using nlohmann::json;

json number_or_tag(double v) {
  // JSON has no literal for infinities; use a string tag so that round
  // trips stay lossless and diffs stay readable.
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep) {
  json j;
  j["command"] = rep.command;
  j["digest"] = rep.digest;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["timestamp"] = json{{"wall_ms", rep.wall_ms}};

  json verdicts = json::object();
  for (const auto& [name, value] : rep.verdicts) verdicts[name] = value;
  j["verdicts"] = verdicts;

  json numerics = json::object();
  for (const auto& [name, value] : rep.numerics)
    numerics[name] = number_or_tag(value);
  j["numerics"] = numerics;

  json witnesses = json::object();
  for (const auto& [name, vec] : rep.witnesses) {
    json arr = json::array();
    for (const auto& q : vec)
      arr.push_back(json::array({q.a0, q.a1, q.a2, q.a3}));
    witnesses[name] = arr;
  }
  j["witnesses"] = witnesses;

  return j.dump(2) + "\n";
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace qframes

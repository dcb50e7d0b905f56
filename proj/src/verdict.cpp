#include "hooklab/verdict.hpp"

#include <algorithm>

namespace hooklab {

SideSummary summarize(const MultiPoly& p) {
  return SideSummary{p.size(), canonical_hash(p), std::nullopt};
}

SideSummary summarize(const Rational& q) {
  const std::string text = to_string(q);
  return SideSummary{q == 0 ? std::size_t{0} : std::size_t{1}, sha256_hex("scalar:" + text), text};
}

namespace {

nlohmann::json side_json(const SideSummary& s) {
  nlohmann::json j{{"terms", s.terms}, {"hash", s.hash}};
  if (s.value) j["value"] = *s.value;
  return j;
}

}  // namespace

nlohmann::json to_json(const VerdictReport& r, bool with_timing) {
  nlohmann::json j{{"check", r.check},
                   {"params", r.params},
                   {"pass", r.pass},
                   {"lhs", side_json(r.lhs)},
                   {"rhs", side_json(r.rhs)}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.trace) j["trace"] = *r.trace;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Summary summarize(const std::vector<VerdictReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    if (std::find(s.families.begin(), s.families.end(), r.check) == s.families.end()) {
      s.families.push_back(r.check);
    }
    ++s.total;
    if (r.pass) ++s.passed;
  }
  return s;
}

nlohmann::json to_json(const Summary& s) {
  return nlohmann::json{{"summary",
                         {{"families", s.families},
                          {"family_count", s.families.size()},
                          {"total", s.total},
                          {"passed", s.passed},
                          {"failed", s.total - s.passed},
                          {"pass", s.pass()}}}};
}

std::string format_line(const VerdictReport& r) {
  std::string line = (r.pass ? "PASS " : "FAIL ") + r.check;
  for (const auto& [key, value] : r.params.items()) line += " " + key + "=" + value.dump();
  line += "  lhs[" + std::to_string(r.lhs.terms) + " terms " + r.lhs.hash.substr(0, 12) + "]";
  line += " rhs[" + std::to_string(r.rhs.terms) + " terms " + r.rhs.hash.substr(0, 12) + "]";
  line += " " + std::to_string(r.elapsed_ms) + " ms";
  return line;
}

}  // namespace hooklab

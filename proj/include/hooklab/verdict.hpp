#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hooklab/multipoly.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

/// Short fingerprint of one side of an identity.
struct SideSummary {
  std::size_t terms = 0;
  std::string hash;
  std::optional<std::string> value;  // set for scalar sides
};

SideSummary summarize(const MultiPoly& p);
SideSummary summarize(const Rational& q);

struct VerdictReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  SideSummary lhs;
  SideSummary rhs;
  std::int64_t elapsed_ms = 0;
  nlohmann::json detail = nlohmann::json::object();
  std::optional<nlohmann::json> trace;
};

/// Key order is fixed by nlohmann's sorted object map, so equal reports
/// serialize to equal bytes.
nlohmann::json to_json(const VerdictReport& r, bool with_timing = true);

struct Summary {
  std::vector<std::string> families;  // in first-run order
  std::size_t total = 0;
  std::size_t passed = 0;
  bool pass() const { return total == passed; }
};
Summary summarize(const std::vector<VerdictReport>& reports);
nlohmann::json to_json(const Summary& s);

/// One line per report, for humans.
std::string format_line(const VerdictReport& r);

}  // namespace hooklab

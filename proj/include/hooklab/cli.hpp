#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hooklab/verdict.hpp"

namespace hooklab {

/// A requested size above its ceiling. The CLI maps it to exit code 2.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every check name accepted by `verify`, "all" last.
const std::vector<std::string>& verify_checks();

struct VerifyOptions {
  std::string check = "all";
  std::optional<std::size_t> r;         // upper end of r sweeps
  std::optional<std::size_t> n;         // upper end of binary-hooks sweep
  std::optional<std::size_t> max_size;  // largest |mu| for kerov
  bool trace = false;
  unsigned threads = 1;
  std::string budget = "default";  // or "quick"
};

/// Runs the selected checks in a fixed order. Throws BudgetError for sizes
/// above the ceilings and std::invalid_argument for unknown names.
std::vector<VerdictReport> run_verify(const VerifyOptions& options);

/// Full command line (args[0] is the program name). Returns the exit code:
/// 0 pass, 1 verification failure, 2 usage error or refused budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hooklab

#include "hooklab/budget.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace hooklab {

std::size_t budget_ceiling(std::size_t default_limit) {
  const char* env = std::getenv("HOOKLAB_BUDGET_CEILING");
  if (env == nullptr) return default_limit;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end) return default_limit;
  return std::max(default_limit, value);
}

}  // namespace hooklab

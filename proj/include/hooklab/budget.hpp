#pragma once

#include <cstddef>

namespace hooklab {

/// Size ceiling for an exhaustive computation. Returns default_limit unless
/// the environment variable HOOKLAB_BUDGET_CEILING holds a larger positive
/// integer, in which case that value wins. Expert use only.
std::size_t budget_ceiling(std::size_t default_limit);

}  // namespace hooklab

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace quot {

/// Number of r-element subsets of an n-set.
std::uint64_t binomial(std::size_t n, std::size_t r);

/// All r-subsets of {0..n-1}, each sorted ascending, in colexicographic order
/// (compare largest elements first; {0,1} < {0,2} < {1,2} < {0,3} < ...).
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t r);

}  // namespace quot

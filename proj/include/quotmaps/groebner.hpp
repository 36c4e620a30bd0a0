#pragma once

#include <cstddef>
#include <vector>

#include "quotmaps/multi_poly.hpp"

namespace quot {

struct GroebnerLimits {
  std::size_t max_vars = 10;
  unsigned max_generator_degree = 4;
  /// Caps on the work done by Buchberger's loop.
  std::size_t max_basis = 5000;
  std::size_t max_reductions = 200000;
};

/// Fully reduced remainder of f modulo `basis` (degrevlex).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);

/// Reduced Groebner basis (monic, sorted by increasing leading monomial) of the ideal
/// generated by `gens`, via Buchberger with the coprime and chain criteria.
/// Throws GuardExceeded when the input or the computation leaves `limits`.
std::vector<MultiPoly> reduced_groebner_basis(const std::vector<MultiPoly>& gens, const GroebnerLimits& limits = {});

}  // namespace quot

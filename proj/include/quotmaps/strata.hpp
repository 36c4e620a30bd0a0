#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quotmaps/map_point.hpp"
#include "quotmaps/matrix.hpp"
#include "quotmaps/resultant.hpp"

namespace quot {

/// phi_{d,k}([h], [g]) = [g o h]: every form of g multiplied by h.
template <class R>
MapPoint<R> phi(const HomogPoly<R>& h, const MapPoint<R>& g) {
  if (h.is_zero()) throw DomainError("phi needs a nonzero factor h");
  std::vector<HomogPoly<R>> out;
  for (const auto& gi : g.polys()) out.push_back(hp_mul(gi, h));
  return MapPoint<R>(std::move(out));
}

/// ([h], [g]) in P(V_{d-k}) x (N_k \ Z_{k,k-1}).
template <class F>
struct FactorPair {
  HomogPoly<F> h;  // first nonzero coefficient 1
  MapPoint<F> g;   // torsion degree 0
};

/// Inverse of phi on the stratum: h = gcd(f), g_i = f_i / h.
template <class F>
FactorPair<F> psi(const MapPoint<F>& f) {
  if (std::size_t t = torsion_degree(f); t == 0) throw DomainError("psi is undefined on interior points");
  HomogPoly<F> h = hp_gcd(f.polys());
  std::vector<HomogPoly<F>> g;
  for (const auto& fi : f.polys()) g.push_back(hp_divide_exact(fi, h));
  FactorPair<F> out{h, MapPoint<F>(std::move(g))};
  if (torsion_degree(out.g) != 0) throw InternalInconsistency("cofactor tuple of psi still has a common factor");
  return out;
}

/// L_h: V_s -> V_{r+s}, g -> g*h, as an (s+1) x (r+s+1) matrix whose row j is the
/// coefficient vector of x^(s-j) y^j h.
template <class R>
Matrix<R> mul_matrix(const HomogPoly<R>& h, std::size_t s) {
  if (h.is_zero()) throw DomainError("mul_matrix needs a nonzero h");
  const std::size_t r = h.degree();
  Matrix<R> out(s + 1, r + s + 1, zero_like(h[0]));
  for (std::size_t j = 0; j <= s; ++j)
    for (std::size_t i = 0; i <= r; ++i) out(j, i + j) = h[i];
  return out;
}

/// |P^k(F_p)| = (p^(k+1) - 1)/(p - 1)
std::uint64_t projective_count(std::uint64_t p, std::size_t k);

struct CensusLimits {
  /// Upper bound on p^((d+1)(n+1)), the number of affine representatives.
  std::uint64_t max_affine = 100'000'000;
};

/// Stratum counts of N_d(F_p).
struct CensusTable {
  std::uint32_t p = 0;
  std::size_t d = 0, n = 0;
  std::uint64_t interior = 0;
  /// by_k[k] = #(C_{d,k} \ C_{d,k-1}), i.e. points of torsion degree d-k
  std::vector<std::uint64_t> by_k;
  /// predictions[k] = |P^{d-k}(F_p)| * #interior(N_k(F_p))
  std::vector<std::uint64_t> predictions;
  std::uint64_t total = 0;             // sum of all counts
  std::uint64_t projective_total = 0;  // |P^{(d+1)(n+1)-1}(F_p)|

  bool checksum_ok() const { return total == projective_total; }
  bool products_ok() const { return by_k == predictions; }
  bool segre_ok() const;
};

/// Exhaustive enumeration of N_d(F_p) by normalized representatives. Every point's
/// rank-based torsion degree is cross-checked against its F_p gcd degree.
CensusTable census(std::size_t d, std::size_t n, std::uint32_t p, const CensusLimits& limits = {},
                   unsigned jobs = 1);

/// Number of points of N_k(F_p) with torsion degree 0 (all of P^n when k = 0).
std::uint64_t interior_count(std::size_t k, std::size_t n, std::uint32_t p, const CensusLimits& limits = {},
                             unsigned jobs = 1);

/// Calls visit(point) for every point of N_d(F_p), in the order of the normalized
/// representatives (first nonzero flattened coordinate 1, remaining coordinates
/// counted in base p).
void for_each_projective_point(std::size_t d, std::size_t n, std::uint32_t p,
                               const std::function<void(const MapPoint<Fp>&)>& visit,
                               const CensusLimits& limits = {});

}  // namespace quot

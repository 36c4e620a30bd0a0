#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quotmaps/map_point.hpp"
#include "quotmaps/matrix.hpp"

namespace quot {

/// A_{f,k}: the (k+1)(n+1) x (d+k+1) matrix of w -> sum_i w_i f_i from W_k to V_{d+k}.
///
/// Row s*(n+1)+i holds the coefficients of x^(k-s) y^s f_i against the monomials
/// x^(d+k-j) y^j, so it is row i of the first block shifted right by s.
template <class R>
Matrix<R> build_resultant_matrix(const MapPoint<R>& f, std::size_t k) {
  const std::size_t n1 = f.n() + 1, d = f.d();
  Matrix<R> a((k + 1) * n1, d + k + 1, zero_like(f.sample()));
  for (std::size_t s = 0; s <= k; ++s)
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j <= d; ++j) a(s * n1 + i, s + j) = f.coeff(i, j);
  return a;
}

template <class R>
std::size_t exact_rank(const Matrix<R>& m) {
  return rank(m);
}

/// Degree of the torsion of the quotient sheaf, i.e. deg gcd(f_0..f_n), read off as
/// 2d - rank A_{f,d-1}. For R = TPoly this is the generic torsion degree over Q(t).
template <class R>
std::size_t torsion_degree(const MapPoint<R>& f) {
  const std::size_t d = f.d();
  if (d == 0) return 0;
  std::size_t r = rank(build_resultant_matrix(f, d - 1));
  if (r > 2 * d || r < d) throw InternalInconsistency("rank of A_{f,d-1} outside [d, 2d]");
  return 2 * d - r;
}

struct StratumReport {
  std::size_t d = 0;
  std::size_t torsion_degree = 0;
  /// Minimal k with [f] in C_{d,k}, i.e. d - torsion; empty for interior points.
  std::optional<std::size_t> stratum;
  /// ranks[k] = rank A_{f,k} for k = 0..k_max
  std::vector<std::size_t> ranks;

  bool interior() const { return !stratum.has_value(); }
};

/// "interior" or "C_{d,k}\C_{d,k-1}".
std::string stratum_label(const StratumReport& report);

/// Ranks of A_{f,k} for k = 0..k_max, cross-checked against the rank laws:
///  (a) rank = k+1+d-T once k >= d-T-1,
///  (b) rank >= 2(k+1) below that,
///  (c) consecutive ranks in regime (a) differ by one.
/// A violation throws InternalInconsistency.
template <class R>
StratumReport rank_profile(const MapPoint<R>& f, std::size_t k_max) {
  const std::size_t d = f.d();
  if (d == 0) throw DomainError("rank profile needs d >= 1");
  if (k_max + 1 < d) throw DomainError("rank profile needs k_max >= d-1");
  StratumReport out;
  out.d = d;
  out.torsion_degree = torsion_degree(f);
  if (out.torsion_degree > 0) out.stratum = d - out.torsion_degree;
  const std::size_t t = out.torsion_degree;
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::size_t r = rank(build_resultant_matrix(f, k));
    out.ranks.push_back(r);
    const bool stable = k + t + 1 >= d;
    if (stable && r != k + 1 + d - t)
      throw InternalInconsistency("rank A_{f," + std::to_string(k) + "} = " + std::to_string(r) +
                                  " but k+1+d-T = " + std::to_string(k + 1 + d - t));
    if (!stable && r < 2 * (k + 1))
      throw InternalInconsistency("rank A_{f," + std::to_string(k) + "} = " + std::to_string(r) + " below 2(k+1)");
    if (stable && k > 0 && k + t >= d && r != out.ranks[k - 1] + 1)
      throw InternalInconsistency("consecutive stable ranks do not differ by one at k = " + std::to_string(k));
  }
  return out;
}

/// [f] in C_{d,k}, tested as rank A_{f,m} <= k+1+m (all (k+2+m)-minors vanish).
template <class R>
bool in_stratum(const MapPoint<R>& f, std::size_t k, std::size_t m) {
  const std::size_t d = f.d();
  if (d == 0 || k + 1 > d) throw DomainError("in_stratum needs 0 <= k <= d-1");
  if (m < k) throw DomainError("in_stratum needs m >= k");
  return rank(build_resultant_matrix(f, m)) <= k + 1 + m;
}

}  // namespace quot

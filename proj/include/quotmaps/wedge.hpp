#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "quotmaps/map_point.hpp"
#include "quotmaps/matrix.hpp"
#include "quotmaps/resultant.hpp"

namespace quot {

/// Coordinates of the (m+2+l)-th exterior power of A_{f,m}: every r x r minor,
/// row subsets outer, column subsets inner, both in colex order.
template <class F>
struct WedgeVector {
  std::size_t level = 0;
  std::size_t order = 0;     // r = m + 2 + level
  std::size_t row_count = 0; // (n+1)(m+1)
  std::size_t col_count = 0; // d+m+1
  /// Power of t divided out when this vector is a family limit; 0 otherwise.
  int valuation = 0;
  std::vector<F> coords;

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const F& c) { return detail::coeff_is_zero(c); });
  }
  friend bool operator==(const WedgeVector&, const WedgeVector&) = default;
};

/// Graph coordinates (levels l = 0..d-1) of a point of M_d for a fixed m.
template <class F>
struct WedgeTuple {
  std::size_t m = 0;
  std::vector<WedgeVector<F>> levels;
  friend bool operator==(const WedgeTuple&, const WedgeTuple&) = default;
};

/// Canonical projective representative. Over Q: primitive integer vector whose
/// first nonzero entry is positive. Over F_p: first nonzero entry 1.
/// The zero vector is left alone.
void normalize_coords(std::vector<Rational>& v);
void normalize_coords(std::vector<Fp>& v);

template <class F>
WedgeVector<F> wedge_coords(const MapPoint<F>& f, std::size_t m, std::size_t l, unsigned jobs = 1) {
  const std::size_t d = f.d();
  if (d == 0) throw DomainError("wedge coordinates need d >= 1");
  if (m + 1 < d) throw DomainError("wedge coordinates need m >= d-1");
  if (l + 1 > d) throw DomainError("wedge level must lie in 0..d-1");
  auto a = build_resultant_matrix(f, m);
  WedgeVector<F> w;
  w.level = l;
  w.order = m + 2 + l;
  w.row_count = a.rows();
  w.col_count = a.cols();
  w.coords = all_minors(a, w.order, jobs);
  return w;
}

template <class F>
WedgeTuple<F> graph_point(const MapPoint<F>& f, std::size_t m, unsigned jobs = 1) {
  if (std::size_t t = torsion_degree(f); t != 0)
    throw DomainError("boundary point (torsion degree " + std::to_string(t) +
                      "): the graph map is undefined there; pass a one-parameter family instead");
  WedgeTuple<F> out;
  out.m = m;
  for (std::size_t l = 0; l < f.d(); ++l) {
    auto w = wedge_coords(f, m, l, jobs);
    if (w.is_zero()) throw InternalInconsistency("interior point with a vanishing wedge level");
    normalize_coords(w.coords);
    out.levels.push_back(std::move(w));
  }
  return out;
}

/// Result of pushing a one-parameter family into the graph closure as t -> 0.
struct FamilyLimit {
  WedgeTuple<Rational> tuple;       // levels carry their valuations
  std::vector<int> valuations;      // v_0..v_{d-1}
  MapPoint<Rational> projection;    // image in N_d: lowest t-coefficient of f(t)
  std::size_t projection_torsion = 0;
};

/// Requires the family to be generically interior (torsion 0 over Q(t)); otherwise
/// throws DomainError naming the first identically vanishing level.
FamilyLimit family_limit(const MapPoint<TPoly>& family, std::size_t m, unsigned jobs = 1);

/// Member of the family at a rational parameter value.
MapPoint<Rational> specialize(const MapPoint<TPoly>& family, const Rational& t);

}  // namespace quot

#pragma once

#include <cstddef>
#include <vector>

#include "quotmaps/errors.hpp"
#include "quotmaps/homog_poly.hpp"

namespace quot {

/// A point [f] of N_d: forms (f_0, ..., f_n) of common degree d, not all zero.
/// Also used with R = TPoly for one-parameter families f(t).
///
/// Degree 0 is allowed: N_0 = P^n is where the cofactor tuple of a degree-d point
/// with torsion degree d lives.
template <class R>
class MapPoint {
 public:
  explicit MapPoint(std::vector<HomogPoly<R>> polys) : f_(std::move(polys)) {
    if (f_.size() < 2) throw DomainError("a map point needs n >= 1, i.e. at least two forms");
    for (const auto& g : f_)
      if (g.degree() != f_[0].degree()) throw DomainError("forms of a map point must share a degree");
    bool all_zero = true;
    for (const auto& g : f_) all_zero = all_zero && g.is_zero();
    if (all_zero) throw DomainError("all forms of a map point are zero");
  }

  /// Builds from the coefficient array (a_ij), one row per form.
  static MapPoint from_coeffs(const std::vector<std::vector<R>>& rows) {
    std::vector<HomogPoly<R>> polys;
    for (const auto& r : rows) polys.emplace_back(r);
    return MapPoint(std::move(polys));
  }

  std::size_t n() const noexcept { return f_.size() - 1; }
  std::size_t d() const noexcept { return f_[0].degree(); }
  const std::vector<HomogPoly<R>>& polys() const noexcept { return f_; }
  const HomogPoly<R>& operator[](std::size_t i) const { return f_[i]; }
  /// a_ij
  const R& coeff(std::size_t i, std::size_t j) const { return f_[i][j]; }
  /// Any coefficient, to seed zeros of the right field.
  const R& sample() const { return f_[0][0]; }

  /// Coefficients flattened as a_00, a_01, ..., a_nd.
  std::vector<R> flatten() const {
    std::vector<R> out;
    for (const auto& g : f_) out.insert(out.end(), g.coeffs().begin(), g.coeffs().end());
    return out;
  }

  friend bool operator==(const MapPoint& a, const MapPoint& b) { return a.f_ == b.f_; }

 private:
  std::vector<HomogPoly<R>> f_;
};

/// Projective representative over a field: first nonzero coefficient in the
/// a_00, a_01, ..., a_nd flattening scaled to 1.
template <class F>
MapPoint<F> normalize_projective(const MapPoint<F>& f) {
  auto flat = f.flatten();
  std::size_t k = 0;
  while (is_zero(flat[k])) ++k;
  F inv = one_like(flat[k]) / flat[k];
  std::vector<HomogPoly<F>> polys;
  for (const auto& g : f.polys()) polys.push_back(g.scaled(inv));
  return MapPoint<F>(std::move(polys));
}

template <class F>
bool projectively_equal(const MapPoint<F>& a, const MapPoint<F>& b) {
  if (a.n() != b.n() || a.d() != b.d()) return false;
  return normalize_projective(a) == normalize_projective(b);
}

}  // namespace quot

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quotmaps/errors.hpp"

namespace quot {

namespace detail {
template <class R>
bool coeff_is_zero(const R& c) {
  return is_zero(c);  // found by ADL
}
}  // namespace detail

/// Binary form f = sum_j a_j x^(d-j) y^j of degree d, stored densely as (a_0, ..., a_d).
/// R is any commutative ring type with is_zero/zero_like/one_like found by ADL.
template <class R>
class HomogPoly {
 public:
  explicit HomogPoly(std::vector<R> coeffs) : a_(std::move(coeffs)) {
    if (a_.empty()) throw DomainError("a form needs at least one coefficient");
  }

  /// The zero form of the given degree, with scalars modelled on `like`.
  static HomogPoly zero(std::size_t degree, const R& like) {
    return HomogPoly(std::vector<R>(degree + 1, zero_like(like)));
  }
  /// x^(d-j) y^j
  static HomogPoly monomial(std::size_t degree, std::size_t j, const R& like) {
    auto f = zero(degree, like);
    f.a_.at(j) = one_like(like);
    return f;
  }

  std::size_t degree() const noexcept { return a_.size() - 1; }
  const std::vector<R>& coeffs() const noexcept { return a_; }
  const R& operator[](std::size_t j) const { return a_[j]; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const R& c) { return detail::coeff_is_zero(c); });
  }

  /// Index of the first nonzero coefficient, or degree()+1 for the zero form.
  std::size_t leading_index() const {
    std::size_t j = 0;
    while (j < a_.size() && detail::coeff_is_zero(a_[j])) ++j;
    return j;
  }

  HomogPoly scaled(const R& c) const {
    std::vector<R> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(x * c);
    return HomogPoly(std::move(out));
  }

  friend bool operator==(const HomogPoly& f, const HomogPoly& g) { return f.a_ == g.a_; }

 private:
  std::vector<R> a_;
};

/// Coefficient convolution; degrees add.
template <class R>
HomogPoly<R> hp_mul(const HomogPoly<R>& f, const HomogPoly<R>& g) {
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<R> out(a.size() + b.size() - 1, zero_like(a[0]));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return HomogPoly<R>(std::move(out));
}

/// Scales a nonzero form over a field so its first nonzero coefficient is 1.
template <class F>
HomogPoly<F> normalize_leading(const HomogPoly<F>& f) {
  std::size_t j = f.leading_index();
  if (j > f.degree()) throw DomainError("cannot normalize the zero form");
  F inv = one_like(f[j]) / f[j];
  return f.scaled(inv);
}

/// q with q*h == f, over a field. Throws NotDivisible if h does not divide f.
template <class F>
HomogPoly<F> hp_divide_exact(const HomogPoly<F>& f, const HomogPoly<F>& h) {
  std::size_t s = h.leading_index();
  if (s > h.degree()) throw DomainError("division by the zero form");
  if (h.degree() > f.degree()) throw NotDivisible("divisor degree exceeds dividend degree");
  std::size_t qdeg = f.degree() - h.degree();
  const auto& fa = f.coeffs();
  const auto& ha = h.coeffs();
  std::vector<F> q(qdeg + 1, zero_like(fa[0]));
  // q_i h_s = f_{i+s} - sum_{i'<i} q_{i'} h_{i+s-i'}
  for (std::size_t i = 0; i <= qdeg; ++i) {
    F acc = fa[i + s];
    for (std::size_t ip = 0; ip < i; ++ip) {
      std::size_t hi = i + s - ip;
      if (hi <= h.degree()) acc -= q[ip] * ha[hi];
    }
    q[i] = acc / ha[s];
  }
  HomogPoly<F> quotient(std::move(q));
  if (!(hp_mul(quotient, h) == f)) throw NotDivisible("form does not divide");
  return quotient;
}

namespace detail {

// Univariate helpers over a field, coefficients low degree first, trimmed.
template <class F>
void uni_trim(std::vector<F>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class F>
std::vector<F> uni_rem(std::vector<F> a, const std::vector<F>& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    F q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= q * b[j];
    a.pop_back();
    uni_trim(a);
  }
  return a;
}

template <class F>
std::vector<F> uni_gcd(std::vector<F> a, std::vector<F> b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    auto r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// Greatest common divisor of binary forms over a field, first nonzero coefficient 1.
///
/// Common powers of x and y are split off explicitly; the remaining cofactors are
/// dehomogenised at y = 1, where a_j becomes the coefficient of x^(d-j), and their
/// univariate gcd is homogenised back. Zero inputs are ignored.
template <class F>
HomogPoly<F> hp_gcd(std::span<const HomogPoly<F>> fs) {
  std::size_t ypow = static_cast<std::size_t>(-1);
  std::size_t xpow = static_cast<std::size_t>(-1);
  std::vector<F> g;
  bool any = false;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    std::size_t lead = f.leading_index();
    std::size_t last = f.degree();
    while (is_zero(f[last])) --last;
    // f = x^(d-last) y^lead * core, core has no x or y factor
    ypow = std::min(ypow, lead);
    xpow = std::min(xpow, f.degree() - last);
    std::vector<F> core(f.coeffs().begin() + lead, f.coeffs().begin() + last + 1);
    std::reverse(core.begin(), core.end());  // low power of x first
    g = any ? detail::uni_gcd(std::move(g), std::move(core)) : std::move(core);
    any = true;
  }
  if (!any) throw DomainError("gcd of all-zero forms");
  // homogenise: coefficient of x^i in g becomes a_{deg g - i}
  std::reverse(g.begin(), g.end());
  std::vector<F> out(ypow, zero_like(g[0]));
  out.insert(out.end(), g.begin(), g.end());
  out.resize(out.size() + xpow, zero_like(g[0]));
  return normalize_leading(HomogPoly<F>(std::move(out)));
}

template <class F>
HomogPoly<F> hp_gcd(const std::vector<HomogPoly<F>>& fs) {
  return hp_gcd(std::span<const HomogPoly<F>>(fs));
}

/// Flat list of coefficient strings a_0..a_d.
template <class R>
std::vector<std::string> serialize(const HomogPoly<R>& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(to_string(c));
  return out;
}

}  // namespace quot

#pragma once

// Reference implementations used to cross-check the library. They take a
// deliberately different route from the production code: plain field
// arithmetic instead of fraction-free elimination, dehomogenization at x = 1
// instead of y = 1, Leibniz expansion instead of Bareiss, and direct
// geometric sums instead of polynomial division.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "quotmaps/fp.hpp"
#include "quotmaps/map_point.hpp"
#include "quotmaps/rational.hpp"

namespace oracle {

using quot::Fp;
using quot::Rational;

inline bool zero(const Rational& r) { return r.sign() == 0; }
inline bool zero(const Fp& x) { return x.value() == 0; }
inline Rational zero_of(const Rational&) { return Rational(0); }
inline Fp zero_of(const Fp& x) { return Fp(0, x.prime()); }

/// Univariate polynomial, constant term first, trailing zeros trimmed.
template <class F>
using UPoly = std::vector<F>;

template <class F>
void trim(UPoly<F>& p) {
  while (!p.empty() && zero(p.back())) p.pop_back();
}

template <class F>
UPoly<F> rem(UPoly<F> a, const UPoly<F>& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    F q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Degree of the gcd of binary forms given by coefficient rows (a_0..a_d against
/// x^(d-j) y^j). Splits off the common power of x, then takes the gcd of the
/// dehomogenizations at x = 1 (polynomials in y).
template <class F>
std::size_t gcd_degree(const std::vector<std::vector<F>>& forms) {
  std::size_t x_power = SIZE_MAX;
  UPoly<F> g;
  bool any = false;
  for (const auto& f : forms) {
    UPoly<F> p(f.begin(), f.end());
    trim(p);
    if (p.empty()) continue;
    any = true;
    x_power = std::min(x_power, f.size() - p.size());
    g = gcd(g, p);
  }
  if (!any) return SIZE_MAX;
  // constant-in-y gcd: only the x power remains
  return x_power + (g.empty() ? 0 : g.size() - 1);
}

template <class F>
std::size_t gcd_degree(const quot::MapPoint<F>& f) {
  std::vector<std::vector<F>> rows;
  for (const auto& g : f.polys()) rows.push_back(g.coeffs());
  return gcd_degree(rows);
}

/// Plain product of coefficient sequences.
template <class F>
std::vector<F> convolve(const std::vector<F>& a, const std::vector<F>& b) {
  std::vector<F> out(a.size() + b.size() - 1, zero_of(a[0]));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

using Dense = std::vector<std::vector<Rational>>;

/// Rank by Gaussian elimination with rational division.
template <class F>
std::size_t rank(std::vector<std::vector<F>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (zero(a[i][c])) continue;
      F q = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - q * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Leibniz expansion over all permutations; only for small sizes.
template <class R>
R leibniz_det(const std::vector<std::vector<R>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  R total = zero_of(a[0][0]);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    R term = a[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) term = term * a[i][perm[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// A_{f,k} built entry by entry from the defining formula a_{i, j-s}.
template <class F>
std::vector<std::vector<F>> resultant_rows(const quot::MapPoint<F>& f, std::size_t k) {
  const std::size_t n = f.n(), d = f.d();
  std::vector<std::vector<F>> out;
  for (std::size_t s = 0; s <= k; ++s)
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<F> row(d + k + 1, zero_of(f.sample()));
      for (std::size_t j = s; j <= s + d; ++j) row[j] = f.coeff(i, j - s);
      out.push_back(row);
    }
  return out;
}

/// r-subsets of {0..n-1} in colex order, produced by sorting every subset on its
/// reversed element list.
inline std::vector<std::vector<std::size_t>> colex(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

/// Every r x r minor by Leibniz expansion, row subsets outer.
template <class R>
std::vector<R> minors(const std::vector<std::vector<R>>& a, std::size_t r) {
  std::vector<R> out;
  for (const auto& rs : colex(a.size(), r))
    for (const auto& cs : colex(a[0].size(), r)) {
      std::vector<std::vector<R>> sub;
      for (auto i : rs) {
        sub.emplace_back();
        for (auto j : cs) sub.back().push_back(a[i][j]);
      }
      out.push_back(leibniz_det(sub));
    }
  return out;
}

// ---- integer polynomials in lambda ----

using IPoly = std::vector<long long>;

inline IPoly add(IPoly a, const IPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline IPoly mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// lambda^lo + ... + lambda^hi (empty when hi < lo)
inline IPoly span_sum(long lo, long hi) {
  if (hi < lo) return {};
  IPoly out(hi + 1, 0);
  for (long i = lo; i <= hi; ++i) out[i] = 1;
  return out;
}

/// Blowup factor written directly as (1 + ... + lambda^i)(lambda + ... + lambda^(ni-1)).
inline IPoly blowup(long i, long n) { return mul(span_sum(0, i), span_sum(1, n * i - 1)); }

inline IPoly e_N(long d, long n) { return span_sum(0, (d + 1) * (n + 1) - 1); }

/// Sum over ordered compositions alpha of R_alpha e(N_{d-|alpha|}), enumerated by
/// bitmask over the d-1 gaps of each total |alpha| = s.
inline IPoly e_M(long d, long n) {
  IPoly total = e_N(d, n);
  for (long s = 1; s <= d; ++s)
    for (unsigned long mask = 0; mask < (1ul << (s - 1)); ++mask) {
      IPoly term{1};
      long part = 1;
      for (long g = 0; g < s - 1; ++g) {
        if (mask >> g & 1) {
          term = mul(term, blowup(part, n));
          part = 1;
        } else {
          ++part;
        }
      }
      term = mul(term, blowup(part, n));
      total = add(total, mul(term, e_N(d - s, n)));
    }
  return total;
}

// ---- exhaustive census over F_p ----

struct BruteCensus {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_torsion;  // by_torsion[t], projective points
};

/// Walks every nonzero affine coefficient vector, classifies by the gcd oracle,
/// and divides by p - 1 to count projective points.
inline BruteCensus brute_census(std::size_t d, std::size_t n, std::uint32_t p) {
  const std::size_t len = (d + 1) * (n + 1);
  std::uint64_t affine = 1;
  for (std::size_t i = 0; i < len; ++i) affine *= p;
  BruteCensus out;
  out.by_torsion.assign(d + 1, 0);
  std::vector<std::vector<Fp>> forms(n + 1, std::vector<Fp>(d + 1, Fp(0, p)));
  for (std::uint64_t code = 1; code < affine; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= d; ++j) {
        forms[i][j] = Fp(static_cast<std::int64_t>(c % p), p);
        c /= p;
      }
    ++out.by_torsion[gcd_degree(forms)];
  }
  for (auto& v : out.by_torsion) v /= (p - 1);
  out.total = (affine - 1) / (p - 1);
  return out;
}

}  // namespace oracle

namespace gen {

using quot::HomogPoly;
using quot::MapPoint;
using quot::Rational;

/// Small integers with an occasional fraction; zero with probability ~1/7.
inline Rational scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3), kind(0, 5);
  if (kind(rng) == 0) return Rational(num(rng)) / Rational(den(rng));
  return Rational(num(rng));
}

inline Rational nonzero_scalar(std::mt19937_64& rng) {
  for (;;)
    if (auto c = scalar(rng); c.sign() != 0) return c;
}

inline HomogPoly<Rational> form(std::mt19937_64& rng, std::size_t degree) {
  std::vector<Rational> c;
  for (std::size_t j = 0; j <= degree; ++j) c.push_back(scalar(rng));
  return HomogPoly<Rational>(c);
}

inline HomogPoly<Rational> nonzero_form(std::mt19937_64& rng, std::size_t degree) {
  for (;;)
    if (auto f = form(rng, degree); !f.is_zero()) return f;
}

/// Any tuple (boundary or not) with at least one nonzero form.
inline MapPoint<Rational> point(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  for (;;) {
    std::vector<HomogPoly<Rational>> fs;
    bool any = false;
    for (std::size_t i = 0; i <= n; ++i) {
      fs.push_back(form(rng, d));
      any = any || !fs.back().is_zero();
    }
    if (any) return MapPoint<Rational>(fs);
  }
}

/// Tuple whose gcd has degree 0, certified by the oracle.
inline MapPoint<Rational> coprime_point(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  for (;;) {
    auto f = point(rng, d, n);
    if (oracle::gcd_degree(f) == 0) return f;
  }
}

/// Coprime tuple of degree d - t multiplied by a random nonzero form of degree t,
/// so the gcd has degree exactly t.
inline MapPoint<Rational> planted_point(std::mt19937_64& rng, std::size_t d, std::size_t n, std::size_t t) {
  auto g = coprime_point(rng, d - t, n);
  auto h = nonzero_form(rng, t);
  std::vector<HomogPoly<Rational>> fs;
  for (const auto& gi : g.polys()) {
    auto prod = oracle::convolve(gi.coeffs(), h.coeffs());
    fs.emplace_back(prod);
  }
  return MapPoint<Rational>(fs);
}

inline MapPoint<Rational> from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return MapPoint<Rational>::from_coeffs(r);
}

inline HomogPoly<Rational> hp(const std::vector<long>& c) {
  std::vector<Rational> r(c.begin(), c.end());
  return HomogPoly<Rational>(r);
}

}  // namespace gen

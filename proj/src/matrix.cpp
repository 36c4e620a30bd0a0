#include "quotmaps/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>

#include "quotmaps/combinations.hpp"
#include "quotmaps/parallel.hpp"

namespace quot {

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (std::size_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    // colex successor: bump the lowest element that can move up, reset the ones below it
    std::size_t i = 0;
    while (i < r && s[i] + 1 == (i + 1 < r ? s[i + 1] : n)) ++i;
    if (i == r) break;
    ++s[i];
    for (std::size_t j = 0; j < i; ++j) s[j] = j;
  }
  return out;
}

namespace {

bool is_zero_value(const mpz_class& x) { return sgn(x) == 0; }
bool is_zero_value(std::int64_t x) { return x == 0; }
bool is_zero_value(const TPoly& x) { return x.is_zero(); }

// Fraction-free elimination. `update(piv, x, lead, top, prev)` must return
// (piv*x - lead*top) / prev, the division being exact.
template <class T, class Update>
std::size_t bareiss_rank(std::vector<T>& a, std::size_t rows, std::size_t cols, const T& one, Update update) {
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * cols + j]; };
  T prev = one;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero_value(at(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) at(i, j) = update(at(r, c), at(i, j), at(i, c), at(r, j), prev);
      at(i, c) = T(0);
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

template <class T, class Update>
T bareiss_det(std::vector<T>& a, std::size_t n, const T& one, const T& zero, Update update) {
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
  T prev = one;
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero_value(at(p, c))) ++p;
    if (p == n) return zero;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(c, j));
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) at(i, j) = update(at(c, c), at(i, j), at(i, c), at(c, j), prev);
    }
    prev = at(c, c);
  }
  T d = at(n - 1, n - 1);
  return negate ? T(zero - d) : d;
}

const auto mpz_update = [](const mpz_class& piv, const mpz_class& x, const mpz_class& lead, const mpz_class& top,
                           const mpz_class& prev) {
  mpz_class v = piv * x - lead * top;
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
  return v;
};

const auto i64_update = [](std::int64_t piv, std::int64_t x, std::int64_t lead, std::int64_t top, std::int64_t prev) {
  __int128 v = static_cast<__int128>(piv) * x - static_cast<__int128>(lead) * top;
  return static_cast<std::int64_t>(v / prev);
};

const auto tpoly_update = [](const TPoly& piv, const TPoly& x, const TPoly& lead, const TPoly& top,
                             const TPoly& prev) { return exact_div(piv * x - lead * top, prev); };

// Integer matrix L*m where L is the lcm of all denominators.
std::vector<mpz_class> clear_denominators(const Matrix<Rational>& m, mpz_class& scale) {
  scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class den = m(i, j).denominator();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
  std::vector<mpz_class> z;
  z.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j).value();
      z.push_back(q.get_num() * (scale / q.get_den()));
    }
  return z;
}

// True when every k x k minor (k <= r) of a matrix with entries bounded by `bound`
// fits the int64 Bareiss path: Hadamard gives |minor| <= k^(k/2) bound^k, and the
// update forms a difference of two such products before dividing.
bool fits_int64(const mpz_class& bound, std::size_t r) {
  if (bound == 0) return true;
  double bits = 0.5 * r * std::log2(static_cast<double>(std::max<std::size_t>(r, 1))) +
                r * static_cast<double>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  return bits < 61.0;
}

mpz_class max_abs(const std::vector<mpz_class>& z) {
  mpz_class b = 0;
  for (const auto& x : z)
    if (abs(x) > b) b = abs(x);
  return b;
}

}  // namespace

std::size_t rank(const Matrix<Rational>& m) {
  // row scaling does not change rank, so clear denominators row by row
  std::vector<mpz_class> z;
  z.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const auto& q : m.row(i)) {
      mpz_class den = q.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (const auto& q : m.row(i)) z.push_back(q.value().get_num() * (l / q.value().get_den()));
  }
  std::size_t r = std::min(m.rows(), m.cols());
  if (fits_int64(max_abs(z), r)) {
    std::vector<std::int64_t> small;
    small.reserve(z.size());
    for (const auto& x : z) small.push_back(x.get_si());
    return bareiss_rank<std::int64_t>(small, m.rows(), m.cols(), 1, i64_update);
  }
  return bareiss_rank<mpz_class>(z, m.rows(), m.cols(), mpz_class(1), mpz_update);
}

std::size_t rank(const Matrix<Fp>& m) {
  std::vector<Fp> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) a.push_back(x);
  const std::size_t rows = m.rows(), cols = m.cols();
  auto at = [&](std::size_t i, std::size_t j) -> Fp& { return a[i * cols + j]; };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(at(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    Fp inv = at(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(at(i, c))) continue;
      Fp factor = at(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) at(i, j) -= factor * at(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const Matrix<TPoly>& m) {
  std::vector<TPoly> a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) a.push_back(x);
  return bareiss_rank<TPoly>(a, m.rows(), m.cols(), TPoly(1), tpoly_update);
}

namespace {

mpz_class integer_det(std::vector<mpz_class> z, std::size_t n, bool small_ok) {
  if (small_ok) {
    std::vector<std::int64_t> s;
    s.reserve(z.size());
    for (const auto& x : z) s.push_back(x.get_si());
    return mpz_class(static_cast<long>(bareiss_det<std::int64_t>(s, n, 1, 0, i64_update)));
  }
  return bareiss_det<mpz_class>(z, n, mpz_class(1), mpz_class(0), mpz_update);
}

Fp fp_det(std::vector<Fp> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> Fp& { return a[i * n + j]; };
  Fp det = one_like(a[0]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(at(p, c))) ++p;
    if (p == n) return zero_like(det);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(c, j));
      det = -det;
    }
    det *= at(c, c);
    Fp inv = at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(at(i, c))) continue;
      Fp factor = at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) at(i, j) -= factor * at(c, j);
    }
  }
  return det;
}

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols || rows == 0) throw DomainError("determinant of a non-square matrix");
}

mpz_class pow_mpz(const mpz_class& b, std::size_t e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

}  // namespace

Rational determinant(const Matrix<Rational>& m) {
  require_square(m.rows(), m.cols());
  mpz_class scale;
  auto z = clear_denominators(m, scale);
  bool small = fits_int64(max_abs(z), m.rows());
  return Rational(integer_det(std::move(z), m.rows(), small), pow_mpz(scale, m.rows()));
}

Fp determinant(const Matrix<Fp>& m) {
  require_square(m.rows(), m.cols());
  std::vector<Fp> a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) a.push_back(x);
  return fp_det(std::move(a), m.rows());
}

TPoly determinant(const Matrix<TPoly>& m) {
  require_square(m.rows(), m.cols());
  std::vector<TPoly> a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) a.push_back(x);
  return bareiss_det<TPoly>(a, m.rows(), TPoly(1), TPoly(), tpoly_update);
}

namespace {

// Gathers minor (R, C) of a row-major source into `buf`.
template <class T>
void gather(const std::vector<T>& src, std::size_t cols, const std::vector<std::size_t>& rs,
            const std::vector<std::size_t>& cs, std::vector<T>& buf) {
  buf.clear();
  for (auto i : rs)
    for (auto j : cs) buf.push_back(src[i * cols + j]);
}

template <class T, class Det>
std::vector<T> minors_with(const std::vector<T>& src, std::size_t rows, std::size_t cols, std::size_t r,
                           unsigned jobs, Det det) {
  if (r == 0 || r > rows || r > cols) throw DomainError("minor order out of range");
  auto row_sets = colex_subsets(rows, r);
  auto col_sets = colex_subsets(cols, r);
  std::vector<T> out(row_sets.size() * col_sets.size(), src[0]);
  parallel_for(row_sets.size(), jobs, [&](std::size_t ri) {
    std::vector<T> buf;
    buf.reserve(r * r);
    for (std::size_t ci = 0; ci < col_sets.size(); ++ci) {
      gather(src, cols, row_sets[ri], col_sets[ci], buf);
      out[ri * col_sets.size() + ci] = det(buf);
    }
  });
  return out;
}

}  // namespace

std::vector<Rational> all_minors(const Matrix<Rational>& m, std::size_t r, unsigned jobs) {
  mpz_class scale;
  auto z = clear_denominators(m, scale);
  bool small = fits_int64(max_abs(z), r);
  auto ints = minors_with<mpz_class>(z, m.rows(), m.cols(), r, jobs,
                                     [&](const std::vector<mpz_class>& buf) { return integer_det(buf, r, small); });
  mpz_class denom = pow_mpz(scale, r);
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(v, denom);
  return out;
}

std::vector<Fp> all_minors(const Matrix<Fp>& m, std::size_t r, unsigned jobs) {
  std::vector<Fp> a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) a.push_back(x);
  return minors_with<Fp>(a, m.rows(), m.cols(), r, jobs, [&](const std::vector<Fp>& buf) { return fp_det(buf, r); });
}

std::vector<TPoly> all_minors(const Matrix<TPoly>& m, std::size_t r, unsigned jobs) {
  std::vector<TPoly> a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) a.push_back(x);
  return minors_with<TPoly>(a, m.rows(), m.cols(), r, jobs, [&](const std::vector<TPoly>& buf) {
    std::vector<TPoly> copy = buf;
    return bareiss_det<TPoly>(copy, r, TPoly(1), TPoly(), tpoly_update);
  });
}

}  // namespace quot

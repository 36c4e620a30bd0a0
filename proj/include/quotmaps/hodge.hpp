#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace quot {

/// Integer polynomial in lambda = uv, constant term first, trailing zeros trimmed.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(std::vector<mpz_class> coeffs);
  static LambdaPoly from_ints(const std::vector<long>& coeffs);
  /// 1 + lambda + ... + lambda^(k-1)
  static LambdaPoly geometric(std::size_t k);

  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  mpz_class evaluate(const mpz_class& x) const;
  bool is_palindromic() const;
  std::string str() const;

  LambdaPoly& operator+=(const LambdaPoly& o);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b);
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Exact quotient; throws NotDivisible when the remainder is nonzero.
LambdaPoly exact_div(const LambdaPoly& a, const LambdaPoly& b);

/// R_i = (lambda^(i+1) - 1)/(lambda - 1) * (lambda^(n i) - lambda)/(lambda - 1); i, n >= 1.
LambdaPoly blowup_factor(std::size_t i, std::size_t n);

/// e(N_d) = (lambda^((d+1)(n+1)) - 1)/(lambda - 1).
LambdaPoly e_N(std::size_t d, std::size_t n);

/// e(M_d) = e(N_d) + sum_{k<d} e(M_k) R_{d-k}.
LambdaPoly e_M_recursive(std::size_t d, std::size_t n);

/// e(M_d) = sum over compositions alpha with |alpha| <= d of R_alpha e(N_{d-|alpha|}).
LambdaPoly e_M_closed(std::size_t d, std::size_t n);

struct BettiReport {
  std::vector<mpz_class> even_betti;  // b_0, b_2, b_4, ...; odd Betti numbers vanish
  mpz_class euler;
};

BettiReport betti(std::size_t d, std::size_t n);

struct PicardReport {
  std::size_t d = 0, n = 0;
  mpz_class coefficient;  // coefficient of lambda in e(M_d)
  std::size_t expected = 0;  // d + 1
  bool match = false;
};

PicardReport picard_check(std::size_t d, std::size_t n);

/// e(M_d) at lambda = q; the usual polynomial-count prediction for #M_d(F_q).
mpz_class predicted_point_count(std::size_t d, std::size_t n, const mpz_class& q);

}  // namespace quot

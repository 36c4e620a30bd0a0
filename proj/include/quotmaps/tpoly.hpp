#pragma once

#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quotmaps/rational.hpp"

namespace quot {

/// Polynomial in the deformation parameter t with rational coefficients,
/// stored low degree first with trailing zeros trimmed.
class TPoly {
 public:
  static constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

  TPoly() = default;
  TPoly(Rational c);  // NOLINT(google-explicit-constructor)
  TPoly(long c) : TPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit TPoly(std::vector<Rational> coeffs);

  static TPoly t() { return TPoly({Rational(0), Rational(1)}); }

  /// Parses sums like "1 - 3/2*t + t^2" (whitespace ignored).
  static TPoly parse(std::string_view text);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  /// Lowest power of t with nonzero coefficient; kInfiniteValuation for zero.
  int valuation() const;
  Rational coeff(int i) const;
  Rational at_zero() const { return coeff(0); }
  Rational evaluate(const Rational& t) const;

  /// Divides by t^v; requires v <= valuation().
  TPoly shift_down(int v) const;

  std::string str() const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a);
  friend bool operator==(const TPoly& a, const TPoly& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws DomainError when dividing by zero.
std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);
/// Throws NotDivisible when the remainder is nonzero.
TPoly exact_div(const TPoly& a, const TPoly& b);

inline bool is_zero(const TPoly& p) { return p.is_zero(); }
inline TPoly zero_like(const TPoly&) { return TPoly(); }
inline TPoly one_like(const TPoly&) { return TPoly(1); }
inline std::string to_string(const TPoly& p) { return p.str(); }

}  // namespace quot

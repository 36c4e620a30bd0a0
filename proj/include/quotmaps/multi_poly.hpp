#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "quotmaps/rational.hpp"

namespace quot {

/// Variable names of a polynomial ring Q[v_0, ..., v_{k-1}]. Term order is graded
/// reverse lexicographic with v_0 > v_1 > ... > v_{k-1}.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);
  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  /// Throws DomainError for an unknown name.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
using Monomial = std::vector<std::uint16_t>;

unsigned total_degree(const Monomial& m);
/// degrevlex; negative / zero / positive like strcmp.
int degrevlex_compare(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
/// b / a, requires divides(a, b)
Monomial monomial_div(const Monomial& b, const Monomial& a);

struct Term {
  Rational coeff;
  Monomial exps;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with rational coefficients. Terms are kept sorted in decreasing
/// degrevlex order with no zero coefficients and no repeated monomials.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MultiPoly(RingPtr ring, std::vector<Term> terms);

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  /// Parses "2*x^2*y - 3/4*z + 1" over the ring's variable names.
  static MultiPoly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().exps; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_term(const Rational& c, const Monomial& m) const;
  /// Leading coefficient scaled to 1; zero stays zero.
  MultiPoly monic() const;
  /// Evaluates at a rational point (one value per ring variable).
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string str() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

 private:
  void check_ring(const MultiPoly& o) const;
  MultiPoly combine(const MultiPoly& o, bool subtract) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.ring()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.ring(), Rational(1)); }
inline std::string to_string(const MultiPoly& p) { return p.str(); }

}  // namespace quot

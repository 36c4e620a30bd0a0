#include "quotmaps/hodge.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "quotmaps/errors.hpp"

namespace quot {

LambdaPoly::LambdaPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

LambdaPoly LambdaPoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<mpz_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return LambdaPoly(std::move(c));
}

LambdaPoly LambdaPoly::geometric(std::size_t k) { return LambdaPoly(std::vector<mpz_class>(k, 1)); }

void LambdaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class LambdaPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool LambdaPoly::is_palindromic() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  return true;
}

std::string LambdaPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class a = abs(c_[i]);
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) os << (a != 1 ? "*" : "") << "L" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return LambdaPoly(std::move(c));
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return LambdaPoly(std::move(c));
}

LambdaPoly exact_div(const LambdaPoly& a, const LambdaPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<mpz_class> rem = a.coeffs();
  const auto& bc = b.coeffs();
  if (a.degree() < b.degree()) {
    if (!a.is_zero()) throw NotDivisible("lambda-polynomial division leaves a remainder");
    return {};
  }
  std::vector<mpz_class> quo(a.degree() - b.degree() + 1, 0);
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem[i] == 0) continue;
    mpz_class q = rem[i] / bc.back();
    if (q * bc.back() != rem[i]) throw NotDivisible("lambda-polynomial division is not integral");
    quo[i - b.degree()] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * bc[j];
  }
  if (!LambdaPoly(rem).is_zero()) throw NotDivisible("lambda-polynomial division leaves a remainder");
  return LambdaPoly(std::move(quo));
}

namespace {

LambdaPoly monomial(std::size_t k) {
  std::vector<mpz_class> c(k + 1, 0);
  c[k] = 1;
  return LambdaPoly(std::move(c));
}

const LambdaPoly& lambda_minus_one() {
  static const LambdaPoly p = LambdaPoly::from_ints({-1, 1});
  return p;
}

}  // namespace

LambdaPoly blowup_factor(std::size_t i, std::size_t n) {
  if (i == 0 || n == 0) throw DomainError("R_i needs i >= 1 and n >= 1");
  LambdaPoly first = exact_div(monomial(i + 1) - LambdaPoly::from_ints({1}), lambda_minus_one());
  LambdaPoly second = exact_div(monomial(n * i) - monomial(1), lambda_minus_one());
  return first * second;
}

LambdaPoly e_N(std::size_t d, std::size_t n) {
  if (n == 0) throw DomainError("e_N needs n >= 1");
  return exact_div(monomial((d + 1) * (n + 1)) - LambdaPoly::from_ints({1}), lambda_minus_one());
}

LambdaPoly e_M_recursive(std::size_t d, std::size_t n) {
  std::vector<LambdaPoly> memo;
  for (std::size_t k = 0; k <= d; ++k) {
    LambdaPoly e = e_N(k, n);
    for (std::size_t j = 0; j < k; ++j) e += memo[j] * blowup_factor(k - j, n);
    memo.push_back(std::move(e));
  }
  return memo[d];
}

LambdaPoly e_M_closed(std::size_t d, std::size_t n) {
  LambdaPoly total;
  // alpha is built part by part as an ordered tuple of positive integers
  std::function<void(std::size_t, const LambdaPoly&)> extend = [&](std::size_t used, const LambdaPoly& r_alpha) {
    total += r_alpha * e_N(d - used, n);
    for (std::size_t part = 1; used + part <= d; ++part) extend(used + part, r_alpha * blowup_factor(part, n));
  };
  extend(0, LambdaPoly::from_ints({1}));
  return total;
}

BettiReport betti(std::size_t d, std::size_t n) {
  LambdaPoly e = e_M_recursive(d, n);
  return BettiReport{e.coeffs(), e.evaluate(1)};
}

PicardReport picard_check(std::size_t d, std::size_t n) {
  if (d == 0) throw DomainError("picard_check needs d >= 1");
  PicardReport r;
  r.d = d;
  r.n = n;
  r.coefficient = e_M_recursive(d, n).coeff(1);
  r.expected = d + 1;
  r.match = r.coefficient == static_cast<unsigned long>(r.expected);
  return r;
}

mpz_class predicted_point_count(std::size_t d, std::size_t n, const mpz_class& q) {
  return e_M_recursive(d, n).evaluate(q);
}

}  // namespace quot

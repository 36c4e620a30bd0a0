#include "quotmaps/tpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quotmaps/errors.hpp"

namespace quot {

TPoly::TPoly(Rational c) {
  if (!quot::is_zero(c)) c_.push_back(std::move(c));
}

TPoly::TPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void TPoly::trim() {
  while (!c_.empty() && quot::is_zero(c_.back())) c_.pop_back();
}

int TPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!quot::is_zero(c_[i])) return static_cast<int>(i);
  return kInfiniteValuation;
}

Rational TPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational();
  return c_[i];
}

Rational TPoly::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TPoly TPoly::shift_down(int v) const {
  if (is_zero()) return {};
  if (v < 0 || v > valuation()) throw DomainError("shift_down past valuation");
  return TPoly(std::vector<Rational>(c_.begin() + v, c_.end()));
}

std::string TPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (quot::is_zero(c_[i])) continue;
    Rational c = c_[i];
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    first = false;
    bool unit = c == Rational(1);
    if (i == 0 || !unit) os << c.str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return TPoly(std::move(out));
}

TPoly operator-(const TPoly& a) {
  std::vector<Rational> out;
  out.reserve(a.c_.size());
  for (const auto& c : a.c_) out.push_back(-c);
  return TPoly(std::move(out));
}

std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw DomainError("TPoly division by zero");
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {TPoly(), a};
  std::vector<Rational> quo(a.degree() - db + 1);
  const Rational& lead = bc.back();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(rem[i])) continue;
    Rational q = rem[i] / lead;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * bc[j];
  }
  return {TPoly(std::move(quo)), TPoly(std::move(rem))};
}

TPoly exact_div(const TPoly& a, const TPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NotDivisible("TPoly " + b.str() + " does not divide " + a.str());
  return q;
}

namespace {

// term := [coeff] ['*'] ['t' ['^' int]]
class TPolyParser {
 public:
  explicit TPolyParser(std::string_view s) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
  }

  TPoly run() {
    if (text_.empty()) fail("empty polynomial");
    TPoly acc;
    bool first = true;
    while (pos_ < text_.size()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = text_[pos_++] == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      TPoly term = parse_term();
      acc += neg ? -term : term;
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("malformed t-polynomial '" + text_ + "': " + why);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  TPoly parse_term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      coeff = Rational::parse(num);
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    int power = 0;
    if (peek() == 't') {
      ++pos_;
      power = 1;
      if (peek() == '^') {
        ++pos_;
        std::string e = digits();
        if (e.empty()) fail("missing exponent");
        power = std::stoi(e);
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    std::vector<Rational> c(power + 1);
    c[power] = coeff;
    return TPoly(std::move(c));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

TPoly TPoly::parse(std::string_view text) { return TPolyParser(text).run(); }

}  // namespace quot

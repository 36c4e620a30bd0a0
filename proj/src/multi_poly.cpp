#include "quotmaps/multi_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quotmaps/errors.hpp"

namespace quot {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw DomainError("duplicate variable name " + names_[i]);
}

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

std::size_t PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw DomainError("unknown variable " + std::string(name));
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return out;
}

Monomial monomial_div(const Monomial& b, const Monomial& a) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return out;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return degrevlex_compare(a.exps, b.exps) > 0; }

// Sorts, merges equal monomials and drops zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) out.back().coeff += t.coeff;
    else out.push_back(std::move(t));
    if (is_zero(out.back().coeff)) out.pop_back();
  }
  // a zero sum followed by the same monomial again cannot occur after sorting
  return out;
}

}  // namespace

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (const auto& t : terms)
    if (t.exps.size() != ring_->size()) throw DomainError("monomial arity does not match ring");
  terms_ = canonicalize(std::move(terms));
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  Monomial one(ring->size(), 0);
  return MultiPoly(ring, {Term{c, one}});
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw DomainError("variable index out of range");
  Monomial m(ring->size(), 0);
  m[index] = 1;
  return MultiPoly(ring, {Term{Rational(1), m}});
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->index_of(name);
  return variable(std::move(ring), i);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && quot::total_degree(terms_[0].exps) == 0);
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : quot::total_degree(terms_.front().exps);
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(ring_);
  if (quot::is_zero(c)) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

MultiPoly MultiPoly::times_term(const Rational& c, const Monomial& m) const {
  MultiPoly out(ring_);
  if (quot::is_zero(c)) return out;
  out.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves the order
  for (const auto& t : terms_) out.terms_.push_back(Term{t.coeff * c, monomial_mul(t.exps, m)});
  return out;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coeff());
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->size()) throw DomainError("evaluation point has wrong arity");
  Rational acc;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      for (unsigned e = 0; e < t.exps[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    bool constant = quot::total_degree(t.exps) == 0;
    bool unit = c == Rational(1);
    bool need_star = false;
    if (constant || !unit) {
      os << c.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (need_star) os << "*";
      os << ring_->names()[i];
      if (t.exps[i] > 1) os << "^" << t.exps[i];
      need_star = true;
    }
  }
  return os.str();
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw FieldMismatch("polynomials over different rings");
}

MultiPoly MultiPoly::combine(const MultiPoly& o, bool subtract) const {
  check_ring(o);
  MultiPoly out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : degrevlex_compare(terms_[i].exps, o.terms_[j].exps);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      Term t = o.terms_[j++];
      if (subtract) t.coeff = -t.coeff;
      out.terms_.push_back(std::move(t));
    } else {
      Rational v = subtract ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
      if (!quot::is_zero(v)) out.terms_.push_back(Term{std::move(v), terms_[i].exps});
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) { return *this = combine(o, false); }
MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this = combine(o, true); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back(Term{s.coeff * t.coeff, monomial_mul(s.exps, t.exps)});
  return MultiPoly(a.ring_, std::move(terms));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  return a.terms_ == b.terms_;
}

namespace {

class MultiPolyParser {
 public:
  MultiPolyParser(RingPtr ring, std::string_view s) : ring_(std::move(ring)) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
  }

  MultiPoly run() {
    if (text_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (pos_ < text_.size()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') neg = text_[pos_++] == '-';
      else if (!first) fail("expected '+' or '-'");
      Term t = parse_term();
      if (neg) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
    }
    return MultiPoly(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("malformed polynomial '" + text_ + "': " + why);
  }

  std::string take_while(bool (*pred)(char)) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

  Term parse_term() {
    Term t{Rational(1), Monomial(ring_->size(), 0)};
    bool any = false;
    while (true) {
      if (is_digit(peek())) {
        std::string num = take_while(is_digit);
        if (peek() == '/') {
          ++pos_;
          std::string den = take_while(is_digit);
          if (den.empty()) fail("missing denominator");
          num += "/" + den;
        }
        t.coeff *= Rational::parse(num);
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::string name = take_while(is_ident);
        std::size_t v = ring_->index_of(name);
        unsigned e = 1;
        if (peek() == '^') {
          ++pos_;
          std::string ex = take_while(is_digit);
          if (ex.empty()) fail("missing exponent");
          e = static_cast<unsigned>(std::stoul(ex));
        }
        t.exps[v] = static_cast<std::uint16_t>(t.exps[v] + e);
      } else {
        fail("expected a factor");
      }
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return t;
  }

  RingPtr ring_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(RingPtr ring, std::string_view text) { return MultiPolyParser(std::move(ring), text).run(); }

}  // namespace quot

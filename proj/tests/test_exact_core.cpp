#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "quotmaps/fp.hpp"
#include "quotmaps/homog_poly.hpp"
#include "quotmaps/multi_poly.hpp"
#include "quotmaps/rational.hpp"
#include "quotmaps/tpoly.hpp"

using namespace quot;
using gen::hp;

TEST_CASE("rationals stay reduced with a positive denominator") {
  Rational a = Rational::parse("-6/4");
  CHECK(a.str() == "-3/2");
  CHECK(a.denominator() == 2);
  CHECK(Rational::parse("-10/5").str() == "-2");
  CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str() == "1/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational::parse("6/-4"), DomainError);
  CHECK(Rational(-1) < Rational(1) / Rational(2));
}

TEST_CASE("prime field arithmetic") {
  Fp a(5, 7), b(4, 7);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((b - a).value() == 6);
  CHECK((a * b).value() == 6);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(Fp(-1, 7).value() == 6);
  CHECK_THROWS_AS(Fp(0, 7).inverse(), DomainError);
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), FieldMismatch);
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  for (std::int64_t v = 1; v < 13; ++v) CHECK((Fp(v, 13) * Fp(v, 13).inverse()).value() == 1);
}

TEST_CASE("hp_mul examples") {
  CHECK(hp_mul(hp({1, 0}), hp({0, 1})) == hp({0, 1, 0}));
  CHECK(hp_mul(hp({1, 1}), hp({1, -1})) == hp({1, 0, -1}));
  auto product = hp_mul(hp({1, 2}), hp({3, 1}));
  CHECK(product == hp({3, 7, 2}));
  CHECK(product.coeffs() == oracle::convolve(hp({1, 2}).coeffs(), hp({3, 1}).coeffs()));
  CHECK_THROWS_AS(hp_mul(HomogPoly<Fp>({Fp(1, 2)}), HomogPoly<Fp>({Fp(1, 3)})), FieldMismatch);
}

TEST_CASE("hp_gcd examples") {
  std::vector<HomogPoly<Rational>> a{hp({1, 0, 0}), hp({0, 1, 0})};
  CHECK(hp_gcd(a) == hp({1, 0}));
  std::vector<HomogPoly<Rational>> b{hp({1, 0, 0}), hp({0, 0, 1})};
  CHECK(hp_gcd(b) == hp({1}));
  std::vector<HomogPoly<Rational>> c{hp({1, 1, 0}), hp({0, 1, 1})};
  auto g = hp_gcd(c);
  CHECK(g == hp({1, 1}));
  CHECK(oracle::gcd_degree(std::vector<std::vector<Rational>>{c[0].coeffs(), c[1].coeffs()}) == 1);
  CHECK(hp_divide_exact(c[0], g) == hp({1, 0}));
  CHECK(hp_divide_exact(c[1], g) == hp({0, 1}));
  std::vector<HomogPoly<Rational>> zeros{hp({0, 0}), hp({0, 0})};
  CHECK_THROWS_AS(hp_gcd(zeros), DomainError);
  CHECK_THROWS_AS(hp_divide_exact(hp({1, 0, 1}), hp({1, 1})), NotDivisible);
}

TEST_CASE("hp_gcd is normalized and agrees with the oracle on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = 1 + trial % 4, n = 1 + trial % 3, t = trial % (d + 1);
    auto f = gen::planted_point(rng, d, n, t);
    auto g = hp_gcd(f.polys());
    CHECK(g.degree() == t);
    CHECK(g.degree() == oracle::gcd_degree(f));
    CHECK(g[g.leading_index()] == Rational(1));
    for (const auto& fi : f.polys()) CHECK_NOTHROW(hp_divide_exact(fi, g));
  }
}

TEST_CASE("planted common factors divide the gcd") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 2 + trial % 3, t = 1 + trial % 2;
    auto h = gen::nonzero_form(rng, t);
    std::vector<HomogPoly<Rational>> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(hp_mul(gen::form(rng, d - t), h));
    bool all_zero = true;
    for (const auto& f : fs) all_zero = all_zero && f.is_zero();
    if (all_zero) continue;
    CHECK_NOTHROW(hp_divide_exact(hp_gcd(fs), h));
  }
}

TEST_CASE("hp_mul is commutative and associative with additive degree") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = gen::form(rng, trial % 4), b = gen::form(rng, trial % 3), c = gen::form(rng, trial % 5);
    CHECK(hp_mul(a, b) == hp_mul(b, a));
    CHECK(hp_mul(hp_mul(a, b), c) == hp_mul(a, hp_mul(b, c)));
    CHECK(hp_mul(a, b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("gcd over a prime field") {
  auto fp = [](std::vector<long> v) {
    std::vector<Fp> c;
    for (long x : v) c.emplace_back(x, 3);
    return HomogPoly<Fp>(c);
  };
  // x^2 + xy = x(x+y) and xy + y^2 = y(x+y)
  std::vector<HomogPoly<Fp>> f{fp({1, 1, 0}), fp({0, 1, 1})};
  CHECK(hp_gcd(f) == fp({1, 1}));
  // x^2 - y^2 = (x-y)(x+y) and x^2 + 2xy + y^2 = (x+y)^2 share x+y; over F_3, 2 = -1
  std::vector<HomogPoly<Fp>> g{fp({1, 0, -1}), fp({1, 2, 1})};
  CHECK(hp_gcd(g) == fp({1, 1}));
}

TEST_CASE("TPoly parsing, valuation and division") {
  TPoly p = TPoly::parse("1 - 3/2*t + t^2");
  CHECK(p.coeffs() == std::vector<Rational>{Rational(1), Rational(-3) / Rational(2), Rational(1)});
  CHECK(p.valuation() == 0);
  CHECK(TPoly::parse("t^3 + 2*t^5").valuation() == 3);
  CHECK(TPoly().valuation() == TPoly::kInfiniteValuation);
  CHECK(TPoly::parse("t^3+2*t^5").shift_down(3) == TPoly::parse("1+2*t^2"));
  CHECK(exact_div(TPoly::parse("t^2-1"), TPoly::parse("t+1")) == TPoly::parse("t-1"));
  CHECK_THROWS_AS(exact_div(TPoly::parse("t^2+1"), TPoly::parse("t+1")), NotDivisible);
  CHECK_THROWS_AS(TPoly::parse("t^"), DomainError);
  CHECK(TPoly::parse(p.str()) == p);
}

TEST_CASE("TPoly valuation is additive") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    auto random_tpoly = [&] {
      std::vector<Rational> c;
      std::size_t len = 1 + rng() % 5;
      for (std::size_t i = 0; i < len; ++i) c.push_back(gen::scalar(rng));
      c.back() = gen::nonzero_scalar(rng);
      return TPoly(c);
    };
    TPoly a = random_tpoly(), b = random_tpoly();
    CHECK((a * b).valuation() == a.valuation() + b.valuation());
  }
}

TEST_CASE("MultiPoly canonical form and degrevlex order") {
  auto ring = PolyRing::make({"x", "y", "z"});
  auto p = MultiPoly::parse(ring, "z^2 + x*y - 3/4*y + 1 + x^2");
  // degrevlex with x > y > z: x^2 > x*y > z^2 among degree 2
  CHECK(p.str() == "x^2 + x*y + z^2 - 3/4*y + 1");
  CHECK(MultiPoly::parse(ring, p.str()) == p);
  CHECK(p.leading_monomial() == Monomial{2, 0, 0});
  // equal degree: the smaller power of the last variable wins
  CHECK(degrevlex_compare(Monomial{0, 3, 0}, Monomial{1, 0, 2}) > 0);
  CHECK(degrevlex_compare(Monomial{1, 1, 0}, Monomial{0, 0, 3}) < 0);
  auto x = MultiPoly::variable(ring, "x"), y = MultiPoly::variable(ring, "y");
  CHECK(((x + y) * (x - y)).str() == "x^2 - y^2");
  CHECK((x - x).is_zero());
  CHECK(p.evaluate({Rational(1), Rational(2), Rational(0)}) == Rational(5) / Rational(2));
  auto other = PolyRing::make({"u"});
  CHECK_THROWS_AS(x + MultiPoly::variable(other, "u"), FieldMismatch);
}

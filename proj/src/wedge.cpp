#include "quotmaps/wedge.hpp"

#include <limits>

namespace quot {

void normalize_coords(std::vector<Rational>& v) {
  auto first = std::find_if(v.begin(), v.end(), [](const Rational& c) { return !is_zero(c); });
  if (first == v.end()) return;
  mpz_class lcm = 1, gcd = 0;
  for (const auto& c : v) {
    mpz_class den = c.denominator(), num = c.numerator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
  }
  // content of the vector is gcd(numerators)/lcm(denominators)
  Rational scale(lcm, gcd);
  if (first->sign() < 0) scale = -scale;
  for (auto& c : v) c *= scale;
}

void normalize_coords(std::vector<Fp>& v) {
  auto first = std::find_if(v.begin(), v.end(), [](const Fp& c) { return !is_zero(c); });
  if (first == v.end()) return;
  Fp inv = first->inverse();
  for (auto& c : v) c *= inv;
}

MapPoint<Rational> specialize(const MapPoint<TPoly>& family, const Rational& t) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : family.polys()) {
    rows.emplace_back();
    for (const auto& c : g.coeffs()) rows.back().push_back(c.evaluate(t));
  }
  return MapPoint<Rational>::from_coeffs(rows);
}

FamilyLimit family_limit(const MapPoint<TPoly>& family, std::size_t m, unsigned jobs) {
  const std::size_t d = family.d();
  if (d == 0) throw DomainError("family limits need d >= 1");
  if (m + 1 < d) throw DomainError("family limits need m >= d-1");
  if (std::size_t t = torsion_degree(family); t != 0)
    throw DomainError("family lies generically in the boundary (generic torsion degree " + std::to_string(t) +
                      "): wedge level " + std::to_string(d - t) + " vanishes identically");

  // image in N_d: divide every coefficient by the common power of t and set t = 0
  int v = std::numeric_limits<int>::max();
  for (const auto& c : family.flatten()) v = std::min(v, c.valuation());
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : family.polys()) {
    rows.emplace_back();
    for (const auto& c : g.coeffs()) rows.back().push_back(c.coeff(v));
  }
  FamilyLimit out{{}, {}, normalize_projective(MapPoint<Rational>::from_coeffs(rows)), 0};
  out.projection_torsion = torsion_degree(out.projection);

  auto a = build_resultant_matrix(family, m);
  out.tuple.m = m;
  for (std::size_t l = 0; l < d; ++l) {
    const std::size_t r = m + 2 + l;
    auto minors = all_minors(a, r, jobs);
    int lv = TPoly::kInfiniteValuation;
    for (const auto& c : minors) lv = std::min(lv, c.valuation());
    if (lv == TPoly::kInfiniteValuation)
      throw InternalInconsistency("generically interior family with an identically zero level");
    WedgeVector<Rational> w;
    w.level = l;
    w.order = r;
    w.row_count = a.rows();
    w.col_count = a.cols();
    w.valuation = lv;
    w.coords.reserve(minors.size());
    for (const auto& c : minors) w.coords.push_back(c.coeff(lv));
    normalize_coords(w.coords);
    out.valuations.push_back(lv);
    out.tuple.levels.push_back(std::move(w));
  }
  return out;
}

}  // namespace quot

#include "quotmaps/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "quotmaps/errors.hpp"

namespace quot {

namespace {

// Index of the first basis element whose leading monomial divides m, or npos.
std::size_t find_reducer(const Monomial& m, const std::vector<MultiPoly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero() && divides(basis[i].leading_monomial(), m)) return i;
  return static_cast<std::size_t>(-1);
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  MultiPoly a = f.times_term(Rational(1) / f.leading_coeff(), monomial_div(l, f.leading_monomial()));
  MultiPoly b = g.times_term(Rational(1) / g.leading_coeff(), monomial_div(l, g.leading_monomial()));
  return a - b;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  MultiPoly rem(f.ring());
  MultiPoly p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    std::size_t k = find_reducer(lt.exps, basis);
    if (k == static_cast<std::size_t>(-1)) {
      rem += MultiPoly(f.ring(), {lt});
      p -= MultiPoly(f.ring(), {lt});
      continue;
    }
    const MultiPoly& g = basis[k];
    p -= g.times_term(lt.coeff / g.leading_coeff(), monomial_div(lt.exps, g.leading_monomial()));
  }
  return rem;
}

std::vector<MultiPoly> reduced_groebner_basis(const std::vector<MultiPoly>& gens, const GroebnerLimits& limits) {
  if (gens.empty()) return {};
  const RingPtr ring = gens[0].ring();
  if (ring->size() > limits.max_vars)
    throw GuardExceeded("Groebner guard: " + std::to_string(ring->size()) + " variables (limit " +
                        std::to_string(limits.max_vars) + ")");
  std::vector<MultiPoly> g;
  for (const auto& f : gens) {
    if (f.total_degree() > limits.max_generator_degree)
      throw GuardExceeded("Groebner guard: generator of degree " + std::to_string(f.total_degree()) + " (limit " +
                          std::to_string(limits.max_generator_degree) + ")");
    if (!f.is_zero()) g.push_back(f.monic());
  }
  if (g.empty()) return {};
  for (const auto& f : g)
    if (f.is_constant()) return {MultiPoly::constant(ring, Rational(1))};

  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, monomial_lcm(g[i].leading_monomial(), g[j].leading_monomial())});
      open.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    // normal selection strategy: smallest lcm first
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return degrevlex_compare(a.lcm, b.lcm) < 0;
    });
    Pair pr = *best;
    pairs.erase(best);
    open.erase({pr.i, pr.j});

    const Monomial& li = g[pr.i].leading_monomial();
    const Monomial& lj = g[pr.j].leading_monomial();
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(g[k].leading_monomial(), pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !open.count(key(pr.i, k)) && !open.count(key(pr.j, k));
    }
    if (chain) continue;

    if (++reductions > limits.max_reductions) throw GuardExceeded("Groebner guard: too many S-pair reductions");
    MultiPoly h = normal_form(s_polynomial(g[pr.i], g[pr.j]), g);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {MultiPoly::constant(ring, Rational(1))};
    g.push_back(h.monic());
    if (g.size() > limits.max_basis) throw GuardExceeded("Groebner guard: basis grew too large");
    add_pairs_for(g.size() - 1);
  }

  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].leading_monomial(), g[i].leading_monomial())) continue;
      // equal leading monomials: keep the lower index only
      redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // interreduce
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term& lt = minimal[i].leading_term();
    MultiPoly tail = minimal[i] - MultiPoly(ring, {lt});
    reduced.push_back((MultiPoly(ring, {lt}) + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return degrevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

}  // namespace quot

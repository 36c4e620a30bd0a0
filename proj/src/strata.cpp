#include "quotmaps/strata.hpp"

#include "quotmaps/parallel.hpp"

namespace quot {

std::uint64_t projective_count(std::uint64_t p, std::size_t k) {
  std::uint64_t acc = 0, pw = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    acc += pw;
    pw *= p;
  }
  return acc;
}

bool CensusTable::segre_ok() const {
  return !by_k.empty() && by_k[0] == projective_count(p, d) * projective_count(p, n);
}

namespace {

struct Representatives {
  std::size_t coords;               // (d+1)(n+1)
  std::uint32_t p;
  std::vector<std::uint64_t> start;  // start[pos] = first global index with leading coordinate pos
  std::uint64_t total;

  Representatives(std::size_t d, std::size_t n, std::uint32_t prime, const CensusLimits& limits)
      : coords((d + 1) * (n + 1)), p(prime) {
    if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
    long double affine = 1;
    for (std::size_t i = 0; i < coords; ++i) affine *= prime;
    if (affine > static_cast<long double>(limits.max_affine))
      throw GuardExceeded("enumerating N_" + std::to_string(d) + " over F_" + std::to_string(prime) + " needs " +
                          std::to_string(static_cast<double>(affine)) + " representatives (limit " +
                          std::to_string(limits.max_affine) + ")");
    total = 0;
    for (std::size_t pos = 0; pos < coords; ++pos) {
      start.push_back(total);
      std::uint64_t block = 1;
      for (std::size_t i = pos + 1; i < coords; ++i) block *= p;
      total += block;
    }
  }

  std::vector<Fp> at(std::uint64_t index) const {
    std::size_t pos = coords - 1;
    while (start[pos] > index) --pos;
    std::uint64_t u = index - start[pos];
    std::vector<Fp> flat(coords, Fp(0, p));
    flat[pos] = Fp(1, p);
    for (std::size_t i = coords; i-- > pos + 1;) {
      flat[i] = Fp(static_cast<std::int64_t>(u % p), p);
      u /= p;
    }
    return flat;
  }
};

MapPoint<Fp> unflatten(const std::vector<Fp>& flat, std::size_t d, std::size_t n) {
  std::vector<std::vector<Fp>> rows(n + 1);
  for (std::size_t i = 0; i <= n; ++i) rows[i].assign(flat.begin() + i * (d + 1), flat.begin() + (i + 1) * (d + 1));
  return MapPoint<Fp>::from_coeffs(rows);
}

// counts[t] = number of points of torsion degree t
std::vector<std::uint64_t> torsion_histogram(std::size_t d, std::size_t n, std::uint32_t p,
                                             const CensusLimits& limits, unsigned jobs) {
  Representatives reps(d, n, p, limits);
  jobs = std::max(1u, jobs);
  const std::uint64_t chunk = 4096;
  const std::size_t chunks = static_cast<std::size_t>((reps.total + chunk - 1) / chunk);
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(d + 1, 0));
  parallel_for(chunks, jobs, [&](std::size_t c) {
    std::uint64_t end = std::min<std::uint64_t>(reps.total, (c + 1) * chunk);
    for (std::uint64_t idx = c * chunk; idx < end; ++idx) {
      auto f = unflatten(reps.at(idx), d, n);
      std::size_t t = torsion_degree(f);
      std::size_t g = hp_gcd(f.polys()).degree();
      if (t != g)
        throw InternalInconsistency("F_" + std::to_string(p) + " point with rank torsion " + std::to_string(t) +
                                    " but gcd degree " + std::to_string(g));
      ++partial[c][t];
    }
  });
  std::vector<std::uint64_t> hist(d + 1, 0);
  for (const auto& part : partial)
    for (std::size_t t = 0; t <= d; ++t) hist[t] += part[t];
  return hist;
}

}  // namespace

void for_each_projective_point(std::size_t d, std::size_t n, std::uint32_t p,
                               const std::function<void(const MapPoint<Fp>&)>& visit, const CensusLimits& limits) {
  Representatives reps(d, n, p, limits);
  for (std::uint64_t idx = 0; idx < reps.total; ++idx) visit(unflatten(reps.at(idx), d, n));
}

std::uint64_t interior_count(std::size_t k, std::size_t n, std::uint32_t p, const CensusLimits& limits,
                             unsigned jobs) {
  if (k == 0) return projective_count(p, n);
  return torsion_histogram(k, n, p, limits, jobs)[0];
}

CensusTable census(std::size_t d, std::size_t n, std::uint32_t p, const CensusLimits& limits, unsigned jobs) {
  if (d == 0 || n == 0) throw DomainError("census needs d >= 1 and n >= 1");
  auto hist = torsion_histogram(d, n, p, limits, jobs);
  CensusTable table;
  table.p = p;
  table.d = d;
  table.n = n;
  table.interior = hist[0];
  table.total = hist[0];
  for (std::size_t k = 0; k < d; ++k) {
    table.by_k.push_back(hist[d - k]);
    table.total += hist[d - k];
    table.predictions.push_back(projective_count(p, d - k) * interior_count(k, n, p, limits, jobs));
  }
  table.projective_total = projective_count(p, (d + 1) * (n + 1) - 1);
  return table;
}

}  // namespace quot

#include "quotmaps/det_ideals.hpp"

#include <sstream>

#include "quotmaps/combinations.hpp"

namespace quot {

RingPtr chart_ring(std::size_t d, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 1; j <= d; ++j) names.push_back("c_" + std::to_string(i) + "_" + std::to_string(j));
  return PolyRing::make(std::move(names));
}

namespace {

MultiPoly chart_var(const RingPtr& ring, std::size_t d, std::size_t i, std::size_t j) {
  return MultiPoly::variable(ring, i * d + (j - 1));
}

}  // namespace

SymbolicMatrix chart_reduce(std::size_t d, std::size_t n, std::size_t m) {
  if (d == 0 || n == 0) throw DomainError("chart_reduce needs d >= 1 and n >= 1");
  RingPtr ring = chart_ring(d, n);
  const std::size_t n1 = n + 1;
  SymbolicMatrix c((m + 1) * n1, d + m + 1, MultiPoly(ring));
  for (std::size_t s = 0; s <= m; ++s) {
    c(s * n1, s) = MultiPoly::constant(ring, Rational(1));
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 1; j <= d; ++j) c(s * n1 + i, s + j) = chart_var(ring, d, i, j);
  }
  return c;
}

SymbolicMatrix generic_matrix(RingPtr ring, std::size_t rows, std::size_t cols, const std::string& prefix) {
  SymbolicMatrix out(rows, cols, MultiPoly(ring));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out(i, j) = MultiPoly::variable(ring, prefix + "_" + std::to_string(i) + "_" + std::to_string(j));
  return out;
}

IdealPresentation minor_ideal(const SymbolicMatrix& m, std::size_t r, std::string provenance) {
  if (r == 0 || r > m.rows() || r > m.cols()) throw DomainError("minor order out of range");
  RingPtr ring = m(0, 0).ring();
  IdealPresentation out{ring, {}, std::move(provenance)};
  if (out.provenance.empty()) out.provenance = "I_" + std::to_string(r);
  std::vector<MultiPoly> seen;  // monic forms of kept generators
  for (const auto& rs : colex_subsets(m.rows(), r))
    for (const auto& cs : colex_subsets(m.cols(), r)) {
      MultiPoly minor = laplace_determinant(m.submatrix(rs, cs));
      if (minor.is_zero()) continue;
      MultiPoly key = minor.monic();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      out.generators.push_back(std::move(minor));
    }
  return out;
}

IdealPresentation groebner_basis(const IdealPresentation& ideal, const GroebnerLimits& limits) {
  return IdealPresentation{ideal.ring, reduced_groebner_basis(ideal.generators, limits),
                           "reduced basis of " + ideal.provenance};
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const GroebnerLimits& limits) {
  if (!(*a.ring == *b.ring)) throw FieldMismatch("ideals live in different rings");
  return reduced_groebner_basis(a.generators, limits) == reduced_groebner_basis(b.generators, limits);
}

Matrix<Rational> specialize(const SymbolicMatrix& m, const std::vector<Rational>& point) {
  Matrix<Rational> out(m.rows(), m.cols(), Rational());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(point);
  return out;
}

std::string RowRelationConvention::describe() const {
  std::ostringstream os;
  os << (row_base == 1 ? "1-based" : "0-based") << " rows, ";
  os << (c_sign > 0 ? "+" : "-") << "c_{" << (c_shift == 0 ? "i" : "i-1") << ",j}*";
  os << (head_rows ? "row_{j(n+1)+1}" : "row_{j(n+1)+i-1}") << " + c_{0,j}*row_{j(n+1)+i}";
  return os.str();
}

RowRelationConvention printed_row_relation() { return RowRelationConvention{}; }

bool check_row_relation(std::size_t d, std::size_t n, std::size_t m, const RowRelationConvention& conv) {
  if (m < d) throw DomainError("the row relation needs m >= d");
  SymbolicMatrix c = chart_reduce(d, n, m);
  RingPtr ring = c(0, 0).ring();
  const long rows = static_cast<long>(c.rows());
  const long n1 = static_cast<long>(n + 1);

  auto row_of = [&](long number, std::vector<MultiPoly>& out) {
    long idx = number - conv.row_base;
    if (idx < 0 || idx >= rows) return false;
    out.assign(c.row(static_cast<std::size_t>(idx)).begin(), c.row(static_cast<std::size_t>(idx)).end());
    return true;
  };

  for (long i = 2; i <= n1; ++i) {
    std::vector<MultiPoly> sum;
    if (!row_of(i, sum)) return false;
    const long ci = i + conv.c_shift;
    if (ci < 0 || ci > static_cast<long>(n)) return false;
    for (long j = 1; j <= static_cast<long>(d); ++j) {
      std::vector<MultiPoly> r1, r2;
      long first = conv.head_rows ? j * n1 + 1 : j * n1 + i - 1;
      if (!row_of(first, r1) || !row_of(j * n1 + i, r2)) return false;
      MultiPoly a = chart_var(ring, d, static_cast<std::size_t>(ci), static_cast<std::size_t>(j));
      if (conv.c_sign < 0) a = -a;
      MultiPoly b = chart_var(ring, d, 0, static_cast<std::size_t>(j));
      for (std::size_t col = 0; col < sum.size(); ++col) sum[col] += a * r1[col] + b * r2[col];
    }
    for (const auto& e : sum)
      if (!e.is_zero()) return false;
  }
  return true;
}

RowRelationReport search_row_relation(std::size_t d, std::size_t n, std::size_t m) {
  RowRelationReport report;
  report.printed_holds = check_row_relation(d, n, m, printed_row_relation());
  for (int base : {1, 0})
    for (int shift : {0, -1})
      for (int sign : {+1, -1})
        for (bool head : {false, true}) {
          RowRelationConvention conv{base, shift, sign, head};
          if (check_row_relation(d, n, m, conv)) report.validating.push_back(conv);
        }
  if (!report.printed_holds) {
    if (report.validating.empty()) report.finding = "no nearby convention validates the row relation";
    else {
      report.finding = "printed indexing fails; validated by: ";
      for (std::size_t i = 0; i < report.validating.size(); ++i)
        report.finding += (i ? "; " : "") + report.validating[i].describe();
    }
  }
  return report;
}

MinorExtractionReport check_minor_extraction(std::size_t d, std::size_t n, std::size_t m) {
  if (m < 1) throw DomainError("minor extraction needs m >= 1");
  SymbolicMatrix c = chart_reduce(d, n, m);
  RingPtr ring = c(0, 0).ring();
  const std::size_t n1 = n + 1;
  MinorExtractionReport report;
  auto col_sets = colex_subsets(c.cols(), m + 2);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= d; ++j) {
      std::vector<std::size_t> rows;
      for (std::size_t s = 0; s <= m; ++s) rows.push_back(s * n1);
      rows.push_back(m * n1 + i);
      MultiPoly target = chart_var(ring, d, i, j);
      bool found = false;
      for (const auto& cs : col_sets) {
        MultiPoly det = laplace_determinant(c.submatrix(rows, cs));
        int sign = det == target ? 1 : det == -target ? -1 : 0;
        if (sign == 0) continue;
        report.witnesses.push_back({i, j, rows, cs, sign});
        found = true;
        break;
      }
      if (!found) report.missing.emplace_back(i, j);
    }
  return report;
}

namespace {

IdealCheck compare(std::string label, const IdealPresentation& a, const IdealPresentation& b,
                   const GroebnerLimits& limits) {
  IdealCheck check{std::move(label), true, false, {}};
  try {
    auto ga = reduced_groebner_basis(a.generators, limits);
    auto gb = reduced_groebner_basis(b.generators, limits);
    check.equal = ga == gb;
    if (!check.equal) {
      for (std::size_t i = 0; i < std::max(ga.size(), gb.size()); ++i) {
        std::string sa = i < ga.size() ? ga[i].str() : "(none)";
        std::string sb = i < gb.size() ? gb[i].str() : "(none)";
        if (sa != sb) {
          check.detail = "basis element " + std::to_string(i) + ": " + sa + " vs " + sb;
          break;
        }
      }
    }
  } catch (const GuardExceeded& e) {
    check.in_guard = false;
    check.detail = e.what();
  }
  return check;
}

std::string ideal_name(std::size_t r, std::size_t m) {
  return "I_" + std::to_string(r) + "(C_" + std::to_string(m) + ")";
}

}  // namespace

IdealCheck check_degree0_stability(std::size_t d, std::size_t n, std::size_t m, const GroebnerLimits& limits) {
  auto base = minor_ideal(chart_reduce(d, n, 0), 2, ideal_name(2, 0));
  auto other = minor_ideal(chart_reduce(d, n, m), 2 + m, ideal_name(2 + m, m));
  return compare(base.provenance + " = " + other.provenance, base, other, limits);
}

IdealCheck check_stability_step(std::size_t d, std::size_t n, std::size_t k, std::size_t m,
                                const GroebnerLimits& limits) {
  if (m == 0) throw DomainError("stability step needs m >= 1");
  auto hi = minor_ideal(chart_reduce(d, n, m), k + 2 + m, ideal_name(k + 2 + m, m));
  auto lo = minor_ideal(chart_reduce(d, n, m - 1), k + 1 + m, ideal_name(k + 1 + m, m - 1));
  return compare(hi.provenance + " = " + lo.provenance, hi, lo, limits);
}

IdealCheck check_conjectured_equality(std::size_t d, std::size_t n, std::size_t k, std::size_t m,
                                      const GroebnerLimits& limits) {
  if (m < k) throw DomainError("conjectured equality needs m >= k");
  auto hi = minor_ideal(chart_reduce(d, n, m), k + 2 + m, ideal_name(k + 2 + m, m));
  auto lo = minor_ideal(chart_reduce(d, n, k), 2 * k + 2, ideal_name(2 * k + 2, k));
  return compare(hi.provenance + " = " + lo.provenance + " (experimental)", hi, lo, limits);
}

}  // namespace quot

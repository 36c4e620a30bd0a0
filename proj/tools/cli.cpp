#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quotmaps/det_ideals.hpp"
#include "quotmaps/hodge.hpp"
#include "quotmaps/io.hpp"
#include "quotmaps/resultant.hpp"
#include "quotmaps/strata.hpp"
#include "quotmaps/wedge.hpp"

namespace quot::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string input;
  std::optional<std::size_t> d, n, m, k, k_max;
  std::optional<std::uint32_t> p;
  std::string field;
  std::string format = "text";
  unsigned jobs = 1;
  std::string out_path;
  bool family = false;
  bool experimental = false;
  std::vector<std::uint32_t> primes;
  std::uint64_t unsafe_max_affine = 0;
  unsigned unsafe_max_degree = 0;
  std::size_t unsafe_max_vars = 0;
};

struct Result {
  json doc = json::object();
  std::string text;
  std::vector<std::string> failures;
  bool guard_hit = false;
};

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required flag ") + flag);
  return *v;
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

GroebnerLimits groebner_limits(const RunConfig& cfg) {
  GroebnerLimits limits;
  if (cfg.unsafe_max_degree) limits.max_generator_degree = cfg.unsafe_max_degree;
  if (cfg.unsafe_max_vars) limits.max_vars = cfg.unsafe_max_vars;
  return limits;
}

CensusLimits census_limits(const RunConfig& cfg) {
  CensusLimits limits;
  if (cfg.unsafe_max_affine) limits.max_affine = cfg.unsafe_max_affine;
  return limits;
}

std::optional<FieldSpec> field_override(const RunConfig& cfg) {
  if (cfg.field.empty()) return std::nullopt;
  return FieldSpec::parse(cfg.field);
}

// ---- classify ----

template <class F>
Result classify(const MapPoint<F>& f, const RunConfig& cfg, const FieldSpec& field) {
  Result res;
  const std::size_t d = f.d();
  if (d == 0) throw DomainError("classify needs d >= 1");
  std::size_t k_max = cfg.k_max.value_or(d + 1);
  StratumReport report = rank_profile(f, k_max);
  HomogPoly<F> g = hp_gcd(f.polys());
  bool agrees = g.degree() == report.torsion_degree;
  if (!agrees)
    res.failures.push_back("gcd degree " + std::to_string(g.degree()) + " != torsion degree " +
                           std::to_string(report.torsion_degree));
  res.doc = {{"command", "classify"},
             {"field", field.str()},
             {"point", to_json(f)},
             {"report", to_json(report)},
             {"gcd", serialize(g)},
             {"gcd_text", form_str(g)},
             {"oracle_agrees", agrees}};
  std::ostringstream os;
  if (report.interior()) os << "interior, torsion 0";
  else os << "torsion " << report.torsion_degree << ", stratum " << stratum_label(report);
  os << ", gcd " << form_str(g) << ", ranks " << join(report.ranks) << ", oracle " << (agrees ? "agrees" : "DISAGREES")
     << "\n";
  if (cfg.k) {
    std::size_t m = cfg.m.value_or(std::max(d - 1, *cfg.k));
    bool member = in_stratum(f, *cfg.k, m);
    res.doc["in_stratum"] = {{"k", *cfg.k}, {"m", m}, {"member", member}};
    os << "in C_{" << d << "," << *cfg.k << "} (m = " << m << "): " << (member ? "yes" : "no") << "\n";
  }
  res.text = os.str();
  return res;
}

Result cmd_classify(const RunConfig& cfg) {
  PointFile file = read_point_file_path(cfg.input);
  auto override = field_override(cfg);
  FieldSpec field = override.value_or(file.field);
  return std::visit([&](const auto& f) { return classify(f, cfg, field); }, to_point(file, override));
}

// ---- wedge / limit ----

Result family_result(const PointFile& file, const RunConfig& cfg) {
  MapPoint<TPoly> family = to_family(file);
  std::size_t m = cfg.m.value_or(family.d() == 0 ? 0 : family.d() - 1);
  FamilyLimit limit = family_limit(family, m, cfg.jobs);
  Result res;
  res.doc = {{"command", "limit"}, {"field", "Q"}, {"limit", to_json(limit)}};
  std::ostringstream os;
  os << "valuations";
  for (int v : limit.valuations) os << " " << v;
  os << "\nprojection";
  for (const auto& g : limit.projection.polys()) os << " [" << form_str(g) << "]";
  os << " (torsion " << limit.projection_torsion << ")\n" << to_text(limit.tuple);
  res.text = os.str();
  return res;
}

Result cmd_wedge(const RunConfig& cfg) {
  PointFile file = read_point_file_path(cfg.input);
  if (cfg.family) return family_result(file, cfg);
  auto override = field_override(cfg);
  FieldSpec field = override.value_or(file.field);
  return std::visit(
      [&](const auto& f) {
        if (f.d() == 0) throw DomainError("wedge needs d >= 1");
        std::size_t m = cfg.m.value_or(f.d() - 1);
        auto tuple = graph_point(f, m, cfg.jobs);
        Result res;
        res.doc = {{"command", "wedge"}, {"field", field.str()}, {"point", to_json(f)}, {"tuple", to_json(tuple)}};
        res.text = to_text(tuple);
        return res;
      },
      to_point(file, override));
}

Result cmd_limit(const RunConfig& cfg) { return family_result(read_point_file_path(cfg.input), cfg); }

// ---- census ----

Result cmd_census(const RunConfig& cfg) {
  std::size_t d = require(cfg.d, "--d"), n = require(cfg.n, "--n");
  if (!cfg.p) throw DomainError("missing required flag --p");
  CensusTable table = census(d, n, *cfg.p, census_limits(cfg), cfg.jobs);
  Result res;
  if (!table.checksum_ok()) res.failures.push_back("stratum counts do not sum to |P^N(F_p)|");
  if (!table.products_ok()) res.failures.push_back("stratum counts differ from product predictions");
  if (!table.segre_ok()) res.failures.push_back("deepest stratum differs from the Segre count");
  res.doc = {{"command", "census"}, {"census", to_json(table)}};
  res.text = to_text(table);
  return res;
}

// ---- ideals ----

Result cmd_ideals(const RunConfig& cfg) {
  std::size_t d = require(cfg.d, "--d"), n = require(cfg.n, "--n");
  if (d == 0 || n == 0) throw DomainError("ideals needs d >= 1 and n >= 1");
  std::size_t m = cfg.m.value_or(std::max<std::size_t>(1, d - 1));
  if (m == 0) throw DomainError("ideals needs m >= 1");
  GroebnerLimits limits = groebner_limits(cfg);
  Result res;
  std::ostringstream os;
  json checks = json::array();

  auto record = [&](const IdealCheck& c, bool required) {
    checks.push_back(to_json(c));
    if (!c.in_guard) {
      os << c.label << ": SKIPPED (" << c.detail << ")\n";
      if (required) res.guard_hit = true;
      return;
    }
    os << c.label << ": " << (c.equal ? "PASS" : "FAIL") << "\n";
    if (!c.equal && required) res.failures.push_back(c.label + ": " + c.detail);
  };

  record(check_degree0_stability(d, n, m, limits), true);
  for (std::size_t k = 1; k < d; ++k) record(check_stability_step(d, n, k, d, limits), false);
  json experimental = json::array();
  if (cfg.experimental)
    for (std::size_t k = 1; k < d; ++k)
      if (m > k) {
        IdealCheck c = check_conjectured_equality(d, n, k, m, limits);
        experimental.push_back(to_json(c));
        os << c.label << ": " << (!c.in_guard ? "SKIPPED" : c.equal ? "holds" : "fails") << "\n";
      }

  std::size_t m_rel = std::max(m, d);
  RowRelationReport rel = search_row_relation(d, n, m_rel);
  os << "row relation (m = " << m_rel << "): "
     << (rel.printed_holds ? "PASS" : rel.ok() ? "FINDING: " + rel.finding : "FAIL") << "\n";
  if (!rel.ok()) res.failures.push_back("row relation: " + rel.finding);

  MinorExtractionReport ext = check_minor_extraction(d, n, m);
  os << "minor extraction (m = " << m << "): " << (ext.ok() ? "PASS" : "FAIL") << "\n";
  if (!ext.ok()) res.failures.push_back("minor extraction: some c_ij not realized");

  res.doc = {{"command", "ideals"},
             {"d", d},
             {"n", n},
             {"m", m},
             {"checks", checks},
             {"experimental", experimental},
             {"row_relation", to_json(rel)},
             {"row_relation_m", m_rel},
             {"minor_extraction", to_json(ext)}};
  res.text = os.str();
  return res;
}

// ---- hodge ----

Result cmd_hodge(const RunConfig& cfg) {
  std::size_t d = require(cfg.d, "--d"), n = require(cfg.n, "--n");
  LambdaPoly rec = e_M_recursive(d, n);
  LambdaPoly closed = e_M_closed(d, n);
  BettiReport b = betti(d, n);
  Result res;
  bool formulas_agree = rec == closed;
  bool palindromic = rec.is_palindromic();
  bool degree_ok = rec.degree() == static_cast<int>((d + 1) * (n + 1) - 1);
  if (!formulas_agree) res.failures.push_back("recursive and closed formulas differ");
  if (!palindromic) res.failures.push_back("e(M_d) is not palindromic");
  if (!degree_ok) res.failures.push_back("deg e(M_d) != dim M_d");

  std::vector<std::string> betti_str;
  for (const auto& x : b.even_betti) betti_str.push_back(x.get_str());
  res.doc = {{"command", "hodge"},
             {"d", d},
             {"n", n},
             {"e_N", to_json(e_N(d, n))},
             {"e_M", to_json(rec)},
             {"formulas_agree", formulas_agree},
             {"palindromic", palindromic},
             {"degree_ok", degree_ok},
             {"even_betti", betti_str},
             {"euler", b.euler.get_str()}};

  std::ostringstream os;
  os << "e(M_" << d << "), n = " << n << "\n";
  os << "coefficients";
  for (const auto& x : b.even_betti) os << " " << x.get_str();
  os << "\nEuler characteristic " << b.euler.get_str() << "\n";
  os << "recursive = closed: " << (formulas_agree ? "PASS" : "FAIL") << "\n";
  os << "palindromic: " << (palindromic ? "PASS" : "FAIL") << "\n";

  if (d >= 1) {
    PicardReport pic = picard_check(d, n);
    res.doc["picard"] = {{"coefficient", pic.coefficient.get_str()},
                         {"expected", pic.expected},
                         {"match", pic.match},
                         {"flagged", !pic.match && n == 1}};
    os << "Picard: coefficient of L is " << pic.coefficient.get_str() << ", d+1 = " << pic.expected << ": ";
    if (pic.match) os << "match\n";
    else if (n == 1) os << "mismatch (FLAG: n = 1, the d-k = 1 centers are divisors)\n";
    else {
      os << "MISMATCH\n";
      res.failures.push_back("Picard coefficient differs from d+1");
    }
  }
  if (!cfg.primes.empty()) {
    json preds = json::object();
    for (auto q : cfg.primes) {
      if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
      std::string v = predicted_point_count(d, n, mpz_class(q)).get_str();
      preds[std::to_string(q)] = v;
      os << "prediction #M_" << d << "(F_" << q << ") = " << v << "\n";
    }
    res.doc["predictions"] = preds;
  }
  res.text = os.str();
  return res;
}

// ---- selftest ----

MapPoint<Rational> qpoint(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return MapPoint<Rational>::from_coeffs(r);
}

Result cmd_selftest(const RunConfig&) {
  Result res;
  std::ostringstream os;
  json items = json::array();
  auto check = [&](const std::string& name, bool ok) {
    os << (ok ? "PASS " : "FAIL ") << name << "\n";
    items.push_back({{"name", name}, {"ok", ok}});
    if (!ok) res.failures.push_back(name);
  };

  check("torsion (x^2, xy) = 1", torsion_degree(qpoint({{1, 0, 0}, {0, 1, 0}})) == 1);
  check("torsion (x^2, y^2) = 0", torsion_degree(qpoint({{1, 0, 0}, {0, 0, 1}})) == 0);
  {
    auto t = census(2, 1, 2);
    check("census N_2 over F_2: 63 = 24 + 18 + 21",
          t.total == 63 && t.interior == 24 && t.by_k == std::vector<std::uint64_t>{21, 18} && t.products_ok());
  }
  {
    auto w = graph_point(qpoint({{1, 0, 0}, {0, 0, 1}}), 1);
    check("wedge (x^2, y^2), m = 1: top level [1]",
          w.levels.size() == 2 && w.levels[1].coords == std::vector<Rational>{Rational(1)});
  }
  {
    auto fam = MapPoint<TPoly>::from_coeffs({{TPoly(1), TPoly(0), TPoly(0)}, {TPoly(0), TPoly(1), TPoly::t()}});
    auto lim = family_limit(fam, 1);
    check("limit of (x^2, xy + t y^2): valuations (0, 2)", lim.valuations == std::vector<int>{0, 2});
  }
  check("ideals d=2 n=1 m=1: I_2(C_0) = I_3(C_1)", check_degree0_stability(2, 1, 1).equal);
  check("hodge d=2 n=1: recursive = closed = 1,2,3,3,2,1",
        e_M_recursive(2, 1) == e_M_closed(2, 1) && e_M_recursive(2, 1) == LambdaPoly::from_ints({1, 2, 3, 3, 2, 1}));

  res.doc = {{"command", "selftest"}, {"checks", items}};
  res.text = os.str();
  return res;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--jobs", cfg.jobs, "worker threads (default: $QUOTMAPS_JOBS or 1)")->check(CLI::PositiveNumber);
  sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
}

unsigned default_jobs() {
  if (const char* env = std::getenv("QUOTMAPS_JOBS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.jobs = default_jobs();
  CLI::App app{"Resultant stratification of degree-d maps P^1 -> P^n and its compactification", "quotmaps"};
  app.require_subcommand(1);

  auto input_opt = [&](CLI::App* sub) { sub->add_option("--in,input", cfg.input, "input file")->required(); };
  auto dn = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "degree d")->required();
    sub->add_option("--n", cfg.n, "target dimension n")->required();
  };

  auto* classify = app.add_subcommand("classify", "torsion degree, stratum and rank profile of a point");
  input_opt(classify);
  classify->add_option("--field", cfg.field, "interpret coefficients over Q or Fp:<p>");
  classify->add_option("--k-max", cfg.k_max, "largest k in the rank profile (default d+1)");
  classify->add_option("--k", cfg.k, "also test membership in C_{d,k}");
  classify->add_option("--m", cfg.m, "matrix index for the membership test");

  auto* wedge = app.add_subcommand("wedge", "graph coordinates of an interior point (or a family limit)");
  input_opt(wedge);
  wedge->add_option("--field", cfg.field, "interpret coefficients over Q or Fp:<p>");
  wedge->add_option("--m", cfg.m, "matrix index m >= d-1 (default d-1)");
  wedge->add_flag("--family", cfg.family, "input is a one-parameter family; emit its limit");

  auto* limit = app.add_subcommand("limit", "limit of a one-parameter family in the graph closure");
  input_opt(limit);
  limit->add_option("--m", cfg.m, "matrix index m >= d-1 (default d-1)");

  auto* census_cmd = app.add_subcommand("census", "stratum counts of N_d over F_p");
  dn(census_cmd);
  census_cmd->add_option("--p", cfg.p, "prime")->required();
  census_cmd->add_option("--unsafe-max-affine", cfg.unsafe_max_affine, "override the enumeration size guard");

  auto* ideals = app.add_subcommand("ideals", "determinantal-ideal identities on the chart a_00 != 0");
  dn(ideals);
  ideals->add_option("--m", cfg.m, "matrix index m >= 1 (default max(1, d-1))");
  ideals->add_option("--k", cfg.k, "unused; accepted for symmetry");
  ideals->add_flag("--experimental", cfg.experimental, "also test I_{d,k;m} = I_{d,k;k}");
  ideals->add_option("--unsafe-max-degree", cfg.unsafe_max_degree, "override the Groebner generator-degree guard");
  ideals->add_option("--unsafe-max-vars", cfg.unsafe_max_vars, "override the Groebner variable-count guard");

  auto* hodge = app.add_subcommand("hodge", "virtual Hodge polynomial and Betti numbers of M_d");
  dn(hodge);
  hodge->add_option("--primes", cfg.primes, "evaluate e(M_d) at these primes")->delimiter(',');

  auto* selftest = app.add_subcommand("selftest", "quick end-to-end sanity checks");

  for (auto* sub : {classify, wedge, limit, census_cmd, ideals, hodge, selftest}) add_common(sub, cfg);

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Result res;
  try {
    if (*classify) res = cmd_classify(cfg);
    else if (*wedge) res = cmd_wedge(cfg);
    else if (*limit) res = cmd_limit(cfg);
    else if (*census_cmd) res = cmd_census(cfg);
    else if (*ideals) res = cmd_ideals(cfg);
    else if (*hodge) res = cmd_hodge(cfg);
    else res = cmd_selftest(cfg);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  res.doc["failures"] = res.failures;
  std::string payload = cfg.format == "json" ? res.doc.dump(2) + "\n" : res.text;
  if (cfg.format == "text" && !res.failures.empty()) {
    payload += "failures:\n";
    for (const auto& f : res.failures) payload += "  " + f + "\n";
  }
  if (cfg.out_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kInputError;
    }
    file << payload;
  }
  if (!res.failures.empty()) return kInconsistency;
  if (res.guard_hit) return kGuardExceeded;
  return kOk;
}

}  // namespace quot::cli

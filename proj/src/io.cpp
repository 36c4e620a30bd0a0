#include "quotmaps/io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>

#include "quotmaps/combinations.hpp"

namespace quot {

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return {};
  if (text.substr(0, 3) != "Fp:" || text.size() == 3)
    throw DomainError("field must be 'Q' or 'Fp:<prime>', got '" + std::string(text) + "'");
  std::string digits(text.substr(3));
  for (char c : digits)
    if (c < '0' || c > '9') throw DomainError("malformed prime in '" + std::string(text) + "'");
  if (digits.size() > 10) throw DomainError("prime too large in '" + std::string(text) + "'");
  std::uint64_t p = std::stoull(digits);
  if (p >= (1ull << 31) || !is_prime(p)) throw DomainError(digits + " is not a prime below 2^31");
  return FieldSpec{static_cast<std::uint32_t>(p)};
}

namespace {

struct Word {
  std::string text;
  std::size_t column;
};

std::vector<Word> split_words(const std::string& line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_size(const Word& w, std::size_t line) {
  if (w.text.empty() || w.text.size() > 6) throw ParseError(line, w.column, "expected a small nonnegative integer");
  for (char c : w.text)
    if (c < '0' || c > '9') throw ParseError(line, w.column, "expected a nonnegative integer, got '" + w.text + "'");
  return std::stoul(w.text);
}

}  // namespace

PointFile read_point_file(std::istream& in) {
  PointFile file;
  std::optional<std::size_t> n, d;
  bool have_field = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto words = split_words(line);
    if (words.empty()) continue;
    const Word& key = words[0];
    auto expect_one = [&] {
      if (words.size() != 2) throw ParseError(lineno, key.column, "'" + key.text + "' takes exactly one value");
    };
    if (key.text == "n" || key.text == "d") {
      expect_one();
      auto& slot = key.text == "n" ? n : d;
      if (slot) throw ParseError(lineno, key.column, "duplicate '" + key.text + "'");
      slot = parse_size(words[1], lineno);
    } else if (key.text == "field") {
      expect_one();
      if (have_field) throw ParseError(lineno, key.column, "duplicate 'field'");
      try {
        file.field = FieldSpec::parse(words[1].text);
      } catch (const DomainError& e) {
        throw ParseError(lineno, words[1].column, e.what());
      }
      have_field = true;
      file.field_line = lineno;
    } else if (key.text == "row") {
      if (!n || !d) throw ParseError(lineno, key.column, "'row' before 'n' and 'd'");
      if (words.size() != *d + 2)
        throw ParseError(lineno, key.column,
                         "row needs d+1 = " + std::to_string(*d + 1) + " coefficients, found " +
                             std::to_string(words.size() - 1));
      std::vector<PointFile::Token> row;
      for (std::size_t i = 1; i < words.size(); ++i) row.push_back({words[i].text, lineno, words[i].column});
      file.rows.push_back(std::move(row));
      file.row_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, key.column, "unknown key '" + key.text + "'");
    }
  }
  if (!n) throw ParseError(lineno + 1, 1, "missing 'n'");
  if (!d) throw ParseError(lineno + 1, 1, "missing 'd'");
  if (!have_field) throw ParseError(lineno + 1, 1, "missing 'field'");
  if (*n == 0) throw ParseError(lineno + 1, 1, "n must be at least 1");
  if (file.rows.size() != *n + 1)
    throw ParseError(lineno + 1, 1,
                     "expected n+1 = " + std::to_string(*n + 1) + " rows, found " + std::to_string(file.rows.size()));
  file.n = *n;
  file.d = *d;
  return file;
}

PointFile read_point_file_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return read_point_file(in);
}

namespace {

template <class T, class Conv>
std::vector<std::vector<T>> convert_rows(const PointFile& file, Conv conv) {
  std::vector<std::vector<T>> rows;
  bool all_zero = true;
  for (const auto& r : file.rows) {
    rows.emplace_back();
    for (const auto& tok : r) {
      try {
        rows.back().push_back(conv(tok.text));
      } catch (const DomainError& e) {
        throw ParseError(tok.line, tok.column, e.what());
      }
      all_zero = all_zero && is_zero(rows.back().back());
    }
  }
  if (all_zero) throw ParseError(file.row_lines.front(), 1, "all rows are zero; not a point of N_d");
  return rows;
}

}  // namespace

AnyPoint to_point(const PointFile& file, std::optional<FieldSpec> override) {
  FieldSpec field = override.value_or(file.field);
  if (field.is_rational()) {
    if (!file.field.is_rational()) throw ParseError(file.field_line, 1, "cannot lift F_p coefficients to Q");
    return MapPoint<Rational>::from_coeffs(convert_rows<Rational>(file, Rational::parse));
  }
  const std::uint32_t p = field.prime;
  if (!file.field.is_rational() && file.field.prime != p)
    throw ParseError(file.field_line, 1, "file is over " + file.field.str() + ", requested " + field.str());
  return MapPoint<Fp>::from_coeffs(convert_rows<Fp>(file, [p](const std::string& s) {
    Rational q = Rational::parse(s);
    mpz_class num = q.numerator() % p, den = q.denominator() % p;
    if (den == 0) throw DomainError("denominator of " + s + " vanishes mod " + std::to_string(p));
    return Fp(num.get_si(), p) / Fp(den.get_si(), p);
  }));
}

MapPoint<TPoly> to_family(const PointFile& file) {
  if (!file.field.is_rational()) throw ParseError(file.field_line, 1, "families are supported over Q only");
  return MapPoint<TPoly>::from_coeffs(convert_rows<TPoly>(file, TPoly::parse));
}

nlohmann::json to_json(const StratumReport& r) {
  nlohmann::json j{{"d", r.d}, {"torsion_degree", r.torsion_degree}, {"ranks", r.ranks},
                   {"stratum_label", stratum_label(r)}};
  j["stratum"] = r.stratum ? nlohmann::json(*r.stratum) : nlohmann::json("interior");
  return j;
}

namespace {

template <class F>
nlohmann::json wedge_json(const WedgeTuple<F>& w) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& v : w.levels) {
    auto rs = colex_subsets(v.row_count, v.order);
    auto cs = colex_subsets(v.col_count, v.order);
    nlohmann::json coords = nlohmann::json::array();
    for (std::size_t k = 0; k < v.coords.size(); ++k)
      coords.push_back({{"rows", rs[k / cs.size()]}, {"cols", cs[k % cs.size()]}, {"value", to_string(v.coords[k])}});
    levels.push_back({{"level", v.level}, {"order", v.order}, {"valuation", v.valuation}, {"coords", coords}});
  }
  return {{"m", w.m}, {"levels", levels}};
}

std::string subset_str(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

template <class F>
std::string wedge_text(const WedgeTuple<F>& w) {
  std::ostringstream os;
  os << "m " << w.m << "\n";
  for (const auto& v : w.levels) {
    os << "level " << v.level << " order " << v.order << " valuation " << v.valuation << " coords "
       << v.coords.size() << "\n";
    auto rs = colex_subsets(v.row_count, v.order);
    auto cs = colex_subsets(v.col_count, v.order);
    for (std::size_t k = 0; k < v.coords.size(); ++k)
      os << "  " << subset_str(rs[k / cs.size()]) << " " << subset_str(cs[k % cs.size()]) << " "
         << to_string(v.coords[k]) << "\n";
  }
  return os.str();
}

}  // namespace

nlohmann::json to_json(const WedgeTuple<Rational>& w) { return wedge_json(w); }
nlohmann::json to_json(const WedgeTuple<Fp>& w) { return wedge_json(w); }
std::string to_text(const WedgeTuple<Rational>& w) { return wedge_text(w); }
std::string to_text(const WedgeTuple<Fp>& w) { return wedge_text(w); }

nlohmann::json to_json(const FamilyLimit& limit) {
  return {{"tuple", to_json(limit.tuple)},
          {"valuations", limit.valuations},
          {"projection", to_json(limit.projection)},
          {"projection_torsion", limit.projection_torsion}};
}

nlohmann::json to_json(const CensusTable& t) {
  nlohmann::json strata = nlohmann::json::array();
  for (std::size_t k = 0; k < t.by_k.size(); ++k)
    strata.push_back({{"k", k}, {"torsion_degree", t.d - k}, {"count", t.by_k[k]}, {"prediction", t.predictions[k]},
                      {"match", t.by_k[k] == t.predictions[k]}});
  return {{"p", t.p},
          {"d", t.d},
          {"n", t.n},
          {"interior", t.interior},
          {"strata", strata},
          {"total", t.total},
          {"projective_total", t.projective_total},
          {"checksum_ok", t.checksum_ok()},
          {"products_ok", t.products_ok()},
          {"segre_ok", t.segre_ok()}};
}

std::string to_text(const CensusTable& t) {
  std::ostringstream os;
  os << "N_" << t.d << " (n = " << t.n << ") over F_" << t.p << "\n";
  os << std::left << std::setw(22) << "stratum" << std::right << std::setw(14) << "count" << std::setw(14)
     << "prediction" << std::setw(8) << "match" << "\n";
  os << std::left << std::setw(22) << "interior" << std::right << std::setw(14) << t.interior << std::setw(14) << "-"
     << std::setw(8) << "-" << "\n";
  for (std::size_t k = t.by_k.size(); k-- > 0;) {
    StratumReport r;
    r.d = t.d;
    r.stratum = k;
    os << std::left << std::setw(22) << stratum_label(r) << std::right << std::setw(14) << t.by_k[k] << std::setw(14)
       << t.predictions[k] << std::setw(8) << (t.by_k[k] == t.predictions[k] ? "yes" : "NO") << "\n";
  }
  os << std::left << std::setw(22) << "total" << std::right << std::setw(14) << t.total << std::setw(14)
     << t.projective_total << std::setw(8) << (t.checksum_ok() ? "yes" : "NO") << "\n";
  return os.str();
}

nlohmann::json to_json(const IdealPresentation& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.str());
  return {{"ring", ideal.ring->names()}, {"generators", gens}, {"provenance", ideal.provenance}};
}

nlohmann::json to_json(const IdealCheck& c) {
  return {{"label", c.label}, {"in_guard", c.in_guard}, {"equal", c.equal}, {"detail", c.detail}};
}

nlohmann::json to_json(const RowRelationReport& r) {
  nlohmann::json valid = nlohmann::json::array();
  for (const auto& c : r.validating) valid.push_back(c.describe());
  return {{"printed_holds", r.printed_holds}, {"validating", valid}, {"finding", r.finding}, {"ok", r.ok()}};
}

nlohmann::json to_json(const MinorExtractionReport& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : r.witnesses)
    w.push_back({{"var", "c_" + std::to_string(x.i) + "_" + std::to_string(x.j)},
                 {"rows", x.rows},
                 {"cols", x.cols},
                 {"sign", x.sign}});
  nlohmann::json missing = nlohmann::json::array();
  for (const auto& [i, j] : r.missing) missing.push_back("c_" + std::to_string(i) + "_" + std::to_string(j));
  return {{"witnesses", w}, {"missing", missing}, {"ok", r.ok()}};
}

nlohmann::json to_json(const LambdaPoly& p) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  return c;
}

}  // namespace quot

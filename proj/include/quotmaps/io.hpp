#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "quotmaps/det_ideals.hpp"
#include "quotmaps/hodge.hpp"
#include "quotmaps/map_point.hpp"
#include "quotmaps/resultant.hpp"
#include "quotmaps/strata.hpp"
#include "quotmaps/wedge.hpp"

namespace quot {

/// "Q" or "Fp:<prime>".
struct FieldSpec {
  std::uint32_t prime = 0;  // 0 means Q

  bool is_rational() const { return prime == 0; }
  std::string str() const { return prime == 0 ? "Q" : "Fp:" + std::to_string(prime); }
  /// Throws DomainError for anything else or a non-prime p.
  static FieldSpec parse(std::string_view text);
};

/// A map-point (or family) file before its coefficients are interpreted.
///
///   # comment
///   n 1
///   d 2
///   field Q
///   row 1 0 0
///   row 0 1 1/2
///
/// One `row` line per form, coefficients a_i0 .. a_id. Family files use the same
/// layout with t-polynomials such as `1+t` or `-3/2*t^2` as coefficients.
struct PointFile {
  struct Token {
    std::string text;
    std::size_t line = 0, column = 0;
  };
  std::size_t n = 0, d = 0;
  FieldSpec field;
  std::size_t field_line = 0;
  std::vector<std::vector<Token>> rows;
  std::vector<std::size_t> row_lines;
};

/// Syntax and shape checks; throws ParseError with the offending line and column.
PointFile read_point_file(std::istream& in);
PointFile read_point_file_path(const std::string& path);

using AnyPoint = std::variant<MapPoint<Rational>, MapPoint<Fp>>;

/// Interprets the coefficients over the file's field, or over `override` when given
/// (rational coefficients are then reduced mod p). All-zero rows raise ParseError.
AnyPoint to_point(const PointFile& file, std::optional<FieldSpec> override = std::nullopt);
MapPoint<TPoly> to_family(const PointFile& file);

template <class F>
std::string write_point_file(const MapPoint<F>& f, const FieldSpec& field) {
  std::string out = "n " + std::to_string(f.n()) + "\nd " + std::to_string(f.d()) + "\nfield " + field.str() + "\n";
  for (const auto& g : f.polys()) {
    out += "row";
    for (const auto& c : g.coeffs()) out += " " + to_string(c);
    out += "\n";
  }
  return out;
}

/// Human-readable form such as "x^2 - 3/2*x*y + y^2".
template <class F>
std::string form_str(const HomogPoly<F>& f) {
  const std::size_t d = f.degree();
  std::string out;
  for (std::size_t j = 0; j <= d; ++j) {
    if (detail::coeff_is_zero(f[j])) continue;
    std::string c = to_string(f[j]);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono;
    auto power = [](const char* v, std::size_t e) {
      return e == 0 ? std::string() : e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
    };
    std::string xs = power("x", d - j), ys = power("y", j);
    mono = xs.empty() ? ys : ys.empty() ? xs : xs + "*" + ys;
    if (mono.empty()) out += c;
    else if (c == "1") out += mono;
    else out += c + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

// Structured (JSON) forms. Objects use sorted keys, so dumps are canonical.
template <class F>
nlohmann::json to_json(const MapPoint<F>& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& g : f.polys()) rows.push_back(serialize(g));
  return {{"n", f.n()}, {"d", f.d()}, {"rows", rows}};
}

nlohmann::json to_json(const StratumReport& r);
nlohmann::json to_json(const WedgeTuple<Rational>& w);
nlohmann::json to_json(const WedgeTuple<Fp>& w);
nlohmann::json to_json(const FamilyLimit& limit);
nlohmann::json to_json(const CensusTable& table);
nlohmann::json to_json(const IdealPresentation& ideal);
nlohmann::json to_json(const IdealCheck& check);
nlohmann::json to_json(const RowRelationReport& report);
nlohmann::json to_json(const MinorExtractionReport& report);
nlohmann::json to_json(const LambdaPoly& p);

// Plain-text renderings.
std::string to_text(const WedgeTuple<Rational>& w);
std::string to_text(const WedgeTuple<Fp>& w);
std::string to_text(const CensusTable& table);

}  // namespace quot

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quotmaps/groebner.hpp"
#include "quotmaps/matrix.hpp"
#include "quotmaps/multi_poly.hpp"

namespace quot {

using SymbolicMatrix = Matrix<MultiPoly>;

/// Generators of an ideal together with a note on where they came from.
struct IdealPresentation {
  RingPtr ring;
  std::vector<MultiPoly> generators;
  std::string provenance;
};

/// Q[c_0_1..c_0_d, c_1_1..c_n_d], the coordinates on the chart a_00 != 0 after row reduction.
RingPtr chart_ring(std::size_t d, std::size_t n);

/// C_{f,m}: block-Toeplitz with first block rows (1, c_01, ..., c_0d) and (0, c_i1, ..., c_id).
SymbolicMatrix chart_reduce(std::size_t d, std::size_t n, std::size_t m);

/// A matrix of independent indeterminates named prefix_i_j.
SymbolicMatrix generic_matrix(RingPtr ring, std::size_t rows, std::size_t cols, const std::string& prefix);

/// All nonzero r x r minors in colex order (rows outer), with repeats up to a
/// scalar factor removed.
IdealPresentation minor_ideal(const SymbolicMatrix& m, std::size_t r, std::string provenance = {});

IdealPresentation groebner_basis(const IdealPresentation& ideal, const GroebnerLimits& limits = {});

/// Compares reduced Groebner bases. Rings must agree.
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const GroebnerLimits& limits = {});

/// Substitutes a rational point for the ring variables.
Matrix<Rational> specialize(const SymbolicMatrix& m, const std::vector<Rational>& point);

/// How to read the printed elimination identity
///   row_i + sum_{j=1..d} (c_{i,j} row_{j(n+1)+i-1} + c_{0,j} row_{j(n+1)+i}) = 0,  2 <= i <= n+1.
struct RowRelationConvention {
  int row_base = 1;          // row numbers are 1-based (printed) or 0-based
  int c_shift = 0;           // c_{i + c_shift, j} in the first sum
  int c_sign = +1;           // sign in front of the c_{i,j} term
  bool head_rows = false;    // use row_{j(n+1)+1} (block heads) instead of row_{j(n+1)+i-1}

  std::string describe() const;
  friend bool operator==(const RowRelationConvention&, const RowRelationConvention&) = default;
};

/// The identity exactly as printed.
RowRelationConvention printed_row_relation();

/// Evaluates the identity on C_{f,m} for every i in 2..n+1; requires m >= d. An index
/// that falls outside the matrix or the chart variables counts as failure.
bool check_row_relation(std::size_t d, std::size_t n, std::size_t m,
                        const RowRelationConvention& convention = printed_row_relation());

struct RowRelationReport {
  bool printed_holds = false;
  std::vector<RowRelationConvention> validating;  // every nearby convention that works
  /// Empty when the printed form holds; otherwise names the convention that does.
  std::string finding;
  bool ok() const { return printed_holds || !validating.empty(); }
};

/// Tries the printed indexing and its off-by-one / sign / block-head variants.
RowRelationReport search_row_relation(std::size_t d, std::size_t n, std::size_t m);

struct MinorWitness {
  std::size_t i = 0, j = 0;        // realizes c_{i,j}
  std::vector<std::size_t> rows;   // 0-based rows of C_{f,m}
  std::vector<std::size_t> cols;
  int sign = +1;                   // minor = sign * c_{i,j}
};

struct MinorExtractionReport {
  std::vector<MinorWitness> witnesses;
  std::vector<std::pair<std::size_t, std::size_t>> missing;
  bool ok() const { return missing.empty(); }
};

/// For every c_{i,j}, searches the (m+2) x (m+2) minors of C_{f,m} built from the m+1
/// rows with a leading 1 and the row carrying c_{i,j} for one equal to +-c_{i,j};
/// requires m >= 1.
MinorExtractionReport check_minor_extraction(std::size_t d, std::size_t n, std::size_t m);

/// Outcome of one ideal comparison on the chart.
struct IdealCheck {
  std::string label;
  bool in_guard = true;
  bool equal = false;
  std::string detail;  // guard message, or the first basis element that differs
};

/// I_2(C_{f,0}) = I_{2+m}(C_{f,m}).
IdealCheck check_degree0_stability(std::size_t d, std::size_t n, std::size_t m, const GroebnerLimits& limits = {});
/// I_{k+2+m}(C_{f,m}) = I_{k+1+m}(C_{f,m-1}), one step of the descent to m = d-1.
IdealCheck check_stability_step(std::size_t d, std::size_t n, std::size_t k, std::size_t m,
                                const GroebnerLimits& limits = {});
/// Experimental: I_{k+2+m}(C_{f,m}) = I_{2k+2}(C_{f,k}) for m >= k.
IdealCheck check_conjectured_equality(std::size_t d, std::size_t n, std::size_t k, std::size_t m,
                                      const GroebnerLimits& limits = {});

}  // namespace quot

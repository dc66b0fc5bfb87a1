#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewnomial/exact.hpp"
#include "fewnomial/polytope.hpp"
#include "fewnomial/sparse.hpp"

namespace fewnomial {

/// Convex hull in R^{n+1} of the points (a, ord_p c_a) over the support of g.
struct PAdicNewtonPolytope {
  SparsePolynomial source;
  std::uint64_t p;
  std::vector<std::pair<ExponentVector, BigRational>> lifted_points;
  Polytope hull;
};

PAdicNewtonPolytope padic_newton_polytope(const SparsePolynomial& g, std::uint64_t p);

struct ValuationEntry {
  QPoint v;
  BigInt bound;
};

/**
 * Bound on the number of torus roots (with multiplicity) for each valuation
 * vector v = (ord_p x_1, ..., ord_p x_n) that can occur.
 */
struct ValuationTable {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<ValuationEntry> entries;  // bound > 0, sorted by v
  BigInt total = 0;
  BigInt bernstein = 0;
  /// Every lower cell visited, including those whose mixed volume is 0.
  std::vector<ValuationEntry> cells;
  std::size_t candidates_examined() const { return cells.size(); }
};

/**
 * Computes the table for a square system. Throws std::invalid_argument for a
 * non-square system and ConsistencyError when the per-cell bounds do not sum
 * to the mixed volume of the projected polytopes.
 */
ValuationTable valuation_table(const SparsePolynomialSystem& g, std::uint64_t p);

struct PolygonSegment {
  BigRational v;
  long multiplicity;
  friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

/// Lower edges of the classical Newton polygon of a univariate g, sorted by v.
std::vector<PolygonSegment> univariate_polygon(const SparsePolynomial& g, std::uint64_t p);

enum class StratumStatus {
  kBounded,       // valuation table computed
  kInconsistent,  // a nonzero constant survives: no roots here
  kUnbounded,     // fewer equations than variables remain
  kOrigin,        // every variable zero and every polynomial vanishes there
};

std::string to_string(StratumStatus status);

struct Stratum {
  std::vector<std::size_t> zeroed;  // 0-based variable indices set to zero
  std::vector<std::size_t> vanished;  // polynomials that became identically zero
  StratumStatus status = StratumStatus::kBounded;
  std::optional<ValuationTable> table;
  bool reduced = false;  // a generic combination was applied
  BigInt total = 0;
};

struct StratifiedReport {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<Stratum> strata;
  BigInt grand_total = 0;
  bool has_unbounded = false;
};

/**
 * Runs the valuation table on every coordinate stratum: for each subset S of
 * the variables set to zero, on the system in the remaining variables.
 * Non-square strata with too many equations go through generic_reduce(seed).
 */
StratifiedReport stratified_analysis(const SparsePolynomialSystem& g, std::uint64_t p, std::uint64_t seed = 1);

}  // namespace fewnomial

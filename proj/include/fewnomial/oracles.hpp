#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fewnomial/exact.hpp"
#include "fewnomial/linalg.hpp"
#include "fewnomial/smirnov.hpp"
#include "fewnomial/sparse.hpp"

namespace fewnomial {

/**
 * g_i = c_i x^{a_i} + c'_i x^{b_i}, where a_i is the lexicographically
 * smaller exponent. A has rows a_i - b_i and r_i = ord_p c'_i - ord_p c_i.
 */
struct BinomialSystem {
  std::uint64_t p = 0;
  std::vector<ExponentVector> a, b;
  QMatrix A;
  QPoint r;
};

/// Throws std::invalid_argument unless g is square with exactly two terms per polynomial.
BinomialSystem binomial_system(const SparsePolynomialSystem& g, std::uint64_t p);

struct BinomialSolution {
  QPoint v;
  BigInt count;
};

/// v = A^{-1} r and count = |det A|; nullopt when A is singular.
std::optional<BinomialSolution> binomial_solve(const BinomialSystem& system);

struct ProductPolynomial {
  SparsePolynomial polynomial;
  std::vector<PolygonSegment> expected;  // sorted by v
  /// Some coefficient of the expansion cancelled to zero, so the support is
  /// smaller than {0, ..., N}; callers generating tests should redraw.
  bool support_collapsed = false;
};

/// Expands prod_j (x - u_j). Throws std::invalid_argument on an empty list or a zero root.
ProductPolynomial product_polynomial(const std::vector<BigRational>& roots, std::uint64_t p);

struct ModPkCount {
  std::uint64_t residues = 0;         // solutions of G(x) = 0 mod p^k
  std::uint64_t certified = 0;        // with unit Jacobian determinant
  std::uint64_t uncertified = 0;      // residues - certified
  std::uint64_t certified_torus = 0;  // certified, with every coordinate nonzero mod p^k
};

/**
 * Enumerates (Z/p^k)^n. Needs a square polynomial (non-Laurent) system with
 * integer coefficients, no valuation overrides, and p^{kn} <= 10^7; throws
 * std::invalid_argument otherwise.
 */
ModPkCount exhaustive_count_mod_pk(const SparsePolynomialSystem& g, std::uint64_t p, unsigned k);

}  // namespace fewnomial

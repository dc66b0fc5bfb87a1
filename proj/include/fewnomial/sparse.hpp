#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fewnomial/exact.hpp"

namespace fewnomial {

/// Exponents of x_1..x_n in one monomial. Negative entries only in Laurent mode.
using ExponentVector = std::vector<long>;

struct Term {
  BigRational coefficient;
  /// Explicit ord_p of the coefficient, standing in for a coefficient that
  /// lives in an extension of Q_p (written "c@v" in the text syntax).
  std::optional<BigRational> valuation_override;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A nonzero polynomial in n variables, stored as exponent vector -> term.
class SparsePolynomial {
 public:
  /// Throws std::invalid_argument for an empty map, a zero coefficient, or a
  /// wrongly sized exponent vector.
  SparsePolynomial(std::size_t variables, std::map<ExponentVector, Term> terms);

  std::size_t variables() const { return variables_; }
  const std::map<ExponentVector, Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool has_negative_exponent() const;
  bool has_valuation_override() const;
  bool is_constant() const;

  /// ord_p of the coefficient of `term`, honouring a valuation override.
  static BigRational term_valuation(const Term& term, std::uint64_t p);

  std::string to_string() const;

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  std::size_t variables_;
  std::map<ExponentVector, Term> terms_;
};

class SparsePolynomialSystem {
 public:
  /// Throws std::invalid_argument when empty or when variable counts differ.
  SparsePolynomialSystem(std::size_t variables, std::vector<SparsePolynomial> polynomials);

  std::size_t variables() const { return variables_; }
  std::size_t size() const { return polynomials_.size(); }
  const std::vector<SparsePolynomial>& polynomials() const { return polynomials_; }
  const SparsePolynomial& operator[](std::size_t i) const { return polynomials_[i]; }
  bool is_square() const { return polynomials_.size() == variables_; }
  bool has_negative_exponent() const;
  bool has_valuation_override() const;

  /// Polynomials separated by "; ", terms in ascending lexicographic order.
  std::string to_string() const;

  friend bool operator==(const SparsePolynomialSystem&, const SparsePolynomialSystem&) = default;

 private:
  std::size_t variables_;
  std::vector<SparsePolynomial> polynomials_;
};

/**
 * Parses a system written as polynomials separated by ';' or newlines, e.g.
 * "50*x1^18 - 3125*x2^9 - 162*x2; 49*x2^18 - 35*x1^9 - 109375*x1".
 *
 * Like terms are combined and cancelling terms dropped. Throws ParseError on
 * syntax errors, zero polynomials, variables outside x1..xn, and negative
 * exponents when `laurent` is false.
 */
SparsePolynomialSystem parse_system(std::string_view text, std::size_t variables, bool laurent = false);

std::set<ExponentVector> support(const SparsePolynomial& g);

/// Number of distinct monomials over the whole system (the union of supports).
std::size_t sparsity(const SparsePolynomialSystem& g);

/// Sum of the individual support sizes.
std::size_t total_term_count(const SparsePolynomialSystem& g);

struct Reduction {
  SparsePolynomialSystem system;
  std::uint64_t seed = 0;
  /// Row i holds the multipliers of g_1..g_k used for output polynomial i.
  std::vector<std::vector<BigInt>> multipliers;
  /// Set when k < n: the input is returned unchanged.
  bool underdetermined = false;
};

/**
 * Replaces a k x n system (k >= n) by n generic linear combinations of its
 * polynomials. Multipliers are drawn from [-2^31, 2^31] by a generator seeded
 * with `seed`; seed 0 on a square system selects the identity.
 *
 * Valuation overrides cannot be carried through a nontrivial combination, so
 * such systems are rejected with std::invalid_argument.
 */
Reduction generic_reduce(const SparsePolynomialSystem& g, std::uint64_t seed);

struct Specialization {
  /// 0-based indices (into the original variables) that remain.
  std::vector<std::size_t> surviving_variables;
  /// nullopt where the polynomial vanished identically.
  std::vector<std::optional<SparsePolynomial>> polynomials;

  bool any_vanished() const;
  std::vector<SparsePolynomial> nonzero() const;
};

/// Sets the variables with 0-based indices in `zeroed` to zero.
Specialization specialize_zero(const SparsePolynomialSystem& g, const std::set<std::size_t>& zeroed);

}  // namespace fewnomial

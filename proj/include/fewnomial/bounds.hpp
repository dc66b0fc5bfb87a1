#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewnomial/exact.hpp"

namespace fewnomial {

/// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_dec_float_50;

/// Degree-d extension of Q_p with ramification index e and residue degree f.
struct FieldDescriptor {
  std::uint64_t p = 2;
  unsigned d = 1;
  unsigned e = 1;
  unsigned f = 1;

  /// Throws std::invalid_argument unless p is prime, d, e, f >= 1 and e*f = d.
  void validate() const;
};

/// beta'(n, m), or nullopt when no explicit value is known.
using BetaOracle = std::function<std::optional<Real>(unsigned n, unsigned m)>;

/// beta'(n, 0) = beta'(n, 1) = 0; n = 1 from beta1_default; unknown otherwise.
BetaOracle default_beta_oracle();

/// Default oracle with user-supplied values for particular (n, m). Values for
/// m <= 1 are ignored: those are 0 by definition.
BetaOracle beta_oracle_with(std::map<std::pair<unsigned, unsigned>, Real> values);

long descartes_bound(long m);
Real lenstra_local(const FieldDescriptor& field, unsigned m);
Real lenstra_global(unsigned d, unsigned m);
Real beta1_default(unsigned m);

/// 1 + sum_{i=1}^n C(n,i) C(mi,i+1) beta'(i,m); nullopt if any needed beta' is unknown.
std::optional<Real> gamma_bound(unsigned n, unsigned m, const BetaOracle& beta);

Real theorem_local_bound(const FieldDescriptor& field, unsigned n, const Real& gamma);
Real corollary_global_bound(unsigned d, unsigned n, const Real& gamma, std::optional<unsigned> f_L = std::nullopt);
Real degree_bounded_bound(std::uint64_t p, unsigned D_p, unsigned f_p, unsigned n, const Real& gamma, bool global);

/// C(mn, n+1): a cap on the number of valuation vectors.
BigInt valuation_count_bound(unsigned n, unsigned m);

/// (p^f - 1) p^{f(e-1)}; throws ConsistencyError if p^d (1 - p^{-f}) disagrees.
BigInt leading_class_count(const FieldDescriptor& field);

/// Six significant digits, no trailing zeros.
std::string format_real(const Real& x, int digits = 6);

struct BoundReport {
  std::string formula;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<Real> value;  // nullopt: non-effective
  std::optional<BigInt> exact;  // set for integer-valued formulas
  static constexpr int kPrecisionDigits = 50;

  std::string value_text() const;
};

/// Generic parameter bag for evaluate_bound; unset fields use defaults.
struct BoundParameters {
  std::optional<std::uint64_t> p;
  std::optional<unsigned> d, e, f, n, m, f_L, D_p, f_p;
  std::optional<Real> gamma;
  bool global = false;
  std::map<std::pair<unsigned, unsigned>, Real> beta;
};

const std::vector<std::string>& bound_formulas();

/// Evaluates a formula by name. Throws std::invalid_argument on an unknown
/// name, a missing required parameter, or an invalid field descriptor.
/// Formulas that need gamma use `gamma` when given, else gamma_bound(n, m).
BoundReport evaluate_bound(const std::string& formula, const BoundParameters& params);

}  // namespace fewnomial

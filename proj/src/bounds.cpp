#include "fewnomial/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewnomial {

namespace {

Real to_real(const BigInt& x) { return Real(x.get_str()); }

Real power(std::uint64_t base, unsigned long exp) { return to_real(pow_int(BigInt(std::to_string(base)), exp)); }

}  // namespace

void FieldDescriptor::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (d == 0 || e == 0 || f == 0) throw std::invalid_argument("d, e, f must be positive");
  if (static_cast<unsigned long>(e) * f != d) {
    throw std::invalid_argument("field descriptor needs e*f = d (got e=" + std::to_string(e) + ", f=" + std::to_string(f) +
                                ", d=" + std::to_string(d) + ")");
  }
}

BetaOracle default_beta_oracle() {
  return [](unsigned n, unsigned m) -> std::optional<Real> {
    if (m <= 1) return Real(0);
    if (n == 1) return beta1_default(m);
    return std::nullopt;
  };
}

BetaOracle beta_oracle_with(std::map<std::pair<unsigned, unsigned>, Real> values) {
  return [values = std::move(values), fallback = default_beta_oracle()](unsigned n, unsigned m) -> std::optional<Real> {
    if (m <= 1) return Real(0);
    if (auto it = values.find({n, m}); it != values.end()) return it->second;
    return fallback(n, m);
  };
}

long descartes_bound(long m) {
  if (m < 1) throw std::invalid_argument("descartes_bound needs m >= 1");
  return 2 * m - 1;
}

Real lenstra_local(const FieldDescriptor& field, unsigned m) {
  field.validate();
  if (m <= 1) return Real(1);
  const Real lnp = log(Real(field.p));
  const Real e(field.e);
  const Real mm1(m - 1);
  const Real q = power(field.p, field.f) - 1;
  return 1 + Real("1.582") * q * mm1 * mm1 * (1 + e * log(e * mm1 / lnp) / lnp);
}

Real lenstra_global(unsigned d, unsigned m) {
  if (d == 0) throw std::invalid_argument("lenstra_global needs d >= 1");
  if (m <= 1) return Real(1);
  const Real mm1(m - 1);
  return 1 + Real("4.566") * mm1 * mm1 * Real(d + 10) * power(2, d) * (log(Real(d) * mm1) + Real("0.367"));
}

Real beta1_default(unsigned m) {
  if (m <= 1) return Real(0);
  const Real mm1(m - 1);
  return Real("1.582") * mm1 * (1 + Real("1.443") * (log(mm1) + Real("0.367")));
}

std::optional<Real> gamma_bound(unsigned n, unsigned m, const BetaOracle& beta) {
  if (n == 0) throw std::invalid_argument("gamma_bound needs n >= 1");
  Real sum = 1;
  for (unsigned i = 1; i <= n; ++i) {
    const std::optional<Real> b = beta(i, m);
    if (!b) return std::nullopt;
    if (*b < 0) throw std::invalid_argument("beta oracle returned a negative value");
    if (*b == 0) continue;
    sum += to_real(binomial(n, i) * binomial(static_cast<unsigned long>(m) * i, i + 1)) * *b;
  }
  return sum;
}

Real theorem_local_bound(const FieldDescriptor& field, unsigned n, const Real& gamma) {
  field.validate();
  const Real q = power(field.p, field.f);
  return power(field.p, static_cast<unsigned long>(field.d) * n) * pow(1 - 1 / q, n) * gamma;
}

Real corollary_global_bound(unsigned d, unsigned n, const Real& gamma, std::optional<unsigned> f_L) {
  if (d == 0) throw std::invalid_argument("corollary_global_bound needs d >= 1");
  if (f_L && (*f_L == 0 || *f_L > d)) throw std::invalid_argument("f_L must satisfy 1 <= f_L <= d");
  const Real q = power(2, f_L.value_or(d));
  return power(2, static_cast<unsigned long>(d) * n) * pow(1 - 1 / q, n) * gamma;
}

Real degree_bounded_bound(std::uint64_t p, unsigned D_p, unsigned f_p, unsigned n, const Real& gamma, bool global) {
  if (D_p == 0 || f_p == 0) throw std::invalid_argument("D_p and f_p must be positive");
  const std::uint64_t base = global ? 2 : p;
  if (!is_prime(base)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  const Real q = power(base, f_p);
  return power(base, static_cast<unsigned long>(D_p) * n) * pow(1 - 1 / q, n) * gamma;
}

BigInt valuation_count_bound(unsigned n, unsigned m) {
  if (n == 0) throw std::invalid_argument("valuation_count_bound needs n >= 1");
  return binomial(static_cast<unsigned long>(m) * n, n + 1);
}

BigInt leading_class_count(const FieldDescriptor& field) {
  field.validate();
  const BigInt p(std::to_string(field.p));
  const BigInt q = pow_int(p, field.f);
  const BigInt digits = (q - 1) * pow_int(p, static_cast<unsigned long>(field.f) * (field.e - 1));
  const BigRational closed = BigRational(pow_int(p, field.d)) * (BigRational(1) - BigRational(BigInt(1), q));
  if (closed != BigRational(digits)) {
    throw ConsistencyError("leading class counts disagree: " + digits.get_str() + " vs " + closed.to_string());
  }
  return digits;
}

std::string format_real(const Real& x, int digits) {
  if (x == 0) return "0";
  std::string s = x.str(digits, std::ios_base::fmtflags(0));
  return s;
}

std::string BoundReport::value_text() const {
  if (!value) return "non-effective";
  if (exact) return exact->get_str();
  return format_real(*value);
}

const std::vector<std::string>& bound_formulas() {
  static const std::vector<std::string> names = {
      "descartes",        "lenstra-local",  "lenstra-global",  "beta1",         "gamma",
      "theorem-local",    "corollary-global", "degree-bounded", "valuation-count", "leading-classes"};
  return names;
}

namespace {

template <typename T>
T require(const std::optional<T>& v, const char* name, const std::string& formula) {
  if (!v) throw std::invalid_argument("formula '" + formula + "' needs parameter " + name);
  return *v;
}

FieldDescriptor field_from(const BoundParameters& params, const std::string& formula) {
  FieldDescriptor field{require(params.p, "p", formula), require(params.d, "d", formula),
                        require(params.e, "e", formula), require(params.f, "f", formula)};
  field.validate();
  return field;
}

}  // namespace

BoundReport evaluate_bound(const std::string& formula, const BoundParameters& params) {
  BoundReport report;
  report.formula = formula;
  auto input = [&](const char* name, const std::string& value) { report.inputs.emplace_back(name, value); };
  auto field_inputs = [&](const FieldDescriptor& field) {
    input("p", std::to_string(field.p));
    input("d", std::to_string(field.d));
    input("e", std::to_string(field.e));
    input("f", std::to_string(field.f));
  };
  // gamma is either user-supplied, or derived from (n, m) and the beta oracle.
  auto gamma_value = [&](unsigned n) -> std::optional<Real> {
    if (params.gamma) {
      if (*params.gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
      input("gamma", format_real(*params.gamma));
      return params.gamma;
    }
    const unsigned m = require(params.m, "m (or gamma)", formula);
    input("m", std::to_string(m));
    return gamma_bound(n, m, beta_oracle_with(params.beta));
  };

  if (formula == "descartes") {
    const unsigned m = require(params.m, "m", formula);
    input("m", std::to_string(m));
    report.exact = BigInt(std::to_string(descartes_bound(m)));
    report.value = to_real(*report.exact);
  } else if (formula == "lenstra-local") {
    const FieldDescriptor field = field_from(params, formula);
    const unsigned m = require(params.m, "m", formula);
    field_inputs(field);
    input("m", std::to_string(m));
    report.value = lenstra_local(field, m);
  } else if (formula == "lenstra-global") {
    const unsigned d = require(params.d, "d", formula);
    const unsigned m = require(params.m, "m", formula);
    input("d", std::to_string(d));
    input("m", std::to_string(m));
    report.value = lenstra_global(d, m);
  } else if (formula == "beta1") {
    const unsigned m = require(params.m, "m", formula);
    input("m", std::to_string(m));
    report.value = beta1_default(m);
  } else if (formula == "gamma") {
    const unsigned n = require(params.n, "n", formula);
    const unsigned m = require(params.m, "m", formula);
    input("n", std::to_string(n));
    input("m", std::to_string(m));
    report.value = gamma_bound(n, m, beta_oracle_with(params.beta));
  } else if (formula == "theorem-local") {
    const FieldDescriptor field = field_from(params, formula);
    const unsigned n = require(params.n, "n", formula);
    field_inputs(field);
    input("n", std::to_string(n));
    if (auto g = gamma_value(n)) report.value = theorem_local_bound(field, n, *g);
  } else if (formula == "corollary-global") {
    const unsigned d = require(params.d, "d", formula);
    const unsigned n = require(params.n, "n", formula);
    input("d", std::to_string(d));
    input("n", std::to_string(n));
    if (params.f_L) input("f_L", std::to_string(*params.f_L));
    if (params.f_L && (*params.f_L == 0 || *params.f_L > d)) throw std::invalid_argument("f_L must satisfy 1 <= f_L <= d");
    if (auto g = gamma_value(n)) report.value = corollary_global_bound(d, n, *g, params.f_L);
  } else if (formula == "degree-bounded") {
    const unsigned D = require(params.D_p, "D_p", formula);
    const unsigned fp = require(params.f_p, "f_p", formula);
    const unsigned n = require(params.n, "n", formula);
    const std::uint64_t p = params.global ? 2 : require(params.p, "p", formula);
    input("p", std::to_string(p));
    input("D_p", std::to_string(D));
    input("f_p", std::to_string(fp));
    input("n", std::to_string(n));
    input("global", params.global ? "true" : "false");
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (auto g = gamma_value(n)) report.value = degree_bounded_bound(p, D, fp, n, *g, params.global);
  } else if (formula == "valuation-count") {
    const unsigned n = require(params.n, "n", formula);
    const unsigned m = require(params.m, "m", formula);
    input("n", std::to_string(n));
    input("m", std::to_string(m));
    report.exact = valuation_count_bound(n, m);
    report.value = to_real(*report.exact);
  } else if (formula == "leading-classes") {
    const FieldDescriptor field = field_from(params, formula);
    field_inputs(field);
    report.exact = leading_class_count(field);
    report.value = to_real(*report.exact);
  } else {
    throw std::invalid_argument("unknown formula '" + formula + "'");
  }
  return report;
}

}  // namespace fewnomial

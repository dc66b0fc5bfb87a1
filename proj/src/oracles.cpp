#include "fewnomial/oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fewnomial/parallel.hpp"

namespace fewnomial {

BinomialSystem binomial_system(const SparsePolynomialSystem& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (!g.is_square()) throw std::invalid_argument("binomial system must be square");
  BinomialSystem out;
  out.p = p;
  for (const auto& poly : g.polynomials()) {
    if (poly.size() != 2) throw std::invalid_argument("binomial system needs exactly two terms per polynomial");
    const auto first = poly.terms().begin();
    const auto second = std::next(first);
    out.a.push_back(first->first);
    out.b.push_back(second->first);
    QPoint row;
    for (std::size_t j = 0; j < g.variables(); ++j) row.emplace_back(first->first[j] - second->first[j]);
    out.A.push_back(std::move(row));
    out.r.push_back(SparsePolynomial::term_valuation(second->second, p) -
                    SparsePolynomial::term_valuation(first->second, p));
  }
  return out;
}

std::optional<BinomialSolution> binomial_solve(const BinomialSystem& system) {
  const BigRational det = determinant(system.A);
  if (det.is_zero()) return std::nullopt;
  auto v = solve_square(system.A, system.r);
  if (!v) return std::nullopt;
  return BinomialSolution{std::move(*v), det.abs().numerator()};
}

ProductPolynomial product_polynomial(const std::vector<BigRational>& roots, std::uint64_t p) {
  if (roots.empty()) throw std::invalid_argument("product_polynomial needs at least one root");
  std::vector<BigRational> coeffs{BigRational(1)};  // coeffs[i] multiplies x^i
  std::map<BigRational, long> by_valuation;
  for (const auto& u : roots) {
    if (u.is_zero()) throw std::invalid_argument("roots must be nonzero");
    ++by_valuation[BigRational(ord_p_nonzero(u, p))];
    std::vector<BigRational> next(coeffs.size() + 1, BigRational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= u * coeffs[i];
    }
    coeffs = std::move(next);
  }
  ProductPolynomial out{SparsePolynomial(1, [&] {
                          std::map<ExponentVector, Term> terms;
                          for (std::size_t i = 0; i < coeffs.size(); ++i) {
                            if (!coeffs[i].is_zero()) terms.emplace(ExponentVector{static_cast<long>(i)}, Term{coeffs[i], {}});
                          }
                          return terms;
                        }()),
                        {},
                        false};
  out.support_collapsed = std::any_of(coeffs.begin(), coeffs.end(), [](const BigRational& c) { return c.is_zero(); });
  for (const auto& [v, mult] : by_valuation) out.expected.push_back(PolygonSegment{v, mult});
  return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, unsigned long e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

u64 reduce(const BigInt& c, u64 m) {
  BigInt r = c % BigInt(std::to_string(m));
  if (r < 0) r += BigInt(std::to_string(m));
  return std::stoull(r.get_str());
}

struct ModTerm {
  u64 coefficient;
  std::vector<unsigned long> exponent;
};

u64 evaluate(const std::vector<ModTerm>& poly, const std::vector<u64>& x, u64 m) {
  u64 sum = 0;
  for (const auto& t : poly) {
    u64 term = t.coefficient;
    for (std::size_t j = 0; j < x.size() && term; ++j) {
      if (t.exponent[j]) term = mulmod(term, powmod(x[j], t.exponent[j], m), m);
    }
    sum = (sum + term) % m;
  }
  return sum;
}

// Determinant over F_p by Gaussian elimination; p prime.
u64 det_mod(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t n = a.size();
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = (p - det) % p;
    }
    det = mulmod(det, a[c][c], p);
    const u64 inv = powmod(a[c][c], p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const u64 factor = mulmod(a[r][c], inv, p);
      if (!factor) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] = (a[r][k] + p - mulmod(factor, a[c][k], p)) % p;
    }
  }
  return det;
}

}  // namespace

ModPkCount exhaustive_count_mod_pk(const SparsePolynomialSystem& g, std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("precision k must be at least 1");
  if (!g.is_square()) throw std::invalid_argument("mod p^k counting needs a square system");
  if (g.has_negative_exponent()) throw std::invalid_argument("mod p^k counting needs nonnegative exponents");
  if (g.has_valuation_override()) throw std::invalid_argument("mod p^k counting needs actual coefficients, not valuation overrides");
  const std::size_t n = g.variables();

  constexpr u64 kLimit = 10'000'000;
  u64 modulus = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (modulus > kLimit / p) throw std::invalid_argument("p^k exceeds the enumeration limit");
    modulus *= p;
  }
  u64 space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > kLimit / modulus) throw std::invalid_argument("p^(kn) exceeds the enumeration limit of 10^7");
    space *= modulus;
  }

  std::vector<std::vector<ModTerm>> polys;
  // derivatives[i][j] = d g_i / d x_j, reduced mod p
  std::vector<std::vector<std::vector<ModTerm>>> derivatives(n, std::vector<std::vector<ModTerm>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ModTerm> poly;
    for (const auto& [exponent, term] : g[i].terms()) {
      if (!term.coefficient.is_integer()) throw std::invalid_argument("mod p^k counting needs integer coefficients");
      std::vector<unsigned long> e(exponent.begin(), exponent.end());
      poly.push_back(ModTerm{reduce(term.coefficient.numerator(), modulus), e});
      for (std::size_t j = 0; j < n; ++j) {
        if (e[j] == 0) continue;
        std::vector<unsigned long> de = e;
        --de[j];
        const u64 c = reduce(term.coefficient.numerator() * BigInt(std::to_string(e[j])), p);
        if (c) derivatives[i][j].push_back(ModTerm{c, std::move(de)});
      }
    }
    polys.push_back(std::move(poly));
  }

  // Split the outer coordinate across workers; each counts independently.
  std::vector<ModPkCount> partial(modulus);
  const u64 inner = space / modulus;
  parallel_for(modulus, [&](std::size_t first) {
    ModPkCount& count = partial[first];
    std::vector<u64> x(n, 0);
    x[0] = first;
    for (u64 index = 0; index < inner; ++index) {
      u64 rest = index;
      for (std::size_t j = 1; j < n; ++j) {
        x[j] = rest % modulus;
        rest /= modulus;
      }
      bool root = true;
      for (const auto& poly : polys) {
        if (evaluate(poly, x, modulus) != 0) {
          root = false;
          break;
        }
      }
      if (!root) continue;
      ++count.residues;
      std::vector<u64> xp(n);
      for (std::size_t j = 0; j < n; ++j) xp[j] = x[j] % p;
      std::vector<std::vector<u64>> jac(n, std::vector<u64>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) jac[i][j] = evaluate(derivatives[i][j], xp, p);
      }
      if (det_mod(std::move(jac), p) == 0) {
        ++count.uncertified;
        continue;
      }
      ++count.certified;
      if (std::all_of(x.begin(), x.end(), [](u64 c) { return c != 0; })) ++count.certified_torus;
    }
  });
  ModPkCount total;
  for (const auto& c : partial) {
    total.residues += c.residues;
    total.certified += c.certified;
    total.uncertified += c.uncertified;
    total.certified_torus += c.certified_torus;
  }
  return total;
}

}  // namespace fewnomial

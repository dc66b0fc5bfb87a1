#include "fewnomial/sparse.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fewnomial {

SparsePolynomial::SparsePolynomial(std::size_t variables, std::map<ExponentVector, Term> terms)
    : variables_(variables), terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial");
  for (const auto& [exponent, term] : terms_) {
    if (exponent.size() != variables_) throw std::invalid_argument("exponent vector has wrong length");
    if (term.coefficient.is_zero()) throw std::invalid_argument("zero coefficient stored in polynomial");
  }
}

bool SparsePolynomial::has_negative_exponent() const {
  for (const auto& [exponent, term] : terms_) {
    for (long e : exponent) {
      if (e < 0) return true;
    }
  }
  return false;
}

bool SparsePolynomial::has_valuation_override() const {
  for (const auto& [exponent, term] : terms_) {
    if (term.valuation_override) return true;
  }
  return false;
}

bool SparsePolynomial::is_constant() const {
  if (terms_.size() != 1) return false;
  for (long e : terms_.begin()->first) {
    if (e != 0) return false;
  }
  return true;
}

BigRational SparsePolynomial::term_valuation(const Term& term, std::uint64_t p) {
  if (term.valuation_override) return *term.valuation_override;
  return BigRational(ord_p_nonzero(term.coefficient, p));
}

namespace {

void write_monomial(std::ostream& os, const ExponentVector& exponent, bool need_star) {
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    if (exponent[i] == 0) continue;
    if (need_star) os << '*';
    os << 'x' << (i + 1);
    if (exponent[i] != 1) os << '^' << exponent[i];
    need_star = true;
  }
}

}  // namespace

std::string SparsePolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [exponent, term] : terms_) {
    const bool constant = std::all_of(exponent.begin(), exponent.end(), [](long e) { return e == 0; });
    const BigRational magnitude = term.coefficient.abs();
    if (first) {
      if (term.coefficient.sign() < 0) os << '-';
    } else {
      os << (term.coefficient.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool omit_one = magnitude == BigRational(1) && !constant && !term.valuation_override;
    if (!omit_one) {
      os << magnitude;
      if (term.valuation_override) os << '@' << *term.valuation_override;
    }
    write_monomial(os, exponent, !omit_one);
  }
  return os.str();
}

SparsePolynomialSystem::SparsePolynomialSystem(std::size_t variables, std::vector<SparsePolynomial> polynomials)
    : variables_(variables), polynomials_(std::move(polynomials)) {
  if (polynomials_.empty()) throw std::invalid_argument("system has no polynomials");
  for (const auto& g : polynomials_) {
    if (g.variables() != variables_) throw std::invalid_argument("polynomials disagree on variable count");
  }
}

bool SparsePolynomialSystem::has_negative_exponent() const {
  return std::any_of(polynomials_.begin(), polynomials_.end(),
                     [](const SparsePolynomial& g) { return g.has_negative_exponent(); });
}

bool SparsePolynomialSystem::has_valuation_override() const {
  return std::any_of(polynomials_.begin(), polynomials_.end(),
                     [](const SparsePolynomial& g) { return g.has_valuation_override(); });
}

std::string SparsePolynomialSystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < polynomials_.size(); ++i) {
    if (i) out += "; ";
    out += polynomials_[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class SystemParser {
 public:
  SystemParser(std::string_view text, std::size_t variables, bool laurent)
      : text_(text), variables_(variables), laurent_(laurent) {}

  SparsePolynomialSystem run() {
    if (variables_ == 0) throw std::invalid_argument("variable count must be at least 1");
    std::vector<SparsePolynomial> polys;
    while (true) {
      skip_blank();
      if (at_end()) break;
      if (peek() == ';' || peek() == '\n') {
        ++pos_;
        continue;
      }
      polys.push_back(polynomial());
    }
    if (polys.empty()) throw ParseError("no polynomials in input", pos_);
    return SparsePolynomialSystem(variables_, std::move(polys));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_blank() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  BigRational unsigned_rational() {
    BigInt num{std::string(digits())};
    BigInt den = 1;
    skip_blank();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_blank();
      den = BigInt(std::string(digits()));
      if (den == 0) fail("zero denominator");
    }
    return BigRational(num, den);
  }

  BigRational signed_rational() {
    skip_blank();
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
      skip_blank();
    }
    BigRational q = unsigned_rational();
    return negative ? -q : q;
  }

  long exponent() {
    skip_blank();
    bool paren = false;
    if (!at_end() && peek() == '(') {
      paren = true;
      ++pos_;
      skip_blank();
    }
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
      skip_blank();
    }
    const std::size_t start = pos_;
    const std::string_view d = digits();
    if (d.size() > 12) throw ParseError("exponent too large", start);
    long e = std::stol(std::string(d));
    if (paren) {
      skip_blank();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
    }
    if (negative && e != 0 && !laurent_) {
      throw ParseError("negative exponent outside Laurent mode", start);
    }
    return negative ? -e : e;
  }

  void factor(ExponentVector& powers) {
    skip_blank();
    if (at_end() || peek() != 'x') fail("expected variable x<i>");
    ++pos_;
    const std::size_t start = pos_;
    const std::string_view d = digits();
    const unsigned long index = d.size() > 9 ? 0 : std::stoul(std::string(d));
    if (index < 1 || index > variables_) {
      throw ParseError("variable x" + std::string(d) + " outside x1..x" + std::to_string(variables_), start);
    }
    skip_blank();
    long e = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      e = exponent();
    }
    powers[index - 1] += e;
  }

  void monomial(bool negative, std::map<ExponentVector, Term>& terms) {
    skip_blank();
    const std::size_t start = pos_;
    Term term{BigRational(1), std::nullopt};
    ExponentVector exponent(variables_, 0);
    bool have_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coefficient = unsigned_rational();
      have_coefficient = true;
      skip_blank();
      if (!at_end() && peek() == '@') {
        ++pos_;
        term.valuation_override = signed_rational();
      }
    }
    skip_blank();
    bool need_star = have_coefficient;
    while (!at_end()) {
      if (need_star) {
        if (peek() != '*') break;
        ++pos_;
      }
      factor(exponent);
      need_star = true;
      skip_blank();
    }
    if (!have_coefficient && !need_star) fail("expected coefficient or variable");
    if (negative) term.coefficient = -term.coefficient;
    if (term.coefficient.is_zero()) {
      if (term.valuation_override) throw ParseError("valuation override on a zero coefficient", start);
      return;
    }

    auto [it, inserted] = terms.try_emplace(exponent, term);
    if (!inserted) {
      if (it->second.valuation_override || term.valuation_override) {
        throw ParseError("valuation override on a term that combines with another", start);
      }
      it->second.coefficient += term.coefficient;
      if (it->second.coefficient.is_zero()) terms.erase(it);
    }
  }

  SparsePolynomial polynomial() {
    const std::size_t start = pos_;
    std::map<ExponentVector, Term> terms;
    bool first = true;
    while (true) {
      skip_blank();
      if (at_end() || peek() == ';' || peek() == '\n') break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      monomial(negative, terms);
      first = false;
    }
    if (terms.empty()) throw ParseError("polynomial is identically zero", start);
    return SparsePolynomial(variables_, std::move(terms));
  }

  std::string_view text_;
  std::size_t variables_;
  bool laurent_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomialSystem parse_system(std::string_view text, std::size_t variables, bool laurent) {
  return SystemParser(text, variables, laurent).run();
}

std::set<ExponentVector> support(const SparsePolynomial& g) {
  std::set<ExponentVector> out;
  for (const auto& [exponent, term] : g.terms()) out.insert(exponent);
  return out;
}

std::size_t sparsity(const SparsePolynomialSystem& g) {
  std::set<ExponentVector> all;
  for (const auto& poly : g.polynomials()) {
    for (const auto& [exponent, term] : poly.terms()) all.insert(exponent);
  }
  return all.size();
}

std::size_t total_term_count(const SparsePolynomialSystem& g) {
  std::size_t total = 0;
  for (const auto& poly : g.polynomials()) total += poly.size();
  return total;
}

// ---------------------------------------------------------------------------
// Generic reduction

namespace {

/// Uniform integer in [-2^31, 2^31] by rejection, independent of the
/// standard library's distribution implementation.
long draw_multiplier(std::mt19937_64& rng) {
  constexpr std::uint64_t kRange = (std::uint64_t{1} << 32) + 1;
  constexpr std::uint64_t kLimit = (~std::uint64_t{0} / kRange) * kRange;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= kLimit);
  return static_cast<long>(x % kRange) - (long{1} << 31);
}

}  // namespace

Reduction generic_reduce(const SparsePolynomialSystem& g, std::uint64_t seed) {
  const std::size_t n = g.variables();
  const std::size_t k = g.size();
  if (k < n) return Reduction{g, seed, {}, true};

  std::vector<std::vector<BigInt>> multipliers(n, std::vector<BigInt>(k, 0));
  if (k == n && seed == 0) {
    for (std::size_t i = 0; i < n; ++i) multipliers[i][i] = 1;
    return Reduction{g, seed, std::move(multipliers), false};
  }
  if (g.has_valuation_override()) {
    throw std::invalid_argument("generic_reduce cannot combine terms carrying valuation overrides");
  }

  std::mt19937_64 rng(seed);
  std::vector<SparsePolynomial> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // A row cancelling to zero has probability ~2^-32; redraw it.
    while (true) {
      std::map<ExponentVector, Term> terms;
      for (std::size_t j = 0; j < k; ++j) {
        multipliers[i][j] = draw_multiplier(rng);
        const BigRational a(multipliers[i][j]);
        if (a.is_zero()) continue;
        for (const auto& [exponent, term] : g[j].terms()) {
          auto& slot = terms[exponent];
          slot.coefficient += a * term.coefficient;
        }
      }
      std::erase_if(terms, [](const auto& kv) { return kv.second.coefficient.is_zero(); });
      if (!terms.empty()) {
        rows.emplace_back(n, std::move(terms));
        break;
      }
    }
  }
  return Reduction{SparsePolynomialSystem(n, std::move(rows)), seed, std::move(multipliers), false};
}

// ---------------------------------------------------------------------------
// Zero strata

bool Specialization::any_vanished() const {
  return std::any_of(polynomials.begin(), polynomials.end(), [](const auto& p) { return !p.has_value(); });
}

std::vector<SparsePolynomial> Specialization::nonzero() const {
  std::vector<SparsePolynomial> out;
  for (const auto& p : polynomials) {
    if (p) out.push_back(*p);
  }
  return out;
}

Specialization specialize_zero(const SparsePolynomialSystem& g, const std::set<std::size_t>& zeroed) {
  const std::size_t n = g.variables();
  for (std::size_t i : zeroed) {
    if (i >= n) throw std::invalid_argument("specialized variable index out of range");
  }
  Specialization out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!zeroed.count(i)) out.surviving_variables.push_back(i);
  }
  for (const auto& poly : g.polynomials()) {
    std::map<ExponentVector, Term> kept;
    for (const auto& [exponent, term] : poly.terms()) {
      bool drop = false;
      for (std::size_t i : zeroed) {
        if (exponent[i] < 0) {
          throw std::invalid_argument("cannot set x" + std::to_string(i + 1) +
                                      " = 0: it carries a negative exponent");
        }
        if (exponent[i] > 0) drop = true;
      }
      if (drop) continue;
      ExponentVector reduced;
      reduced.reserve(out.surviving_variables.size());
      for (std::size_t i : out.surviving_variables) reduced.push_back(exponent[i]);
      kept.emplace(std::move(reduced), term);
    }
    if (kept.empty()) {
      out.polynomials.emplace_back(std::nullopt);
    } else {
      out.polynomials.emplace_back(SparsePolynomial(out.surviving_variables.size(), std::move(kept)));
    }
  }
  return out;
}

}  // namespace fewnomial

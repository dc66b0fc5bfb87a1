#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fewnomial {

using BigInt = mpz_class;

/// Thrown when textual input cannot be parsed. `position` is a byte offset
/// into the text that was being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Thrown when an internal invariant that must hold mathematically fails.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * Arbitrary-precision rational number, always kept in lowest terms with a
 * positive denominator. Zero is 0/1.
 */
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value) : q_(value) {}
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "[+-]int[/posint]".
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

/// A rational number or +infinity (the valuation of zero).
class ExtendedValuation {
 public:
  static ExtendedValuation infinity() { return ExtendedValuation(); }
  ExtendedValuation(BigRational value) : value_(std::move(value)) {}  // NOLINT

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  const BigRational& value() const;
  std::string to_string() const;

  friend ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b);
  friend bool operator==(const ExtendedValuation& a, const ExtendedValuation& b) = default;
  friend std::strong_ordering operator<=>(const ExtendedValuation& a, const ExtendedValuation& b);

 private:
  ExtendedValuation() = default;
  std::optional<BigRational> value_;
};

/// Deterministic primality test, exact on all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Exponent of p in q; +infinity for q = 0. Throws std::invalid_argument for
/// non-prime p.
ExtendedValuation ord_p(const BigRational& q, std::uint64_t p);

/// Same as ord_p, but for values known to be nonzero; returns a plain integer.
long ord_p_nonzero(const BigRational& q, std::uint64_t p);

BigInt pow_int(const BigInt& base, unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace fewnomial

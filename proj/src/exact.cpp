#include "fewnomial/exact.hpp"

#include <cctype>
#include <ostream>

namespace fewnomial {

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::parse(std::string_view text) {
  std::size_t i = 0;
  const auto fail = [&](const char* msg) { throw ParseError(msg, i); };
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  const auto digits = [&]() {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected digits in rational literal");
    return BigInt(std::string(text.substr(start, i - start)));
  };
  BigInt num = digits();
  BigInt den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits();
    if (den == 0) fail("zero denominator in rational literal");
  }
  if (i != text.size()) fail("trailing characters in rational literal");
  if (negative) num = -num;
  return BigRational(num, den);
}

std::string BigRational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

const BigRational& ExtendedValuation::value() const {
  if (!value_) throw std::logic_error("valuation is +infinity");
  return *value_;
}

std::string ExtendedValuation::to_string() const {
  return value_ ? value_->to_string() : std::string("+inf");
}

ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtendedValuation::infinity();
  return ExtendedValuation(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const ExtendedValuation& a, const ExtendedValuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *a.value_ <=> *b.value_;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kSmall) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

long remove_factor(const BigInt& value, const BigInt& p) {
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t()));
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

}  // namespace

long ord_p_nonzero(const BigRational& q, std::uint64_t p) {
  require_prime(p);
  if (q.is_zero()) throw std::invalid_argument("ord_p_nonzero called on zero");
  const BigInt prime(static_cast<unsigned long>(p));
  return remove_factor(q.numerator(), prime) - remove_factor(q.denominator(), prime);
}

ExtendedValuation ord_p(const BigRational& q, std::uint64_t p) {
  require_prime(p);
  if (q.is_zero()) return ExtendedValuation::infinity();
  return ExtendedValuation(BigRational(ord_p_nonzero(q, p)));
}

BigInt pow_int(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  if (k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace fewnomial

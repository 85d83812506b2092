#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tlgram {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Exact quotient; the caller guarantees that `den` divides `num`.
inline BigInt divexact(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

/// Parses "p" or "p/q" into a canonical rational; throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace tlgram

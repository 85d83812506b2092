#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tlgram/numbers.hpp"

namespace tlgram {

/// Integer Laurent polynomial in the skein variable A, i.e. an element of
/// Z[A, A^-1]. Terms are sorted by exponent with no zero coefficients.
class Laurent {
 public:
  using Term = std::pair<int, BigInt>;  // (exponent, coefficient)

  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  explicit Laurent(BigInt c);

  static Laurent monomial(BigInt coeff, int exponent);
  static Laurent A() { return monomial(1, 1); }
  /// The loop value δ = -A^2 - A^-2.
  static Laurent loop_value();
  static Laurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int exponent) const;
  /// Smallest / largest exponent; both 0 for the zero polynomial.
  int min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }
  const BigInt& leading_coeff() const { return terms_.back().second; }

  /// Multiplies by A^shift.
  Laurent shifted(int shift) const;
  /// A ↦ A^-1.
  Laurent bar() const;

  /// Throws std::domain_error when a negative power meets value 0.
  Rational evaluate(const Rational& value) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  Laurent& operator*=(const Laurent& rhs);
  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
  friend bool operator==(const Laurent& x, const Laurent& y) { return x.terms_ == y.terms_; }
  /// Arbitrary total order, usable as a map key.
  friend bool operator<(const Laurent& x, const Laurent& y);

  /// Canonical text, exponents descending: `1*A^4 + 1*A^-4`; zero is `0`.
  std::string to_string() const;
  static Laurent parse(const std::string& text);

 private:
  std::vector<Term> terms_;
};

Laurent pow(const Laurent& base, unsigned exponent);

inline bool is_zero(const Laurent& p) { return p.is_zero(); }

}  // namespace tlgram

#pragma once

#include <string>

#include "tlgram/laurent.hpp"

namespace tlgram {

/// Element of the fraction field of Z[A, A^-1], kept in a canonical form:
/// the denominator is a polynomial in A with nonzero constant term and
/// positive leading coefficient, numerator and denominator share no common
/// factor (polynomial or integer content), and zero is 0/1. Equal values
/// therefore have equal representations.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Laurent num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is zero.
  RationalFunction(Laurent num, Laurent den);

  const Laurent& numerator() const { return num_; }
  const Laurent& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in Z[A, A^-1].
  bool is_laurent() const { return den_ == Laurent(1); }

  /// Throws std::domain_error if the denominator vanishes at `value`.
  Rational evaluate(const Rational& value) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
  friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
  friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
  friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  /// `(num)/(den)` with canonical Laurent text, or just the numerator text
  /// when the denominator is 1.
  std::string to_string() const;

 private:
  void canonicalize();

  Laurent num_;
  Laurent den_;
};

}  // namespace tlgram

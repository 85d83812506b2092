#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tlgram/numbers.hpp"

namespace tlgram {

/// Exact polynomial in two commuting variables α ("a") and δ ("d") with
/// integer coefficients.
///
/// Stored sparsely as terms sorted ascending by (α-exponent, δ-exponent) with
/// no zero coefficients, so structural equality is polynomial equality.
/// Products and exact quotients go through a dense scratch grid, which is the
/// hot path of the symbolic Gram determinant.
class Bivariate {
 public:
  struct Term {
    unsigned alpha = 0;
    unsigned delta = 0;
    BigInt coeff;

    friend bool operator==(const Term& x, const Term& y) {
      return x.alpha == y.alpha && x.delta == y.delta && x.coeff == y.coeff;
    }
  };

  Bivariate() = default;
  Bivariate(long c);  // NOLINT(google-explicit-constructor)
  explicit Bivariate(BigInt c);

  static Bivariate monomial(BigInt coeff, unsigned alpha_exp, unsigned delta_exp);
  static Bivariate alpha() { return monomial(1, 1, 0); }
  static Bivariate delta() { return monomial(1, 0, 1); }
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static Bivariate from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  BigInt coeff(unsigned alpha_exp, unsigned delta_exp) const;

  /// Degrees of the zero polynomial are reported as 0.
  unsigned degree_alpha() const;
  unsigned degree_delta() const;
  unsigned total_degree() const;
  /// Coefficient of δ^degree_delta() as a polynomial in α alone.
  Bivariate leading_in_delta() const;

  /// p(α, δ) ↦ p(−α, δ).
  Bivariate with_alpha_negated() const;

  Rational evaluate(const Rational& alpha_value, const Rational& delta_value) const;
  std::uint64_t evaluate_mod(std::uint64_t alpha_value, std::uint64_t delta_value, std::uint64_t p) const;

  Bivariate operator-() const;
  Bivariate& operator+=(const Bivariate& rhs);
  Bivariate& operator-=(const Bivariate& rhs);
  Bivariate& operator*=(const Bivariate& rhs);
  friend Bivariate operator+(Bivariate lhs, const Bivariate& rhs) { return lhs += rhs; }
  friend Bivariate operator-(Bivariate lhs, const Bivariate& rhs) { return lhs -= rhs; }
  friend Bivariate operator*(const Bivariate& lhs, const Bivariate& rhs);
  friend bool operator==(const Bivariate& x, const Bivariate& y) { return x.terms_ == y.terms_; }

  /// Canonical text, terms by (α, δ) exponent descending:
  /// `-1*a^2*d^0 + 1*a^0*d^2`; the zero polynomial is `0`.
  std::string to_string() const;
  static Bivariate parse(const std::string& text);

 private:
  std::vector<Term> terms_;
};

Bivariate pow(const Bivariate& base, unsigned exponent);

inline bool is_zero(const Bivariate& p) { return p.is_zero(); }

/// Exact quotient num / den in Z[α, δ]. Throws std::domain_error if den is
/// zero or does not divide num.
Bivariate divexact(const Bivariate& num, const Bivariate& den);

/// (x*y - z*w) / den, the fraction-free elimination update, computed in one
/// dense accumulation.
Bivariate cross_divexact(const Bivariate& x, const Bivariate& y, const Bivariate& z, const Bivariate& w,
                         const Bivariate& den);

}  // namespace tlgram

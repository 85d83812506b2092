#include "tlgram/rational_function.hpp"

#include <stdexcept>

#include "univariate.hpp"

namespace tlgram {
namespace {

// Laurent p = A^low * poly(A), with poly having a nonzero constant term.
detail::UPoly to_upoly(const Laurent& p) {
  detail::UPoly out(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - p.min_exponent())] = c;
  return out;
}

Laurent from_upoly(const detail::UPoly& p, int low) {
  std::vector<Laurent::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) != 0) terms.emplace_back(static_cast<int>(i) + low, p[i]);
  }
  return Laurent::from_terms(std::move(terms));
}

}  // namespace

RationalFunction::RationalFunction(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  const int shift = num_.min_exponent() - den_.min_exponent();
  detail::UPoly n = to_upoly(num_);
  detail::UPoly d = to_upoly(den_);
  if (d.size() > 1) {
    const detail::UPoly g = detail::primitive_gcd(n, d);
    if (detail::degree(g) > 0) {
      n = detail::divexact(n, g);
      d = detail::divexact(d, g);
    }
  }
  BigInt c = detail::content(n);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), detail::content(d).get_mpz_t());
  if (sgn(d.back()) < 0) c = -c;
  if (c != 1) {
    for (auto& x : n) x = divexact(x, c);
    for (auto& x : d) x = divexact(x, c);
  }
  num_ = from_upoly(n, shift);
  den_ = from_upoly(d, 0);
}

Rational RationalFunction::evaluate(const Rational& value) const {
  const Rational d = den_.evaluate(value);
  if (sgn(d) == 0) throw std::domain_error("rational function denominator vanishes at " + value.get_str());
  return num_.evaluate(value) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  canonicalize();
  return *this;
}

std::string RationalFunction::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace tlgram

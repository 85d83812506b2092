#include "tlgram/bivariate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <tuple>

#include "tlgram/errors.hpp"
#include "tlgram/modular.hpp"

namespace tlgram {
namespace {

bool term_less(const Bivariate::Term& x, const Bivariate::Term& y) {
  return std::tie(x.alpha, x.delta) < std::tie(y.alpha, y.delta);
}

/// Dense coefficient grid indexed by (α-exponent, δ-exponent).
class Grid {
 public:
  Grid(unsigned alpha_size, unsigned delta_size)
      : alpha_size_(alpha_size), delta_size_(delta_size), cells_(std::size_t{alpha_size} * delta_size) {}

  unsigned alpha_size() const { return alpha_size_; }
  unsigned delta_size() const { return delta_size_; }
  mpz_ptr at(unsigned a, unsigned d) { return cells_[std::size_t{a} * delta_size_ + d].get_mpz_t(); }

  void add_product(const Bivariate& x, const Bivariate& y) {
    for (const auto& s : x.terms()) {
      for (const auto& t : y.terms()) {
        mpz_addmul(at(s.alpha + t.alpha, s.delta + t.delta), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      }
    }
  }

  void sub_product(const Bivariate& x, const Bivariate& y) {
    for (const auto& s : x.terms()) {
      for (const auto& t : y.terms()) {
        mpz_submul(at(s.alpha + t.alpha, s.delta + t.delta), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      }
    }
  }

  std::vector<Bivariate::Term> collect() {
    std::vector<Bivariate::Term> out;
    for (unsigned a = 0; a < alpha_size_; ++a) {
      for (unsigned d = 0; d < delta_size_; ++d) {
        mpz_ptr c = at(a, d);
        if (mpz_sgn(c) != 0) out.push_back({a, d, BigInt(c)});
      }
    }
    return out;
  }

  /// Replaces the grid by zero and returns grid / den, throwing when the
  /// division is not exact. Eliminates the lex-leading term (δ first, then α).
  std::vector<Bivariate::Term> divide(const Bivariate& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& dt = den.terms();
    const auto lead = *std::max_element(dt.begin(), dt.end(), [](const auto& x, const auto& y) {
      return std::tie(x.delta, x.alpha) < std::tie(y.delta, y.alpha);
    });
    std::vector<Bivariate::Term> quotient;
    BigInt q;
    for (int d = static_cast<int>(delta_size_) - 1; d >= 0; --d) {
      for (int a = static_cast<int>(alpha_size_) - 1; a >= 0; --a) {
        mpz_ptr c = at(static_cast<unsigned>(a), static_cast<unsigned>(d));
        if (mpz_sgn(c) == 0) continue;
        const int qa = a - static_cast<int>(lead.alpha);
        const int qd = d - static_cast<int>(lead.delta);
        if (qa < 0 || qd < 0 || !mpz_divisible_p(c, lead.coeff.get_mpz_t())) {
          throw std::domain_error("polynomial division is not exact");
        }
        mpz_divexact(q.get_mpz_t(), c, lead.coeff.get_mpz_t());
        for (const auto& t : dt) {
          const int ra = qa + static_cast<int>(t.alpha);
          const int rd = qd + static_cast<int>(t.delta);
          if (ra >= static_cast<int>(alpha_size_) || rd >= static_cast<int>(delta_size_)) {
            throw std::domain_error("polynomial division is not exact");
          }
          mpz_submul(at(static_cast<unsigned>(ra), static_cast<unsigned>(rd)), q.get_mpz_t(), t.coeff.get_mpz_t());
        }
        quotient.push_back({static_cast<unsigned>(qa), static_cast<unsigned>(qd), q});
      }
    }
    std::sort(quotient.begin(), quotient.end(), term_less);
    return quotient;
  }

 private:
  unsigned alpha_size_;
  unsigned delta_size_;
  std::vector<BigInt> cells_;
};

unsigned max_alpha(const Bivariate& p) { return p.degree_alpha(); }
unsigned max_delta(const Bivariate& p) { return p.degree_delta(); }

}  // namespace

Bivariate::Bivariate(long c) {
  if (c != 0) terms_.push_back({0, 0, BigInt(c)});
}

Bivariate::Bivariate(BigInt c) {
  if (sgn(c) != 0) terms_.push_back({0, 0, std::move(c)});
}

Bivariate Bivariate::monomial(BigInt coeff, unsigned alpha_exp, unsigned delta_exp) {
  Bivariate p;
  if (sgn(coeff) != 0) p.terms_.push_back({alpha_exp, delta_exp, std::move(coeff)});
  return p;
}

Bivariate Bivariate::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Bivariate p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().alpha == t.alpha && p.terms_.back().delta == t.delta) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

BigInt Bivariate::coeff(unsigned alpha_exp, unsigned delta_exp) const {
  const Term key{alpha_exp, delta_exp, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && it->alpha == alpha_exp && it->delta == delta_exp) return it->coeff;
  return 0;
}

unsigned Bivariate::degree_alpha() const { return terms_.empty() ? 0 : terms_.back().alpha; }

unsigned Bivariate::degree_delta() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.delta);
  return d;
}

unsigned Bivariate::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.alpha + t.delta);
  return d;
}

Bivariate Bivariate::leading_in_delta() const {
  const unsigned top = degree_delta();
  Bivariate p;
  for (const auto& t : terms_) {
    if (t.delta == top) p.terms_.push_back({t.alpha, 0, t.coeff});
  }
  return p;
}

Bivariate Bivariate::with_alpha_negated() const {
  Bivariate p = *this;
  for (auto& t : p.terms_) {
    if (t.alpha % 2 == 1) t.coeff = -t.coeff;
  }
  return p;
}

Rational Bivariate::evaluate(const Rational& alpha_value, const Rational& delta_value) const {
  Rational sum = 0;
  Rational ap, dp;
  for (const auto& t : terms_) {
    mpz_pow_ui(ap.get_num_mpz_t(), alpha_value.get_num_mpz_t(), t.alpha);
    mpz_pow_ui(ap.get_den_mpz_t(), alpha_value.get_den_mpz_t(), t.alpha);
    mpz_pow_ui(dp.get_num_mpz_t(), delta_value.get_num_mpz_t(), t.delta);
    mpz_pow_ui(dp.get_den_mpz_t(), delta_value.get_den_mpz_t(), t.delta);
    sum += Rational(t.coeff) * ap * dp;
  }
  return sum;
}

std::uint64_t Bivariate::evaluate_mod(std::uint64_t alpha_value, std::uint64_t delta_value, std::uint64_t p) const {
  std::uint64_t sum = 0;
  for (const auto& t : terms_) {
    const std::uint64_t c = reduce_mod(t.coeff, p);
    const std::uint64_t m = mul_mod(pow_mod(alpha_value, t.alpha, p), pow_mod(delta_value, t.delta, p), p);
    sum = add_mod(sum, mul_mod(c, m, p), p);
  }
  return sum;
}

Bivariate Bivariate::operator-() const {
  Bivariate p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Bivariate& Bivariate::operator+=(const Bivariate& rhs) {
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != terms_.end() && term_less(*i, *j))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || term_less(*j, *i)) {
      out.push_back(*j++);
    } else {
      BigInt c = i->coeff + j->coeff;
      if (sgn(c) != 0) out.push_back({i->alpha, i->delta, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Bivariate& Bivariate::operator-=(const Bivariate& rhs) { return *this += -rhs; }

Bivariate& Bivariate::operator*=(const Bivariate& rhs) {
  *this = *this * rhs;
  return *this;
}

Bivariate operator*(const Bivariate& lhs, const Bivariate& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.is_monomial() || rhs.is_monomial()) {
    // Shifting by a monomial keeps the term order.
    const auto& mono = lhs.is_monomial() ? lhs.terms_.front() : rhs.terms_.front();
    const auto& other = lhs.is_monomial() ? rhs : lhs;
    Bivariate p;
    p.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      p.terms_.push_back({t.alpha + mono.alpha, t.delta + mono.delta, t.coeff * mono.coeff});
    }
    return p;
  }
  Grid grid(max_alpha(lhs) + max_alpha(rhs) + 1, max_delta(lhs) + max_delta(rhs) + 1);
  grid.add_product(lhs, rhs);
  Bivariate p;
  p.terms_ = grid.collect();
  return p;
}

Bivariate pow(const Bivariate& base, unsigned exponent) {
  Bivariate result(1);
  Bivariate b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Bivariate divexact(const Bivariate& num, const Bivariate& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.is_zero()) return {};
  Grid grid(num.degree_alpha() + 1, num.degree_delta() + 1);
  for (const auto& t : num.terms()) mpz_set(grid.at(t.alpha, t.delta), t.coeff.get_mpz_t());
  return Bivariate::from_terms(grid.divide(den));
}

Bivariate cross_divexact(const Bivariate& x, const Bivariate& y, const Bivariate& z, const Bivariate& w,
                         const Bivariate& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  const unsigned na = std::max(max_alpha(x) + max_alpha(y), max_alpha(z) + max_alpha(w)) + 1;
  const unsigned nd = std::max(max_delta(x) + max_delta(y), max_delta(z) + max_delta(w)) + 1;
  Grid grid(na, nd);
  grid.add_product(x, y);
  grid.sub_product(z, w);
  return Bivariate::from_terms(grid.divide(den));
}

std::string Bivariate::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->coeff.get_str() + "*a^" + std::to_string(it->alpha) + "*d^" + std::to_string(it->delta);
  }
  return out;
}

namespace {

unsigned parse_exponent(const std::string& text, std::size_t& pos, const std::string& var) {
  if (text.compare(pos, var.size(), var) != 0) throw ParseError("expected '" + var + "' in '" + text + "'");
  pos += var.size();
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start || pos - start > 9) throw ParseError("bad exponent in '" + text + "'");
  return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
}

}  // namespace

Bivariate Bivariate::parse(const std::string& text) {
  if (text == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (true) {
    const std::size_t star = text.find('*', pos);
    if (star == std::string::npos) throw ParseError("bad term in '" + text + "'");
    BigInt c;
    if (c.set_str(text.substr(pos, star - pos), 10) != 0 || sgn(c) == 0) {
      throw ParseError("bad coefficient in '" + text + "'");
    }
    pos = star;
    const unsigned a = parse_exponent(text, pos, "*a^");
    const unsigned d = parse_exponent(text, pos, "*d^");
    terms.push_back({a, d, c});
    if (pos == text.size()) break;
    if (text.compare(pos, 3, " + ") != 0) throw ParseError("expected ' + ' in '" + text + "'");
    pos += 3;
  }
  Bivariate p = from_terms(terms);
  if (p.to_string() != text) throw ParseError("not in canonical form: '" + text + "'");
  return p;
}

}  // namespace tlgram

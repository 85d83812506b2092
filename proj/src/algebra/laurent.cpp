#include "tlgram/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "tlgram/errors.hpp"

namespace tlgram {

Laurent::Laurent(long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

Laurent::Laurent(BigInt c) {
  if (sgn(c) != 0) terms_.emplace_back(0, std::move(c));
}

Laurent Laurent::monomial(BigInt coeff, int exponent) {
  Laurent p;
  if (sgn(coeff) != 0) p.terms_.emplace_back(exponent, std::move(coeff));
  return p;
}

Laurent Laurent::loop_value() { return from_terms({{-2, BigInt(-1)}, {2, BigInt(-1)}}); }

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  Laurent p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    } else if (sgn(t.second) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

BigInt Laurent::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

Laurent Laurent::shifted(int shift) const {
  Laurent p = *this;
  for (auto& t : p.terms_) t.first += shift;
  return p;
}

Laurent Laurent::bar() const {
  Laurent p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

Rational Laurent::evaluate(const Rational& value) const {
  if (terms_.empty()) return 0;
  if (sgn(value) == 0) {
    if (min_exponent() < 0) throw std::domain_error("negative power of A evaluated at 0");
    return Rational(coeff(0));
  }
  // Horner in A from the top exponent down, then one division by A^-min.
  Rational acc = 0;
  int e = max_exponent();
  auto it = terms_.rbegin();
  while (true) {
    if (it != terms_.rend() && it->first == e) {
      acc += Rational(it->second);
      ++it;
    }
    if (e == min_exponent()) break;
    acc *= value;
    --e;
  }
  const int low = min_exponent();
  Rational scale;
  const unsigned mag = static_cast<unsigned>(low < 0 ? -low : low);
  mpz_pow_ui(scale.get_num_mpz_t(), value.get_num_mpz_t(), mag);
  mpz_pow_ui(scale.get_den_mpz_t(), value.get_den_mpz_t(), mag);
  scale.canonicalize();
  if (low >= 0) return acc * scale;
  return acc / scale;
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      BigInt c = i->second + j->second;
      if (sgn(c) != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) { return *this += -rhs; }

Laurent& Laurent::operator*=(const Laurent& rhs) {
  *this = *this * rhs;
  return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const int low = lhs.min_exponent() + rhs.min_exponent();
  std::vector<BigInt> dense(static_cast<std::size_t>(lhs.max_exponent() + rhs.max_exponent() - low + 1));
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      mpz_addmul(dense[static_cast<std::size_t>(e1 + e2 - low)].get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
    }
  }
  Laurent p;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) p.terms_.emplace_back(static_cast<int>(i) + low, std::move(dense[i]));
  }
  return p;
}

bool operator<(const Laurent& x, const Laurent& y) {
  if (x.terms_.size() != y.terms_.size()) return x.terms_.size() < y.terms_.size();
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (x.terms_[i].first != y.terms_[i].first) return x.terms_[i].first < y.terms_[i].first;
    const int c = cmp(x.terms_[i].second, y.terms_[i].second);
    if (c != 0) return c < 0;
  }
  return false;
}

Laurent pow(const Laurent& base, unsigned exponent) {
  Laurent result(1);
  Laurent b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.get_str() + "*A^" + std::to_string(it->first);
  }
  return out;
}

Laurent Laurent::parse(const std::string& text) {
  if (text == "0") return {};
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (true) {
    const std::size_t star = text.find("*A^", pos);
    if (star == std::string::npos) throw ParseError("bad Laurent term in '" + text + "'");
    BigInt c;
    if (c.set_str(text.substr(pos, star - pos), 10) != 0 || sgn(c) == 0) {
      throw ParseError("bad coefficient in '" + text + "'");
    }
    pos = star + 3;
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits || pos - digits > 9) throw ParseError("bad exponent in '" + text + "'");
    terms.emplace_back(std::stoi(text.substr(start, pos - start)), c);
    if (pos == text.size()) break;
    if (text.compare(pos, 3, " + ") != 0) throw ParseError("expected ' + ' in '" + text + "'");
    pos += 3;
  }
  Laurent p = from_terms(terms);
  if (p.to_string() != text) throw ParseError("not in canonical form: '" + text + "'");
  return p;
}

}  // namespace tlgram

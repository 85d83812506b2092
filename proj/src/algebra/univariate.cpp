#include "univariate.hpp"

#include <stdexcept>
#include <utility>

namespace tlgram::detail {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

BigInt content(const UPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly primitive_part(const UPoly& p) {
  if (p.empty()) return p;
  BigInt g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  UPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = tlgram::divexact(p[i], g);
  return out;
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("pseudo-remainder by zero");
  const int db = degree(b);
  const BigInt& lead = b.back();
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const BigInt top = a.back();
    for (auto& c : a) c *= lead;
    for (int i = 0; i <= db; ++i) {
      mpz_submul(a[static_cast<std::size_t>(i + shift)].get_mpz_t(), top.get_mpz_t(), b[static_cast<std::size_t>(i)].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

UPoly primitive_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = primitive_part(a);
  UPoly y = primitive_part(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    UPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return x;
}

UPoly divexact(const UPoly& num, const UPoly& den) {
  if (den.empty()) throw std::domain_error("division by the zero polynomial");
  if (num.empty()) return {};
  const int dd = degree(den);
  if (degree(num) < dd) throw std::domain_error("polynomial division is not exact");
  UPoly rem = num;
  UPoly quot(static_cast<std::size_t>(degree(num) - dd + 1));
  for (int i = degree(num) - dd; i >= 0; --i) {
    BigInt& top = rem[static_cast<std::size_t>(i + dd)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.back().get_mpz_t())) {
      throw std::domain_error("polynomial division is not exact");
    }
    BigInt q = tlgram::divexact(top, den.back());
    for (int j = 0; j <= dd; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), q.get_mpz_t(), den[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(i)] = std::move(q);
  }
  trim(rem);
  if (!rem.empty()) throw std::domain_error("polynomial division is not exact");
  return quot;
}

}  // namespace tlgram::detail

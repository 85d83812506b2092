#include <algorithm>
#include <random>
#include <stdexcept>

#include "tlgram/chebyshev.hpp"
#include "tlgram/guards.hpp"
#include "tlgram/linalg.hpp"
#include "tlgram/skein.hpp"

namespace tlgram {

Laurent delta_k(int k) {
  if (k < 0) throw std::invalid_argument("Δ_k needs k >= 0");
  std::vector<Laurent::Term> terms;
  const BigInt sign = k % 2 == 0 ? 1 : -1;
  for (int i = 0; i <= k; ++i) terms.emplace_back(2 * k - 4 * i, sign);
  return Laurent::from_terms(std::move(terms));
}

Laurent encircling_eigenvalue(int k) {
  const int e = 2 * (k + 1);
  return -(Laurent::monomial(1, e) + Laurent::monomial(1, -e));
}

Laurent phi(int k, int m, int t) {
  if (k < 0 || m < 0 || t < 0) throw std::invalid_argument("φ needs k, m, t >= 0");
  return pow(encircling_eigenvalue(k), static_cast<unsigned>(m)) *
         pow(Laurent::loop_value(), static_cast<unsigned>(t)) * delta_k(k);
}

SkeinValueMatrix f_matrix(const GramMatrix& gram, int k) {
  require_range("n", gram.n, 1, 4);
  require_range("k", k, 1, 64);
  SkeinValueMatrix f;
  f.n = gram.n;
  f.k = k;
  f.entries = gram.pairs.map([k](const PairingValue& v) { return phi(k - 1, v.m, v.t); });
  return f;
}

SkeinValueMatrix f_matrix(int n, int k) {
  require_range("n", n, 1, 4);
  return f_matrix(gram_matrix(n), k);
}

ExactMatrix<Laurent> specialized_gram_times_delta(const GramMatrix& gram, int k) {
  require_range("k", k, 1, 64);
  const Laurent t = chebyshev_in_A(static_cast<unsigned>(k));
  const Laurent alpha_image = (k - 1) % 2 == 0 ? t : -t;
  const Laurent scale = delta_k(k - 1);
  return gram.entries.map([&](const Bivariate& e) { return scale * substitute_delta(e, alpha_image); });
}

bool valid_skein_sample(int k, const Rational& a0) {
  if (sgn(a0) == 0 || abs(a0) == 1) return false;
  return sgn(delta_k(k - 1).evaluate(a0)) != 0;
}

Rational delta_at(const Rational& a0) {
  const Rational sq = a0 * a0;
  return -(sq + 1 / sq);
}

std::size_t nullity_f(const GramMatrix& gram, int k, const Rational& a0) {
  require_range("k", k, 1, gram.n);
  if (!valid_skein_sample(k, a0)) throw std::domain_error("A = " + a0.get_str() + " is not a valid sample");
  const SkeinValueMatrix f = f_matrix(gram, k);
  return nullity_exact(f.entries.map([&](const Laurent& e) { return e.evaluate(a0); }));
}

std::size_t nullity_f(int n, int k, const Rational& a0) {
  require_range("n", n, 1, 4);
  return nullity_f(gram_matrix(n), k, a0);
}

SkeinNullitySampling sample_nullity_f(const GramMatrix& gram, int k, int count, std::uint64_t seed) {
  require_range("k", k, 1, gram.n);
  require_range("samples", count, 1, 64);
  SkeinNullitySampling s;
  s.n = gram.n;
  s.k = k;
  s.seed = seed;
  s.bound = binomial(2 * gram.n, gram.n - k).get_ui();
  std::mt19937_64 engine(seed);
  constexpr int kMaxAttempts = 5;
  for (s.attempts = 1; s.attempts <= kMaxAttempts; ++s.attempts) {
    s.samples.clear();
    while (static_cast<int>(s.samples.size()) < count) {
      const Rational a0 = sample_rational(engine);
      if (!valid_skein_sample(k, a0)) continue;
      s.samples.push_back({a0, nullity_f(gram, k, a0)});
    }
    s.consistent = std::all_of(s.samples.begin(), s.samples.end(),
                               [&](const SkeinNullitySample& x) { return x.nullity == s.samples.front().nullity; });
    if (s.consistent) break;
  }
  s.attempts = std::min(s.attempts, kMaxAttempts);
  s.pass = std::all_of(s.samples.begin(), s.samples.end(),
                       [&](const SkeinNullitySample& x) { return x.nullity >= s.bound; });
  return s;
}

}  // namespace tlgram

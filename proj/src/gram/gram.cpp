#include "tlgram/gram.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tlgram/chebyshev.hpp"
#include "tlgram/guards.hpp"
#include "tlgram/linalg.hpp"
#include "tlgram/modular.hpp"

namespace tlgram {

ExactMatrix<PairingValue> pairing_table(const std::vector<AnnularDiagram>& basis) {
  const std::size_t size = basis.size();
  ExactMatrix<PairingValue> table(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      table(i, j) = pair(basis[i], basis[j]);
      table(j, i) = table(i, j);
    }
  }
  return table;
}

GramMatrix gram_matrix(int n) {
  require_range("n", n, 1, 5);
  GramMatrix g;
  g.n = n;
  g.basis = enumerate(n);
  g.pairs = pairing_table(g.basis);
  g.entries = g.pairs.map([](const PairingValue& v) {
    return Bivariate::monomial(1, static_cast<unsigned>(v.m), static_cast<unsigned>(v.t));
  });
  return g;
}

std::vector<int> sign_matrix(const std::vector<AnnularDiagram>& basis) {
  std::vector<int> diag;
  diag.reserve(basis.size());
  for (const auto& b : basis) diag.push_back(b.cut_crossings() % 2 == 0 ? 1 : -1);
  return diag;
}

Bivariate barad_product(int n) {
  require_range("n", n, 1, 3);
  const Bivariate alpha_sq = pow(Bivariate::alpha(), 2);
  Bivariate out(1);
  for (int i = 1; i <= n; ++i) {
    const Bivariate t = chebyshev(static_cast<unsigned>(i));
    out *= pow(t * t - alpha_sq, static_cast<unsigned>(binomial(2 * n, n - i).get_ui()));
  }
  return out;
}

std::uint64_t barad_product_mod(int n, std::uint64_t alpha, std::uint64_t delta, std::uint64_t p) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::uint64_t alpha_sq = mul_mod(alpha, alpha, p);
  // T_i(δ) by the three-term recurrence mod p.
  std::uint64_t prev = 2 % p;
  std::uint64_t cur = delta % p;
  std::uint64_t out = 1 % p;
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t factor = sub_mod(mul_mod(cur, cur, p), alpha_sq, p);
    out = mul_mod(out, pow_mod(factor, binomial(2 * n, n - i).get_ui(), p), p);
    const std::uint64_t next = sub_mod(mul_mod(delta % p, cur, p), prev, p);
    prev = cur;
    cur = next;
  }
  return out;
}

std::uint64_t identity_degree_bound(int n) { return 2ULL * static_cast<std::uint64_t>(n) * binomial(2 * n, n).get_ui(); }

SymbolicReport verify_conjecture_symbolic(int n) {
  require_range("n", n, 1, 3);
  SymbolicReport r;
  r.n = n;
  r.determinant = det_fraction_free(gram_matrix(n).entries);
  r.product = barad_product(n);
  r.pass = r.determinant == r.product;
  return r;
}

ModularReport verify_conjecture_modular(int n, int trials, std::uint64_t seed) {
  require_range("n", n, 1, 5);
  require_range("trials", trials, 1, 1 << 20);
  const GramMatrix gram = gram_matrix(n);
  ModularReport r;
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  r.prime = kLargePrimes[seed % kLargePrimes.size()];
  std::mt19937_64 engine(seed);
  const std::size_t size = gram.basis.size();
  r.pass = true;
  for (int t = 0; t < trials; ++t) {
    ModularTrial trial;
    trial.index = t;
    trial.alpha = uniform_residue(engine, r.prime);
    trial.delta = uniform_residue(engine, r.prime);
    ExactMatrix<std::uint64_t> m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        const PairingValue& v = gram.pairs(i, j);
        m(i, j) = mul_mod(pow_mod(trial.alpha, static_cast<std::uint64_t>(v.m), r.prime),
                          pow_mod(trial.delta, static_cast<std::uint64_t>(v.t), r.prime), r.prime);
      }
    }
    trial.determinant = det_modular(std::move(m), r.prime);
    trial.product = barad_product_mod(n, trial.alpha, trial.delta, r.prime);
    trial.pass = trial.determinant == trial.product;
    r.pass = r.pass && trial.pass;
    r.results.push_back(trial);
  }
  r.failure_bound = static_cast<double>(trials) * static_cast<double>(identity_degree_bound(n)) /
                    static_cast<double>(r.prime);
  return r;
}

bool verify_lemma2(const GramMatrix& gram) {
  const std::vector<int> p = sign_matrix(gram.basis);
  const std::size_t size = gram.basis.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const Bivariate& e = gram.entries(i, j);
      // P G P^{-1} has entry p_ii g_ij p_jj since P is a diagonal involution.
      const Bivariate conj = p[i] * p[j] == 1 ? e : -e;
      if (!(e.with_alpha_negated() == conj)) return false;
    }
  }
  return true;
}

bool verify_lemma2(int n) {
  require_range("n", n, 1, 5);
  return verify_lemma2(gram_matrix(n));
}

Rational specialized_alpha(int k, const Rational& delta0, bool flip_sign) {
  Rational t = chebyshev(static_cast<unsigned>(k)).evaluate(0, delta0);
  const bool negative = ((k - 1) % 2 != 0) != flip_sign;
  return negative ? Rational(-t) : t;
}

ExactMatrix<Rational> evaluate_gram(const GramMatrix& gram, const Rational& alpha0, const Rational& delta0) {
  int max_power = gram.n;
  std::vector<Rational> alpha_pows{Rational(1)};
  std::vector<Rational> delta_pows{Rational(1)};
  for (int e = 0; e < max_power; ++e) {
    alpha_pows.push_back(alpha_pows.back() * alpha0);
    delta_pows.push_back(delta_pows.back() * delta0);
  }
  return gram.pairs.map([&](const PairingValue& v) {
    return Rational(alpha_pows[static_cast<std::size_t>(v.m)] * delta_pows[static_cast<std::size_t>(v.t)]);
  });
}

std::size_t specialization_nullity(const GramMatrix& gram, int k, const Rational& delta0, bool flip_sign) {
  require_range("k", k, 1, gram.n);
  const Rational alpha0 = specialized_alpha(k, delta0, flip_sign);
  return nullity_exact(evaluate_gram(gram, alpha0, delta0));
}

std::size_t specialization_nullity(int n, int k, const Rational& delta0, bool flip_sign) {
  return specialization_nullity(gram_matrix(n), k, delta0, flip_sign);
}

NullitySampling sample_specialization_nullity(const GramMatrix& gram, int k, int count, std::uint64_t seed) {
  require_range("k", k, 1, gram.n);
  require_range("samples", count, 1, 64);
  NullitySampling s;
  s.n = gram.n;
  s.k = k;
  s.seed = seed;
  s.bound = binomial(2 * gram.n, gram.n - k).get_ui();
  std::mt19937_64 engine(seed);
  constexpr int kMaxAttempts = 5;
  for (s.attempts = 1; s.attempts <= kMaxAttempts; ++s.attempts) {
    s.samples.clear();
    for (int i = 0; i < count; ++i) {
      const Rational d0 = sample_rational(engine);
      s.samples.push_back({d0, specialization_nullity(gram, k, d0)});
    }
    s.consistent = std::all_of(s.samples.begin(), s.samples.end(),
                               [&](const NullitySample& x) { return x.nullity == s.samples.front().nullity; });
    if (s.consistent) break;
  }
  s.attempts = std::min(s.attempts, kMaxAttempts);
  s.pass = std::all_of(s.samples.begin(), s.samples.end(), [&](const NullitySample& x) { return x.nullity >= s.bound; });
  return s;
}

TelescopingLine telescoping(int n) {
  require_range("n", n, 1, 100000);
  TelescopingLine line;
  line.n = n;
  line.lhs = 0;
  for (int i = 1; i <= n; ++i) line.lhs += i * binomial(2 * n, n - i);
  line.lhs *= 2;
  line.rhs = n * binomial(2 * n, n);
  line.pass = line.lhs == line.rhs;
  return line;
}

}  // namespace tlgram

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tlgram/chebyshev.hpp"
#include "tlgram/errors.hpp"
#include "tlgram/gram.hpp"
#include "tlgram/linalg.hpp"
#include "tlgram/modular.hpp"

using namespace tlgram;

namespace {

const Bivariate a = Bivariate::alpha();
const Bivariate d = Bivariate::delta();

}  // namespace

TEST_CASE("gram matrix at n = 1") {
  const GramMatrix g = gram_matrix(1);
  CHECK(g.entries == ExactMatrix<Bivariate>{{d, a}, {a, d}});
}

TEST_CASE("gram structure") {
  for (int n = 1; n <= 4; ++n) {
    const GramMatrix g = gram_matrix(n);
    const std::size_t size = g.basis.size();
    CHECK(BigInt(static_cast<unsigned long>(size)) == binomial(2 * n, n));
    CHECK(g.entries.is_symmetric());
    for (std::size_t i = 0; i < size; ++i) {
      CHECK(g.entries(i, i) == pow(d, static_cast<unsigned>(n)));
      for (std::size_t j = 0; j < size; ++j) {
        const Bivariate& e = g.entries(i, j);
        REQUIRE(e.is_monomial());
        CHECK(e.terms().front().coeff == 1);
        CHECK(e.degree_alpha() % 2 == static_cast<unsigned>(g.basis[i].cut_crossings() + g.basis[j].cut_crossings()) % 2);
      }
    }
  }
}

TEST_CASE("n = 2 has a row holding both alpha and alpha*delta") {
  const GramMatrix g = gram_matrix(2);
  bool found = false;
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    bool has_a = false;
    bool has_ad = false;
    for (std::size_t j = 0; j < g.basis.size(); ++j) {
      has_a = has_a || g.entries(i, j) == a;
      has_ad = has_ad || g.entries(i, j) == a * d;
    }
    found = found || (has_a && has_ad && g.entries(i, i) == d * d);
  }
  CHECK(found);
}

TEST_CASE("chebyshev product expansion") {
  CHECK(barad_product(1) == d * d - a * a);
  const Bivariate t2 = d * d - Bivariate(2);
  CHECK(barad_product(2) == pow(d * d - a * a, 4) * (t2 * t2 - a * a));
  for (int n = 1; n <= 3; ++n) {
    const Bivariate p = barad_product(n);
    const unsigned degree = static_cast<unsigned>(n) * static_cast<unsigned>(binomial(2 * n, n).get_ui());
    CHECK(p.degree_delta() == degree);
    CHECK(p.coeff(0, degree) == 1);
  }
  CHECK_THROWS_AS(barad_product(4), GuardError);
}

TEST_CASE("barad_product_mod agrees with the expansion") {
  const std::uint64_t p = kLargePrimes[2];
  for (int n = 1; n <= 3; ++n) {
    const Bivariate prod = barad_product(n);
    CHECK(barad_product_mod(n, 5, 9, p) == prod.evaluate_mod(5, 9, p));
    CHECK(barad_product_mod(n, p - 3, 12345, p) == prod.evaluate_mod(p - 3, 12345, p));
  }
}

TEST_CASE("symbolic determinant equals the product") {
  const SymbolicReport one = verify_conjecture_symbolic(1);
  CHECK(one.pass);
  CHECK(one.determinant == d * d - a * a);
  for (int n = 2; n <= 3; ++n) {
    const SymbolicReport r = verify_conjecture_symbolic(n);
    CHECK(r.pass);
    const unsigned degree = static_cast<unsigned>(n) * static_cast<unsigned>(binomial(2 * n, n).get_ui());
    CHECK(r.determinant.degree_delta() == degree);
    CHECK(r.determinant.coeff(0, degree) == 1);
  }
  CHECK_THROWS_AS(verify_conjecture_symbolic(4), GuardError);
}

TEST_CASE("symbolic determinant at n = 2 agrees with an independent evaluation") {
  const GramMatrix g = gram_matrix(2);
  const Rational a0(3, 5);
  const Rational d0(-7, 2);
  const auto numeric = evaluate_gram(g, a0, d0);
  CHECK(oracle::cofactor_det(numeric) == barad_product(2).evaluate(a0, d0));
}

TEST_CASE("modular verification") {
  const ModularReport r = verify_conjecture_modular(4, 32, 2024);
  CHECK(r.pass);
  CHECK(r.results.size() == 32);
  CHECK(r.prime > (1ULL << 50));
  CHECK(r.failure_bound < 32.0 * 560.0 / static_cast<double>(r.prime) * (1 + 1e-12));
  CHECK(r.failure_bound < 1.0 / static_cast<double>(1ULL << 30));
  for (std::size_t i = 0; i < r.results.size(); ++i) CHECK(r.results[i].index == static_cast<int>(i));
  CHECK(identity_degree_bound(4) == 560);

  const ModularReport again = verify_conjecture_modular(4, 32, 2024);
  CHECK(again.prime == r.prime);
  CHECK(again.results.back().alpha == r.results.back().alpha);
  CHECK(again.results.back().determinant == r.results.back().determinant);

  CHECK(verify_conjecture_modular(2, 8, 3).pass);
  CHECK_THROWS_AS(verify_conjecture_modular(4, 0, 1), GuardError);
  CHECK_THROWS_AS(verify_conjecture_modular(6, 1, 1), GuardError);
}

TEST_CASE("modular check detects a wrong identity") {
  // A perturbed matrix must fail against the product with overwhelming odds.
  const GramMatrix g = gram_matrix(2);
  const std::uint64_t p = kLargePrimes[0];
  ExactMatrix<std::uint64_t> m = g.entries.map([&](const Bivariate& e) { return e.evaluate_mod(11, 29, p); });
  m(0, 1) = add_mod(m(0, 1), 1, p);
  CHECK(det_modular(m, p) != barad_product_mod(2, 11, 29, p));
}

TEST_CASE("sign conjugation") {
  for (int n = 1; n <= 5; ++n) CHECK(verify_lemma2(n));
  const GramMatrix g = gram_matrix(3);
  const auto p = sign_matrix(g.basis);
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    CHECK(p[i] * p[i] == 1);
    for (std::size_t j = 0; j < g.basis.size(); ++j) {
      const int sign = p[i] * p[j];
      CHECK(g.entries(i, j).with_alpha_negated() == (sign == 1 ? g.entries(i, j) : -g.entries(i, j)));
    }
  }
}

TEST_CASE("specialization nullity examples") {
  CHECK(specialized_alpha(1, 3) == 3);
  CHECK(evaluate_gram(gram_matrix(1), 3, 3) == ExactMatrix<Rational>{{3, 3}, {3, 3}});
  CHECK(specialization_nullity(1, 1, 3) == 1);
  CHECK(specialization_nullity(2, 1, Rational(7, 3)) == 4);
  CHECK(specialization_nullity(2, 2, Rational(7, 3)) == 1);
  CHECK_THROWS_AS(specialization_nullity(2, 3, Rational(7, 3)), GuardError);
  CHECK_THROWS_AS(specialization_nullity(2, 0, Rational(7, 3)), GuardError);
}

TEST_CASE("specialization nullity agrees with Gauss-Jordan") {
  for (int n = 1; n <= 3; ++n) {
    const GramMatrix g = gram_matrix(n);
    for (int k = 1; k <= n; ++k) {
      const Rational d0(-11, 4);
      const auto m = evaluate_gram(g, specialized_alpha(k, d0), d0);
      const std::size_t expected = m.cols() - oracle::gauss_rank(m);
      CHECK(specialization_nullity(g, k, d0) == expected);
      CHECK(expected >= binomial(2 * n, n - k).get_ui());
    }
  }
}

TEST_CASE("specialization nullity meets the bound and ignores the sign of alpha") {
  for (int n = 1; n <= 4; ++n) {
    const GramMatrix g = gram_matrix(n);
    for (int k = 1; k <= n; ++k) {
      const NullitySampling s = sample_specialization_nullity(g, k, 3, 100 + static_cast<std::uint64_t>(10 * n + k));
      CHECK(s.pass);
      CHECK(s.samples.size() == 3);
      for (const auto& x : s.samples) {
        CHECK(x.nullity >= s.bound);
        CHECK(specialization_nullity(g, k, x.sample, true) == x.nullity);
      }
    }
  }
}

TEST_CASE("telescoping identity") {
  for (int n = 1; n <= 50; ++n) {
    const TelescopingLine t = telescoping(n);
    CHECK(t.pass);
    BigInt lhs = 0;
    for (int i = 1; i <= n; ++i) lhs += 2 * i * binomial(2 * n, n - i);
    CHECK(lhs == t.lhs);
    CHECK(t.rhs == n * binomial(2 * n, n));
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(gram_matrix(0), GuardError);
  CHECK_THROWS_AS(gram_matrix(6), GuardError);
  CHECK_THROWS_AS(verify_lemma2(6), GuardError);
}

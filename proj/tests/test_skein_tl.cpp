#include <doctest.h>

#include "oracles.hpp"
#include "tlgram/chebyshev.hpp"
#include "tlgram/errors.hpp"
#include "tlgram/gram.hpp"
#include "tlgram/skein.hpp"
#include "tlgram/temperley_lieb.hpp"

using namespace tlgram;

namespace {

Laurent Am(int e) { return Laurent::monomial(1, e); }
const Laurent loop = -Am(2) - Am(-2);

}  // namespace

TEST_CASE("planar matchings") {
  CHECK(PlanarMatching::identity(2).to_string() == "(())");
  CHECK(PlanarMatching::cap(2, 1).to_string() == "()()");
  CHECK(PlanarMatching::all(3).size() == 5);
  CHECK(PlanarMatching::all(4).size() == 14);
  CHECK_THROWS_AS(PlanarMatching({2, 3, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarMatching({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarMatching::cap(3, 3), std::invalid_argument);
  CHECK(PlanarMatching::cap(2, 1).extended(1) == PlanarMatching::cap(3, 1));
}

TEST_CASE("closure loop counts") {
  CHECK(closure_loops(PlanarMatching::identity(2)) == 2);
  CHECK(closure_loops(PlanarMatching::cap(2, 1)) == 1);
  CHECK(closure_loops(PlanarMatching::identity(0)) == 0);
}

TEST_CASE("tl_multiply relations") {
  const TLElement e1 = TLElement::generator(2, 1);
  CHECK(e1 * e1 == RationalFunction(loop) * e1);
  const TLElement id3 = TLElement::identity(3);
  const TLElement g1 = TLElement::generator(3, 1);
  const TLElement g2 = TLElement::generator(3, 2);
  CHECK(id3 * g1 == g1);
  CHECK(g2 * id3 == g2);
  CHECK(g1 * g2 * g1 == g1);
  CHECK(g2 * g1 * g2 == g2);
  CHECK_THROWS_AS(e1 * g1, std::invalid_argument);
  // e_1 e_3 = e_3 e_1 in TL_4.
  CHECK(TLElement::generator(4, 1) * TLElement::generator(4, 3) == TLElement::generator(4, 3) * TLElement::generator(4, 1));
}

TEST_CASE("tl_multiply is associative on diagram bases") {
  const auto basis = PlanarMatching::all(3);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      for (const auto& z : basis) {
        const TLElement ex(x, 1);
        const TLElement ey(y, 1);
        const TLElement ez(z, 1);
        CHECK((ex * ey) * ez == ex * (ey * ez));
      }
    }
  }
}

TEST_CASE("jones-wenzl low cases") {
  CHECK(jones_wenzl(1) == TLElement::identity(1));
  const TLElement expected = TLElement::identity(2) - RationalFunction(Laurent(1), loop) * TLElement::generator(2, 1);
  CHECK(jones_wenzl(2) == expected);
  CHECK(jones_wenzl(0).terms().size() == 1);
  CHECK_THROWS_AS(jones_wenzl(9), GuardError);
}

TEST_CASE("jones-wenzl idempotent, cap-killing, closure") {
  for (int k = 1; k <= 4; ++k) {
    const TLElement f = jones_wenzl(k);
    CHECK(f * f == f);
    for (int i = 1; i < k; ++i) {
      CHECK((TLElement::generator(k, i) * f).is_zero());
      CHECK((f * TLElement::generator(k, i)).is_zero());
    }
    CHECK(markov_closure(f) == RationalFunction(delta_k(k)));
  }
}

TEST_CASE("perturbed projectors fail the checks") {
  const TLElement f = jones_wenzl(3);
  const TLElement g = f + TLElement::generator(3, 1);
  CHECK_FALSE(g * g == g);
  CHECK_FALSE((TLElement::generator(3, 1) * g).is_zero());
  CHECK_FALSE(markov_closure(g) == RationalFunction(delta_k(3)));
  CHECK_FALSE(encircle(2) * TLElement::identity(2) == RationalFunction(encircling_eigenvalue(2)) * TLElement::identity(2));
}

TEST_CASE("jones-wenzl coefficients specialize consistently") {
  // Evaluating coefficients at a rational A and multiplying diagrams with
  // rational loop weights gives the same product as symbolic squaring.
  const Rational at(5, 3);
  const TLElement f = jones_wenzl(3);
  const TLElement sq = f * f;
  for (const auto& [diagram, coeff] : sq.terms()) CHECK(coeff.evaluate(at) == f.coeff(diagram).evaluate(at));
}

TEST_CASE("markov closure values") {
  CHECK(markov_closure(TLElement::identity(2)) == RationalFunction(loop * loop));
  CHECK(markov_closure(TLElement::generator(2, 1)) == RationalFunction(loop));
}

TEST_CASE("delta_k values") {
  CHECK(delta_k(0) == Laurent(1));
  CHECK(delta_k(1) == -Am(2) - Am(-2));
  CHECK(delta_k(2) == Am(4) + Laurent(1) + Am(-4));
  for (int k = 0; k <= 12; ++k) {
    for (const Rational& a : {Rational(2), Rational(3, 7), Rational(-5, 4)}) CHECK(delta_k(k).evaluate(a) == oracle::delta_ratio(k, a));
  }
}

TEST_CASE("encircling curve") {
  const TLElement zero = encircle(0);
  REQUIRE(zero.terms().size() == 1);
  CHECK(zero.terms().begin()->second == RationalFunction(loop));
  for (int k = 1; k <= 3; ++k) {
    const TLElement f = jones_wenzl(k);
    CHECK(encircle(k) * f == RationalFunction(encircling_eigenvalue(k)) * f);
  }
  CHECK(encircling_eigenvalue(1) == -Am(4) - Am(-4));
  CHECK(encircling_eigenvalue(2) == -Am(6) - Am(-6));
  CHECK_THROWS_AS(encircle(5), GuardError);
}

TEST_CASE("encircling curve is central") {
  const TLElement c = encircle(3);
  for (int i = 1; i < 3; ++i) {
    const TLElement e = TLElement::generator(3, i);
    CHECK(c * e == e * c);
  }
}

TEST_CASE("phi values") {
  for (int m = 0; m <= 3; ++m) {
    for (int t = 0; t <= 3; ++t) CHECK(phi(0, m, t) == pow(loop, static_cast<unsigned>(m + t)));
  }
  CHECK(phi(1, 1, 0) == (-Am(4) - Am(-4)) * loop);
  CHECK(phi(1, 0, 1) == loop * loop);
  CHECK_THROWS_AS(phi(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("f_matrix") {
  const SkeinValueMatrix f = f_matrix(1, 1);
  CHECK(f.entries == ExactMatrix<Laurent>{{loop, loop}, {loop, loop}});
  for (int n = 1; n <= 3; ++n) {
    const GramMatrix g = gram_matrix(n);
    for (int k = 1; k <= 3; ++k) {
      const SkeinValueMatrix fk = f_matrix(g, k);
      CHECK(fk.entries.is_symmetric());
      CHECK(specialized_gram_times_delta(g, k) == fk.entries);
    }
  }
  CHECK_THROWS_AS(f_matrix(5, 1), GuardError);
}

TEST_CASE("nullity_f examples") {
  CHECK(nullity_f(1, 1, 2) == 1);
  const Rational a0(3, 2);
  for (int k = 1; k <= 2; ++k) {
    // Entries rebuilt from pairings with the ratio form of the closure value.
    const GramMatrix g = gram_matrix(2);
    const Rational ev = -(oracle::power(a0, 2 * k) + oracle::power(a0, -2 * k));
    const Rational lp = -(a0 * a0 + 1 / (a0 * a0));
    const Rational dk = oracle::delta_ratio(k - 1, a0);
    const auto m = g.pairs.map([&](const PairingValue& v) { return Rational(oracle::power(ev, v.m) * oracle::power(lp, v.t) * dk); });
    const std::size_t expected = m.cols() - oracle::gauss_rank(m);
    CHECK(nullity_f(2, k, a0) == expected);
    CHECK(expected >= binomial(4, 2 - k).get_ui());
  }
  CHECK_THROWS_AS(nullity_f(2, 1, 1), std::domain_error);
  CHECK_THROWS_AS(nullity_f(2, 1, 0), std::domain_error);
  CHECK_THROWS_AS(nullity_f(2, 3, 2), GuardError);
}

TEST_CASE("valid skein samples avoid roots of the closure value") {
  CHECK_FALSE(valid_skein_sample(1, 0));
  CHECK_FALSE(valid_skein_sample(1, -1));
  CHECK(valid_skein_sample(1, Rational(1, 2)));
  CHECK(valid_skein_sample(2, 2));
}

TEST_CASE("skein nullity meets the bound and matches the gram route") {
  for (int n = 1; n <= 3; ++n) {
    const GramMatrix g = gram_matrix(n);
    for (int k = 1; k <= n; ++k) {
      const SkeinNullitySampling s = sample_nullity_f(g, k, 2, 7 + static_cast<std::uint64_t>(n * 10 + k));
      CHECK(s.pass);
      for (const auto& x : s.samples) {
        CHECK(x.nullity >= s.bound);
        CHECK(specialization_nullity(g, k, delta_at(x.sample)) == x.nullity);
      }
    }
  }
}

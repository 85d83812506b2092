#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tlgram/annular_diagram.hpp"
#include "tlgram/bivariate.hpp"
#include "tlgram/matrix.hpp"
#include "tlgram/numbers.hpp"

namespace tlgram {

/// Gram matrix of the type-B pairing on the basis of size n, in canonical
/// basis order.
struct GramMatrix {
  int n = 0;
  std::vector<AnnularDiagram> basis;
  ExactMatrix<PairingValue> pairs;
  ExactMatrix<Bivariate> entries;
};

/// Pairing values for every ordered pair of basis diagrams. Guard 1 <= n <= 5.
ExactMatrix<PairingValue> pairing_table(const std::vector<AnnularDiagram>& basis);

/// G_n(α, δ) with entries α^m δ^t. Guard 1 <= n <= 5.
GramMatrix gram_matrix(int n);

/// Diagonal of P with p_ii = (-1)^{c(b_i)}.
std::vector<int> sign_matrix(const std::vector<AnnularDiagram>& basis);

/// ∏_{i=1..n} (T_i(δ)^2 - α^2)^{C(2n, n-i)} expanded. Guard 1 <= n <= 3.
Bivariate barad_product(int n);

/// The same product evaluated at (α, δ) over GF(p); any n >= 1.
std::uint64_t barad_product_mod(int n, std::uint64_t alpha, std::uint64_t delta, std::uint64_t p);

/// Total-degree bound 2·n·C(2n, n) used for the Schwartz–Zippel estimate.
std::uint64_t identity_degree_bound(int n);

struct SymbolicReport {
  int n = 0;
  Bivariate determinant;
  Bivariate product;
  bool pass = false;
};

/// det G_n computed by fraction-free elimination, compared structurally
/// with the expanded product. Guard 1 <= n <= 3.
SymbolicReport verify_conjecture_symbolic(int n);

struct ModularTrial {
  int index = 0;
  std::uint64_t alpha = 0;
  std::uint64_t delta = 0;
  std::uint64_t determinant = 0;
  std::uint64_t product = 0;
  bool pass = false;
};

struct ModularReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  std::vector<ModularTrial> results;
  bool pass = false;
  /// trials · identity_degree_bound(n) / prime.
  double failure_bound = 0;
};

/// Evaluates both sides at `trials` uniform points of GF(p), p taken from
/// kLargePrimes by seed. Guard 1 <= n <= 5, trials >= 1.
ModularReport verify_conjecture_modular(int n, int trials, std::uint64_t seed);

/// Entrywise check that G_n(-α, δ) = P G_n(α, δ) P^{-1}. Guard n <= 5.
bool verify_lemma2(int n);
/// The same check on an already built matrix.
bool verify_lemma2(const GramMatrix& gram);

/// (-1)^{k-1} T_k(δ0), the specialization of α at which the k-th factor vanishes.
Rational specialized_alpha(int k, const Rational& delta0, bool flip_sign = false);

/// G evaluated at α = a0, δ = d0 over Q.
ExactMatrix<Rational> evaluate_gram(const GramMatrix& gram, const Rational& alpha0, const Rational& delta0);

/// Nullity of G_n at α = (-1)^{k-1} T_k(δ0), δ = δ0 (or at the opposite
/// sign of α when flip_sign is set). Requires 1 <= k <= n <= 5.
std::size_t specialization_nullity(int n, int k, const Rational& delta0, bool flip_sign = false);
std::size_t specialization_nullity(const GramMatrix& gram, int k, const Rational& delta0, bool flip_sign = false);

/// Uniform rational p/q with 1 <= |p|, q <= 1000, from a seeded stream.
template <class Engine>
Rational sample_rational(Engine& engine) {
  const long num = static_cast<long>(engine() % 2000) - 1000;
  const long den = static_cast<long>(engine() % 1000) + 1;
  Rational q(num == 0 ? 1 : num, den);
  q.canonicalize();
  return q;
}

struct NullitySample {
  Rational sample;
  std::size_t nullity = 0;
};

struct NullitySampling {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::vector<NullitySample> samples;
  std::size_t bound = 0;  // C(2n, n-k)
  bool consistent = false;
  bool pass = false;
};

/// Draws `count` rational δ0 values and computes specialization_nullity at
/// each. If the samples disagree the whole draw is repeated, at most 5 times.
NullitySampling sample_specialization_nullity(const GramMatrix& gram, int k, int count, std::uint64_t seed);

/// Both sides of 2 Σ_{i=1..n} i·C(2n, n-i) = n·C(2n, n).
struct TelescopingLine {
  int n = 0;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
};
TelescopingLine telescoping(int n);

}  // namespace tlgram

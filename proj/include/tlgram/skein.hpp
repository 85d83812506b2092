#pragma once

#include <cstdint>
#include <vector>

#include "tlgram/gram.hpp"
#include "tlgram/laurent.hpp"
#include "tlgram/matrix.hpp"
#include "tlgram/numbers.hpp"

namespace tlgram {

/// Δ_k = (-1)^k (A^{2(k+1)} - A^{-2(k+1)}) / (A^2 - A^{-2})
///     = (-1)^k Σ_{i=0..k} A^{2k-4i}. Δ_0 = 1.
Laurent delta_k(int k);

/// Eigenvalue of the encircling curve on f_k: -A^{2(k+1)} - A^{-2(k+1)}.
Laurent encircling_eigenvalue(int k);

/// φ_k(α^m δ^t) = (-A^{2(k+1)} - A^{-2(k+1)})^m (-A^2 - A^-2)^t Δ_k.
Laurent phi(int k, int m, int t);

/// F_{n,k}, entry (i, j) = φ_{k-1}(⟨b_i, b_j⟩).
struct SkeinValueMatrix {
  int n = 0;
  int k = 0;
  ExactMatrix<Laurent> entries;
};

/// Guard 1 <= n <= 4, k >= 1.
SkeinValueMatrix f_matrix(int n, int k);
SkeinValueMatrix f_matrix(const GramMatrix& gram, int k);

/// Δ_{k-1} · G_n(α = (-1)^{k-1} T_k, δ) with δ = -A^2 - A^-2, entrywise.
ExactMatrix<Laurent> specialized_gram_times_delta(const GramMatrix& gram, int k);

/// Whether F_{n,k} may be evaluated at A = a0: a0 ∉ {0, 1, -1} and
/// Δ_{k-1}(a0) ≠ 0.
bool valid_skein_sample(int k, const Rational& a0);

/// Nullity of F_{n,k} at A = a0 over Q. Requires 1 <= k <= n <= 4; throws
/// std::domain_error for an invalid sample.
std::size_t nullity_f(int n, int k, const Rational& a0);
std::size_t nullity_f(const GramMatrix& gram, int k, const Rational& a0);

/// δ0 = -a0^2 - a0^-2, the matching Gram specialization point.
Rational delta_at(const Rational& a0);

struct SkeinNullitySample {
  Rational sample;
  std::size_t nullity = 0;
};

struct SkeinNullitySampling {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::vector<SkeinNullitySample> samples;
  std::size_t bound = 0;
  bool consistent = false;
  bool pass = false;
};

/// Draws `count` valid rational A values; repeats the draw (at most 5
/// times) when samples disagree.
SkeinNullitySampling sample_nullity_f(const GramMatrix& gram, int k, int count, std::uint64_t seed);

}  // namespace tlgram

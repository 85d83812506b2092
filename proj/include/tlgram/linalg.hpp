#pragma once

#include <cstdint>
#include <stdexcept>

#include "tlgram/bivariate.hpp"
#include "tlgram/matrix.hpp"
#include "tlgram/numbers.hpp"

namespace tlgram {

namespace detail {

inline BigInt cross_divexact(const BigInt& x, const BigInt& y, const BigInt& z, const BigInt& w,
                             const BigInt& den) {
  BigInt t = x * y;
  mpz_submul(t.get_mpz_t(), z.get_mpz_t(), w.get_mpz_t());
  return divexact(t, den);
}

using tlgram::cross_divexact;

}  // namespace detail

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Every division is exact, so T only needs an integral-domain `divexact`.
/// Throws std::invalid_argument for non-square input.
template <class T>
T det_fraction_free(ExactMatrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m(r, k))) ++r;
      if (r == n) return T(0);
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = detail::cross_divexact(m(i, j), m(k, k), m(i, k), m(k, j), prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

/// Rank over the integers (= over Q) by fraction-free row echelon reduction.
std::size_t rank_fraction_free(ExactMatrix<BigInt> m);

/// Rank over Q by exact elimination; each row is first scaled by the lcm of
/// its denominators.
std::size_t rank_exact(const ExactMatrix<Rational>& m);

inline std::size_t nullity_exact(const ExactMatrix<Rational>& m) { return m.cols() - rank_exact(m); }

/// Determinant over GF(p). Entries are reduced mod p first. Throws
/// std::invalid_argument for non-square input or when p is not a prime
/// below 2^63.
std::uint64_t det_modular(ExactMatrix<std::uint64_t> m, std::uint64_t p);

/// Rank over GF(p), same preconditions on p.
std::size_t rank_modular(ExactMatrix<std::uint64_t> m, std::uint64_t p);

}  // namespace tlgram

#include "tlgram/linalg.hpp"

#include <string>

#include "tlgram/modular.hpp"

namespace tlgram {
namespace {

void require_field_prime(std::uint64_t p) {
  if (p >= (1ULL << 63) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^63");
  }
}

// Gaussian elimination over GF(p); returns (rank, determinant when square).
std::pair<std::size_t, std::uint64_t> eliminate_mod(ExactMatrix<std::uint64_t>& m, std::uint64_t p) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) %= p;
  }
  std::size_t rank = 0;
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      m.swap_rows(pivot, rank);
      det = sub_mod(0, det, p);
    }
    det = mul_mod(det, m(rank, c), p);
    const std::uint64_t inv = inv_mod(m(rank, c), p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t factor = mul_mod(m(i, c), inv, p);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(i, j) = sub_mod(m(i, j), mul_mod(factor, m(rank, j), p), p);
      }
    }
    ++rank;
  }
  if (rank < m.rows()) det = 0;
  return {rank, det};
}

}  // namespace

std::size_t rank_fraction_free(ExactMatrix<BigInt> m) {
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = detail::cross_divexact(m(i, j), m(rank, c), m(i, c), m(rank, j), prev);
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const ExactMatrix<Rational>& m) {
  ExactMatrix<BigInt> scaled(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      scaled(r, c) = m(r, c).get_num() * divexact(lcm, m(r, c).get_den());
    }
  }
  return rank_fraction_free(std::move(scaled));
}

std::uint64_t det_modular(ExactMatrix<std::uint64_t> m, std::uint64_t p) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  require_field_prime(p);
  if (m.rows() == 0) return 1;
  return eliminate_mod(m, p).second;
}

std::size_t rank_modular(ExactMatrix<std::uint64_t> m, std::uint64_t p) {
  require_field_prime(p);
  return eliminate_mod(m, p).first;
}

}  // namespace tlgram

#pragma once

#include <array>
#include <cstdint>

#include "tlgram/numbers.hpp"

namespace tlgram {

/// The eight smallest primes above 2^50. Modular identity tests draw their
/// primes from this list so every run can be reproduced from (seed, index).
inline constexpr std::array<std::uint64_t, 8> kLargePrimes = {
    1125899906842679ULL, 1125899906842723ULL, 1125899906842769ULL, 1125899906842783ULL,
    1125899906842817ULL, 1125899906842829ULL, 1125899906842847ULL, 1125899906842889ULL,
};

inline std::uint64_t add_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  const std::uint64_t s = x + y;
  return (s >= p || s < x) ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return x >= y ? x - y : x + (p - y);
}

inline std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);
/// Inverse of a nonzero residue modulo a prime.
std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p);
/// Least non-negative residue of an arbitrary integer.
std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p);
/// Residue of a rational whose denominator is a unit mod p.
std::uint64_t reduce_mod(const Rational& x, std::uint64_t p);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Uniform residue in [0, p) from a 64-bit generator by rejection, so the
/// draw sequence is fixed by the seed on every platform.
template <class Engine>
std::uint64_t uniform_residue(Engine& engine, std::uint64_t p) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % p);
  std::uint64_t r = 0;
  do {
    r = engine();
  } while (r >= limit);
  return r % p;
}

}  // namespace tlgram

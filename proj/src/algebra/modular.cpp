#include "tlgram/modular.hpp"

#include <stdexcept>

namespace tlgram {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) {
  if (x % p == 0) throw std::domain_error("zero has no modular inverse");
  return pow_mod(x, p - 2, p);
}

std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p) {
  BigInt r;
  BigInt modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::uint64_t reduce_mod(const Rational& x, std::uint64_t p) {
  return mul_mod(reduce_mod(x.get_num(), p), inv_mod(reduce_mod(x.get_den(), p), p), p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace tlgram

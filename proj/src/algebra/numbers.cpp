#include "tlgram/numbers.hpp"

#include "tlgram/errors.hpp"

namespace tlgram {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace tlgram

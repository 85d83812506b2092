#pragma once

// Dense univariate integer polynomials, coefficients low degree first, with no
// trailing zeros. Only used to canonicalize rational functions.

#include <vector>

#include "tlgram/numbers.hpp"

namespace tlgram::detail {

using UPoly = std::vector<BigInt>;

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
BigInt content(const UPoly& p);
UPoly primitive_part(const UPoly& p);
/// Pseudo-remainder of a by b (b nonzero).
UPoly pseudo_remainder(UPoly a, const UPoly& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
UPoly primitive_gcd(const UPoly& a, const UPoly& b);
/// Exact quotient in Z[x]; throws std::domain_error when inexact.
UPoly divexact(const UPoly& num, const UPoly& den);

}  // namespace tlgram::detail

#pragma once

#include "tlgram/bivariate.hpp"
#include "tlgram/laurent.hpp"

namespace tlgram {

/// T_i(δ) with T_0 = 2, T_1 = δ, T_i = δ T_{i-1} - T_{i-2}.
Bivariate chebyshev(unsigned i);

/// T_k at δ = -A^2 - A^-2, in closed form (-1)^k (A^{2k} + A^{-2k}).
Laurent chebyshev_in_A(unsigned k);

/// Ring homomorphism Z[α, δ] → Z[A, A^-1] sending δ ↦ -A^2 - A^-2 and
/// α ↦ alpha_image.
Laurent substitute_delta(const Bivariate& p, const Laurent& alpha_image);

}  // namespace tlgram

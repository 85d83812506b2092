#include "tlgram/chebyshev.hpp"

#include <vector>

namespace tlgram {

Bivariate chebyshev(unsigned i) {
  Bivariate prev(2);
  if (i == 0) return prev;
  Bivariate cur = Bivariate::delta();
  for (unsigned step = 1; step < i; ++step) {
    Bivariate next = Bivariate::delta() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Laurent chebyshev_in_A(unsigned k) {
  const int e = 2 * static_cast<int>(k);
  Laurent t = Laurent::monomial(1, e) + Laurent::monomial(1, -e);
  return k % 2 == 0 ? t : -t;
}

Laurent substitute_delta(const Bivariate& p, const Laurent& alpha_image) {
  std::vector<Laurent> alpha_pows{Laurent(1)};
  std::vector<Laurent> delta_pows{Laurent(1)};
  for (unsigned a = 0; a < p.degree_alpha(); ++a) alpha_pows.push_back(alpha_pows.back() * alpha_image);
  for (unsigned d = 0; d < p.degree_delta(); ++d) delta_pows.push_back(delta_pows.back() * Laurent::loop_value());
  Laurent out;
  for (const auto& t : p.terms()) out += Laurent(t.coeff) * alpha_pows[t.alpha] * delta_pows[t.delta];
  return out;
}

}  // namespace tlgram

#include "tlgram/temperley_lieb.hpp"

#include <stdexcept>

#include "strand_graph.hpp"
#include "tlgram/guards.hpp"
#include "tlgram/skein.hpp"

namespace tlgram {

TLElement::TLElement(PlanarMatching d, RationalFunction coeff) : k_(d.strands()) {
  if (!coeff.is_zero()) terms_.emplace(std::move(d), std::move(coeff));
}

TLElement TLElement::identity(int k) { return TLElement(PlanarMatching::identity(k), 1); }

TLElement TLElement::generator(int k, int i) { return TLElement(PlanarMatching::cap(k, i), 1); }

RationalFunction TLElement::coeff(const PlanarMatching& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void TLElement::add(const PlanarMatching& d, const RationalFunction& c) {
  if (d.strands() != k_) throw std::invalid_argument("diagram has the wrong number of strands");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement TLElement::extended(int extra) const {
  TLElement out(k_ + extra);
  for (const auto& [d, c] : terms_) out.terms_.emplace(d.extended(extra), c);
  return out;
}

TLElement& TLElement::operator+=(const TLElement& rhs) {
  if (rhs.k_ != k_) throw std::invalid_argument("adding elements with different strand counts");
  for (const auto& [d, c] : rhs.terms_) add(d, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& rhs) {
  if (rhs.k_ != k_) throw std::invalid_argument("subtracting elements with different strand counts");
  for (const auto& [d, c] : rhs.terms_) add(d, -c);
  return *this;
}

TLElement operator*(const RationalFunction& s, const TLElement& x) {
  TLElement out(x.k_);
  if (s.is_zero()) return out;
  for (const auto& [d, c] : x.terms_) out.terms_.emplace(d, s * c);
  return out;
}

TLElement tl_multiply(const TLElement& x, const TLElement& y) {
  if (x.strands() != y.strands()) throw std::invalid_argument("multiplying elements with different strand counts");
  // Products are summed per (diagram, denominator) before canonicalizing,
  // which keeps gcd work proportional to the number of distinct
  // denominators rather than the number of diagram pairs.
  std::map<PlanarMatching, std::map<Laurent, Laurent>> partial;
  std::vector<Laurent> loop_pows{Laurent(1)};
  for (const auto& [dx, cx] : x.terms()) {
    for (const auto& [dy, cy] : y.terms()) {
      auto [d, loops] = compose(dx, dy);
      while (static_cast<int>(loop_pows.size()) <= loops) loop_pows.push_back(loop_pows.back() * Laurent::loop_value());
      Laurent num = cx.numerator() * cy.numerator() * loop_pows[static_cast<std::size_t>(loops)];
      Laurent den = cx.denominator() * cy.denominator();
      partial[d][den] += num;
    }
  }
  TLElement out(x.strands());
  for (const auto& [d, groups] : partial) {
    RationalFunction sum;
    for (const auto& [den, num] : groups) {
      if (!num.is_zero()) sum += RationalFunction(num, den);
    }
    out.add(d, sum);
  }
  return out;
}

TLElement jones_wenzl(int k) {
  require_range("k", k, 0, 8);
  TLElement f = TLElement::identity(k == 0 ? 0 : 1);
  if (k == 0) return f;
  for (int level = 2; level <= k; ++level) {
    const TLElement prev = f.extended(1);
    const RationalFunction ratio(delta_k(level - 2), delta_k(level - 1));
    f = prev - ratio * (prev * TLElement::generator(level, level - 1) * prev);
  }
  return f;
}

RationalFunction markov_closure(const TLElement& x) {
  RationalFunction sum;
  for (const auto& [d, c] : x.terms()) {
    sum += c * RationalFunction(pow(Laurent::loop_value(), static_cast<unsigned>(closure_loops(d))));
  }
  return sum;
}

TLElement encircle(int k) {
  require_range("k", k, 0, 4);
  if (k == 0) return TLElement(PlanarMatching::identity(0), RationalFunction(Laurent::loop_value()));
  // Strand s runs from bottom point s up through crossing D_s (curve passes
  // under it) and crossing U_s (curve passes over it) to the top. The curve
  // runs left to right through U_0..U_{k-1}, turns, and returns right to
  // left through D_{k-1}..D_0.
  enum Arm { north = 0, east = 1, south = 2, west = 3 };
  const int ends = 2 * k;
  auto upper = [&](int s, Arm a) { return ends + 4 * s + a; };
  auto lower = [&](int s, Arm a) { return ends + 4 * (k + s) + a; };
  const int crossings = 2 * k;

  std::map<PlanarMatching, Laurent> acc;
  for (unsigned state = 0; state < (1U << crossings); ++state) {
    detail::StrandGraph g(ends + 4 * crossings);
    for (int s = 0; s < k; ++s) {
      g.connect(s, lower(s, south));
      g.connect(lower(s, north), upper(s, south));
      g.connect(upper(s, north), 2 * k - 1 - s);
      if (s + 1 < k) {
        g.connect(upper(s, east), upper(s + 1, west));
        g.connect(lower(s, east), lower(s + 1, west));
      }
    }
    g.connect(upper(k - 1, east), lower(k - 1, east));
    g.connect(upper(0, west), lower(0, west));

    int a_count = 0;
    for (int c = 0; c < crossings; ++c) {
      const bool a_smoothing = ((state >> static_cast<unsigned>(c)) & 1U) != 0;
      a_count += a_smoothing ? 1 : 0;
      const bool over_is_horizontal = c < k;
      const int s = c % k;
      auto arm = [&](Arm a) { return over_is_horizontal ? upper(s, a) : lower(s, a); };
      // The A-smoothing joins the two regions swept by turning the
      // over-strand counter-clockwise.
      const bool join_north_west = a_smoothing == over_is_horizontal;
      if (join_north_west) {
        g.connect(arm(north), arm(west));
        g.connect(arm(south), arm(east));
      } else {
        g.connect(arm(north), arm(east));
        g.connect(arm(south), arm(west));
      }
    }
    int loops = 0;
    PlanarMatching d(g.resolve(ends, loops));
    acc[d] += Laurent::monomial(1, 2 * a_count - crossings) * pow(Laurent::loop_value(), static_cast<unsigned>(loops));
  }
  TLElement out(k);
  for (const auto& [d, c] : acc) out.add(d, RationalFunction(c));
  return out;
}

}  // namespace tlgram

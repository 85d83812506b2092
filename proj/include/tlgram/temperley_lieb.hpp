#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tlgram/laurent.hpp"
#include "tlgram/rational_function.hpp"

namespace tlgram {

/// Temperley–Lieb diagram on k strands: a non-crossing perfect matching of
/// the 2k boundary points of a rectangle. Points are numbered in circular
/// order, 0-based: bottom edge 0..k-1 left to right, then top edge k..2k-1
/// right to left, so the top point in column c is 2k-1-c.
class PlanarMatching {
 public:
  /// Throws std::invalid_argument unless `partner` is a non-crossing
  /// perfect matching of 2k points.
  explicit PlanarMatching(std::vector<int> partner);

  static PlanarMatching identity(int k);
  /// e_i for 1 <= i < k: caps joining columns i-1 and i on both edges.
  static PlanarMatching cap(int k, int i);
  /// Every diagram on k strands (Catalan(k) of them).
  static std::vector<PlanarMatching> all(int k);

  int strands() const { return static_cast<int>(partner_.size()) / 2; }
  const std::vector<int>& partner() const { return partner_; }
  int bottom(int column) const { return column; }
  int top(int column) const { return 2 * strands() - 1 - column; }

  /// Adds `extra` vertical strands on the right.
  PlanarMatching extended(int extra) const;

  /// Balanced-parenthesis word in circular order: '(' opens a chord.
  std::string to_string() const;

  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;
  friend bool operator<(const PlanarMatching& x, const PlanarMatching& y) { return x.partner_ < y.partner_; }

 private:
  std::vector<int> partner_;
};

/// Stacks `upper` on top of `lower`: the top edge of `lower` is glued to
/// the bottom edge of `upper`. Returns the diagram and the number of closed
/// loops formed.
std::pair<PlanarMatching, int> compose(const PlanarMatching& upper, const PlanarMatching& lower);

/// Number of loops in the closure joining top column c to bottom column c.
int closure_loops(const PlanarMatching& d);

/// Formal linear combination of diagrams on k strands with coefficients in
/// Q(A). Zero coefficients are never stored.
class TLElement {
 public:
  explicit TLElement(int k) : k_(k) {}
  TLElement(PlanarMatching d, RationalFunction coeff);

  static TLElement identity(int k);
  /// The generator e_i, 1 <= i < k.
  static TLElement generator(int k, int i);

  int strands() const { return k_; }
  const std::map<PlanarMatching, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coeff(const PlanarMatching& d) const;

  void add(const PlanarMatching& d, const RationalFunction& c);
  TLElement extended(int extra) const;

  TLElement& operator+=(const TLElement& rhs);
  TLElement& operator-=(const TLElement& rhs);
  friend TLElement operator+(TLElement x, const TLElement& y) { return x += y; }
  friend TLElement operator-(TLElement x, const TLElement& y) { return x -= y; }
  friend TLElement operator*(const RationalFunction& s, const TLElement& x);
  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  int k_;
  std::map<PlanarMatching, RationalFunction> terms_;
};

/// Bilinear stacking product x·y (x on top); each closed loop contributes
/// δ = -A^2 - A^-2. Throws std::invalid_argument on strand mismatch.
TLElement tl_multiply(const TLElement& x, const TLElement& y);
inline TLElement operator*(const TLElement& x, const TLElement& y) { return tl_multiply(x, y); }

/// Jones–Wenzl idempotent f_k by the Wenzl recurrence
/// f_k = f_{k-1} - (Δ_{k-2}/Δ_{k-1}) f_{k-1} e_{k-1} f_{k-1}. Guard 0 <= k <= 8.
TLElement jones_wenzl(int k);

/// Σ coeff · δ^{loops of the closure}.
RationalFunction markov_closure(const TLElement& x);

/// A closed curve passing over all k strands above and under them below,
/// resolved by the Kauffman relation at its 2k crossings. Guard 0 <= k <= 4.
TLElement encircle(int k);

}  // namespace tlgram

#include <algorithm>
#include <stdexcept>

#include "tlgram/combinatorics.hpp"

namespace tlgram {

AnnularDiagram subset_to_diagram(int n, const std::set<int>& marks, int j) {
  if (n < 1 || j < 1 || j > n) throw std::invalid_argument("bijection needs 1 <= j <= n");
  if (static_cast<int>(marks.size()) != n - j) throw std::invalid_argument("bijection needs exactly n - j marks");
  for (int m : marks) {
    if (m < 1 || m > 2 * n) throw std::invalid_argument("mark outside 1..2n");
  }
  std::vector<int> points(static_cast<std::size_t>(2 * n));
  for (int p = 1; p <= 2 * n; ++p) points[static_cast<std::size_t>(p - 1)] = p;
  std::set<int> pending = marks;
  std::vector<Chord> chords;

  // A chord from p to its successor among the surviving points; it cuts S
  // exactly when it wraps from the last surviving point to the first.
  auto draw = [&](int from, int to) {
    chords.push_back(from < to ? Chord{from, to, 0} : Chord{to, from, 1});
    std::erase(points, from);
    std::erase(points, to);
  };

  while (!pending.empty()) {
    // Every chosen mark whose successor is unchosen is drawn in the same
    // pass; such chords never share endpoints.
    std::vector<std::pair<int, int>> pass;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      const int p = points[idx];
      const int q = points[(idx + 1) % points.size()];
      if (pending.contains(p) && !pending.contains(q)) pass.emplace_back(p, q);
    }
    for (const auto& [p, q] : pass) {
      draw(p, q);
      pending.erase(p);
    }
  }
  while (!points.empty()) draw(points.back(), points.front());
  return AnnularDiagram(n, std::move(chords));
}

std::set<int> diagram_to_subset(const AnnularDiagram& d, int j) {
  const int n = d.size();
  if (j < 1 || j > n) throw std::invalid_argument("bijection needs 1 <= j <= n");
  if (d.cut_crossings() < j) throw std::invalid_argument("diagram cuts S fewer than j times");
  std::set<int> marks;
  std::vector<Chord> cutting;
  // Counter-clockwise orientation starts a chord at the left end of its lift.
  for (const auto& c : d.chords()) {
    if (c.w == 0) {
      marks.insert(c.i);
    } else {
      cutting.push_back(c);
    }
  }
  // Cut chords are pairwise nested; the shortest lifts hug the marked circle.
  std::sort(cutting.begin(), cutting.end(), [n](const Chord& x, const Chord& y) {
    const Lift lx = lift(x, n);
    const Lift ly = lift(y, n);
    return lx.right - lx.left < ly.right - ly.left;
  });
  const std::size_t extra = static_cast<std::size_t>(n - j) - marks.size();
  for (std::size_t s = 0; s < extra; ++s) marks.insert(lift(cutting[s], n).left);
  return marks;
}

}  // namespace tlgram

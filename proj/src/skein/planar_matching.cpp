#include <stdexcept>

#include "strand_graph.hpp"
#include "tlgram/combinatorics.hpp"
#include "tlgram/temperley_lieb.hpp"

namespace tlgram {

PlanarMatching::PlanarMatching(std::vector<int> partner) : partner_(std::move(partner)) {
  const int size = static_cast<int>(partner_.size());
  if (size % 2 != 0) throw std::invalid_argument("planar matching needs an even number of points");
  for (int p = 0; p < size; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= size || q == p || partner_[static_cast<std::size_t>(q)] != p) {
      throw std::invalid_argument("not a perfect matching");
    }
    if (q < p) continue;
    for (int r = p + 1; r < q; ++r) {
      const int s = partner_[static_cast<std::size_t>(r)];
      if (s < p || s > q) throw std::invalid_argument("matching is not planar");
    }
  }
}

PlanarMatching PlanarMatching::identity(int k) {
  std::vector<int> partner(static_cast<std::size_t>(2 * k));
  for (int c = 0; c < k; ++c) {
    partner[static_cast<std::size_t>(c)] = 2 * k - 1 - c;
    partner[static_cast<std::size_t>(2 * k - 1 - c)] = c;
  }
  return PlanarMatching(std::move(partner));
}

PlanarMatching PlanarMatching::cap(int k, int i) {
  if (i < 1 || i >= k) throw std::invalid_argument("generator index must satisfy 1 <= i < k");
  std::vector<int> partner = identity(k).partner_;
  const int lo = i - 1;
  const int hi = i;
  const int top_lo = 2 * k - 1 - lo;
  const int top_hi = 2 * k - 1 - hi;
  partner[static_cast<std::size_t>(lo)] = hi;
  partner[static_cast<std::size_t>(hi)] = lo;
  partner[static_cast<std::size_t>(top_lo)] = top_hi;
  partner[static_cast<std::size_t>(top_hi)] = top_lo;
  return PlanarMatching(std::move(partner));
}

std::vector<PlanarMatching> PlanarMatching::all(int k) {
  std::vector<PlanarMatching> out;
  for (auto& partner : noncrossing_matchings(2 * k)) out.emplace_back(std::move(partner));
  return out;
}

PlanarMatching PlanarMatching::extended(int extra) const {
  const int k = strands();
  const int nk = k + extra;
  auto remap = [&](int p) { return p < k ? p : 2 * nk - 1 - (2 * k - 1 - p); };
  std::vector<int> partner(static_cast<std::size_t>(2 * nk));
  for (int p = 0; p < 2 * k; ++p) partner[static_cast<std::size_t>(remap(p))] = remap(partner_[static_cast<std::size_t>(p)]);
  for (int c = k; c < nk; ++c) {
    partner[static_cast<std::size_t>(c)] = 2 * nk - 1 - c;
    partner[static_cast<std::size_t>(2 * nk - 1 - c)] = c;
  }
  return PlanarMatching(std::move(partner));
}

std::string PlanarMatching::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < partner_.size(); ++p) out += partner_[p] > static_cast<int>(p) ? '(' : ')';
  return out;
}

std::pair<PlanarMatching, int> compose(const PlanarMatching& upper, const PlanarMatching& lower) {
  const int k = upper.strands();
  if (lower.strands() != k) throw std::invalid_argument("composing diagrams with different strand counts");
  // Nodes: result boundary 0..2k-1 (same circular numbering), then the k
  // glued middle points.
  detail::StrandGraph graph(3 * k);
  auto middle = [&](int column) { return 2 * k + column; };
  // Points of `lower`: its bottom stays, its top column c is middle c.
  auto lower_node = [&](int p) { return p < k ? p : middle(2 * k - 1 - p); };
  // Points of `upper`: its bottom column c is middle c, its top stays.
  auto upper_node = [&](int p) { return p < k ? middle(p) : p; };
  for (int p = 0; p < 2 * k; ++p) {
    const int q = lower.partner()[static_cast<std::size_t>(p)];
    if (p < q) graph.connect(lower_node(p), lower_node(q));
    const int r = upper.partner()[static_cast<std::size_t>(p)];
    if (p < r) graph.connect(upper_node(p), upper_node(r));
  }
  int loops = 0;
  std::vector<int> partner = graph.resolve(2 * k, loops);
  return {PlanarMatching(std::move(partner)), loops};
}

int closure_loops(const PlanarMatching& d) {
  const int k = d.strands();
  detail::StrandGraph graph(2 * k);
  for (int p = 0; p < 2 * k; ++p) {
    const int q = d.partner()[static_cast<std::size_t>(p)];
    if (p < q) graph.connect(p, q);
  }
  for (int c = 0; c < k; ++c) graph.connect(d.bottom(c), d.top(c));
  int loops = 0;
  graph.resolve(0, loops);
  return loops;
}

}  // namespace tlgram

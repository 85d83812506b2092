#pragma once

// Graph of degree <= 2 whose components are arcs and closed loops. Used to
// resolve stacked or smoothed diagrams into a matching plus a loop count.

#include <array>
#include <stdexcept>
#include <vector>

namespace tlgram::detail {

class StrandGraph {
 public:
  explicit StrandGraph(int nodes) : adj_(static_cast<std::size_t>(nodes), {-1, -1}) {}

  void connect(int u, int v) {
    attach(u, v);
    attach(v, u);
  }

  /// For endpoints 0..ends-1 (nodes of degree 1), the endpoint at the other
  /// end of its arc; also counts the closed loops among the remaining nodes.
  std::vector<int> resolve(int ends, int& loops) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> partner(static_cast<std::size_t>(ends), -1);
    for (int s = 0; s < ends; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      int prev = -1;
      int cur = s;
      while (true) {
        seen[static_cast<std::size_t>(cur)] = true;
        const auto& nb = adj_[static_cast<std::size_t>(cur)];
        const int next = nb[0] != prev ? nb[0] : nb[1];
        if (next < 0 || (cur != s && cur < ends)) break;
        prev = cur;
        cur = next;
      }
      partner[static_cast<std::size_t>(s)] = cur;
      partner[static_cast<std::size_t>(cur)] = s;
    }
    loops = 0;
    for (std::size_t v = static_cast<std::size_t>(ends); v < adj_.size(); ++v) {
      if (seen[v]) continue;
      ++loops;
      int prev = -1;
      int cur = static_cast<int>(v);
      while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = true;
        const auto& nb = adj_[static_cast<std::size_t>(cur)];
        const int next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
      }
    }
    return partner;
  }

 private:
  void attach(int u, int v) {
    auto& nb = adj_[static_cast<std::size_t>(u)];
    if (nb[0] < 0) {
      nb[0] = v;
    } else if (nb[1] < 0) {
      nb[1] = v;
    } else {
      throw std::logic_error("strand graph node of degree > 2");
    }
  }

  std::vector<std::array<int, 2>> adj_;
};

}  // namespace tlgram::detail

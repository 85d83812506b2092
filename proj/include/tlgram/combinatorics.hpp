#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tlgram/annular_diagram.hpp"
#include "tlgram/numbers.hpp"

namespace tlgram {

/// All non-crossing perfect matchings of `points` positions on a circle,
/// as partner arrays (0-based), in a fixed order: position 0 takes its
/// partner in increasing order, then the inside, then the outside recurses.
std::vector<std::vector<int>> noncrossing_matchings(int points);

/// Disk D_n^k with 2(n+k) boundary points labelled counter-clockwise
/// a_1..a_2n, l_1..l_k, u_k..u_1. Positions are 0-based in that order.
class DiskDiagram {
 public:
  enum class Kind { a, l, u };
  struct Label {
    Kind kind;
    int index;  // 1-based
  };

  /// Throws std::invalid_argument unless `partner` is a non-crossing perfect
  /// matching of the 2(n+k) positions.
  DiskDiagram(int n, int k, std::vector<int> partner);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& partner() const { return partner_; }
  Label label(int position) const;
  /// True when the diagram has no chord joining two u's or two l's.
  bool is_tilde() const;
  /// Chords as label pairs, e.g. `a1-u1 a2-l1`.
  std::string to_string() const;

 private:
  int n_;
  int k_;
  std::vector<int> partner_;
};

std::string to_string(const DiskDiagram::Label& label);

/// NC(D_n^k). Guard n + k <= 8, n, k >= 0.
std::vector<DiskDiagram> enumerate_disk(int n, int k);

/// |NC~(D_n^k)|: enumeration and filtering for n + k <= 8, the interval
/// count beyond that. Guard n + k <= 16.
std::uint64_t count_tilde(int n, int k);
/// |NC~(D_n^k)| by interval dynamic programming over the circular order,
/// without materializing diagrams.
std::uint64_t count_tilde_dp(int n, int k);
/// C(2n, n) - C(2n, n-k-1).
BigInt count_tilde_formula(int n, int k);

/// |{d in b_n : c(d) <= k}|. Guard 1 <= n <= 6.
std::uint64_t count_atmost(int n, int k);
/// |{d in b_n : c(d) >= j}|. Guard 1 <= n <= 6.
std::uint64_t count_atleast(int n, int j);

/// Builds the diagram attached to n-j chosen marks (1-based point indices).
/// Requires |marks| = n - j and 1 <= j <= n; throws std::invalid_argument.
AnnularDiagram subset_to_diagram(int n, const std::set<int>& marks, int j);

/// Inverse construction on NC_{>= j}: the beginning points of every chord
/// disjoint from S plus those of the cut chords nearest the marked circle.
/// Throws std::invalid_argument when c(d) < j or j is out of range.
std::set<int> diagram_to_subset(const AnnularDiagram& d, int j);

}  // namespace tlgram

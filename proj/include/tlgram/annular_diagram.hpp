#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace tlgram {

/// A chord between outer-boundary points i < j (1-based). `w` is 1 when the
/// chord crosses the spanning segment S (which sits between a_2n and a_1) and
/// 0 when it is disjoint from S.
struct Chord {
  int i = 0;
  int j = 0;
  int w = 0;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// Lifted segment of a chord in the universal cover of the annulus:
/// (i, j) for w = 0 and (j, i + 2n) for w = 1.
struct Lift {
  int left = 0;
  int right = 0;
};

Lift lift(const Chord& chord, int n);

/// Checks that `chords` is a perfect matching of {1..2n} with flags in
/// {0, 1}; throws std::invalid_argument otherwise. Returns whether the lifted
/// chord family is pairwise non-interleaving, i.e. the chords can be drawn
/// disjointly in the annulus.
bool is_noncrossing(int n, std::span<const Chord> chords);

/// One of the C(2n, n) basis diagrams: n pairwise non-crossing chords on the
/// 2n marked points of the annulus, each crossing S at most once.
class AnnularDiagram {
 public:
  /// Validates and sorts the chords; throws std::invalid_argument when the
  /// matching is malformed or crossing.
  AnnularDiagram(int n, std::vector<Chord> chords);

  int size() const { return n_; }
  const std::vector<Chord>& chords() const { return chords_; }
  /// The chord containing point `point` (1-based).
  const Chord& chord_at(int point) const { return chords_[static_cast<std::size_t>(chord_index_[static_cast<std::size_t>(point - 1)])]; }
  int partner(int point) const;
  /// Number of chords that cross S.
  int cut_crossings() const;

  /// Text form `n=2;(1,2,w=0),(3,4,w=1)`.
  std::string to_string() const;
  static AnnularDiagram parse(const std::string& text);
  /// JSON array of {"i", "j", "w"} objects.
  nlohmann::ordered_json to_json() const;
  static AnnularDiagram from_json(int n, const nlohmann::json& chords);

  /// Canonical basis order: lexicographic in (partner of 1, flag, partner of
  /// the next smallest unmatched point, flag, ...).
  friend std::strong_ordering operator<=>(const AnnularDiagram& x, const AnnularDiagram& y);
  friend bool operator==(const AnnularDiagram& x, const AnnularDiagram& y) {
    return x.n_ == y.n_ && x.chords_ == y.chords_;
  }

 private:
  int n_;
  std::vector<Chord> chords_;
  std::vector<int> chord_index_;
};

int cut_crossings(const AnnularDiagram& d);

/// All basis diagrams of size n in canonical order. Guard 1 <= n <= 7.
std::vector<AnnularDiagram> enumerate(int n);

/// Circles produced by gluing x to the inversion of y: m winding around the
/// core (α) and t bounding a disk (δ).
struct PairingValue {
  int m = 0;
  int t = 0;

  friend bool operator==(const PairingValue&, const PairingValue&) = default;
};

/// Total winding number of every closed loop traced through x and y, in the
/// order the loops are discovered (starting from the smallest unvisited point).
std::vector<int> loop_windings(const AnnularDiagram& x, const AnnularDiagram& y);

/// ⟨x, y⟩ = α^m δ^t. Throws std::invalid_argument on size mismatch.
PairingValue pair(const AnnularDiagram& x, const AnnularDiagram& y);

}  // namespace tlgram

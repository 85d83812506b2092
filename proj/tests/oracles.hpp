#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library paths they check.

#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tlgram/annular_diagram.hpp"
#include "tlgram/bivariate.hpp"
#include "tlgram/laurent.hpp"
#include "tlgram/matrix.hpp"
#include "tlgram/numbers.hpp"

namespace oracle {

using tlgram::BigInt;
using tlgram::Rational;

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const tlgram::ExactMatrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T total(0);
  for (std::size_t col = 0; col < n; ++col) {
    tlgram::ExactMatrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t c2 = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r - 1, c2++) = m(r, c);
      }
    }
    T term = m(0, col) * cofactor_det(minor);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Textbook Gauss-Jordan elimination over Q.
inline std::size_t gauss_rank(tlgram::ExactMatrix<Rational> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::pair<int, int>> lifted_segments(int n, const std::vector<tlgram::Chord>& chords, int sheets) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : chords) {
    for (int t = -sheets; t <= sheets; ++t) {
      const int shift = 2 * n * t;
      if (c.w == 0) {
        out.emplace_back(c.i + shift, c.j + shift);
      } else {
        out.emplace_back(c.j + shift, c.i + 2 * n + shift);
      }
    }
  }
  return out;
}

// Non-crossing test over many sheets of the universal cover.
inline bool brute_noncrossing(int n, const std::vector<tlgram::Chord>& chords) {
  const auto segments = lifted_segments(n, chords, 4);
  for (const auto& [a, b] : segments) {
    for (const auto& [c, d] : segments) {
      if (a < c && c < b && b < d) return false;
    }
  }
  return true;
}

// Partner of integer point q of the universal cover; point p of sheet s is
// p + 2ns.
inline long cover_partner(const tlgram::AnnularDiagram& d, long q) {
  const long n2 = 2 * d.size();
  const long residue = ((q - 1) % n2 + n2) % n2 + 1;
  const long sheet = (q - residue) / n2;
  const tlgram::Chord& c = d.chord_at(static_cast<int>(residue));
  const long other = residue == c.i ? c.j : c.i;
  if (c.w == 0) return other + n2 * sheet;
  // The cut chord lifts to (j, i + 2n): j on sheet s meets i on sheet s + 1.
  return residue == c.j ? other + n2 * (sheet + 1) : other + n2 * (sheet - 1);
}

struct CoverLoops {
  int trivial = 0;
  int nontrivial = 0;
  std::vector<long> windings;
};

// Traces each glued loop in the cover; the sheet reached on closing is the
// winding number.
inline CoverLoops cover_trace(const tlgram::AnnularDiagram& x, const tlgram::AnnularDiagram& y) {
  const int n2 = 2 * x.size();
  std::set<int> seen;
  CoverLoops out;
  for (int start = 1; start <= n2; ++start) {
    if (seen.contains(start)) continue;
    long q = start;
    while (true) {
      seen.insert(static_cast<int>(((q - 1) % n2 + n2) % n2 + 1));
      q = cover_partner(x, q);
      seen.insert(static_cast<int>(((q - 1) % n2 + n2) % n2 + 1));
      q = cover_partner(y, q);
      if (((q - 1) % n2 + n2) % n2 + 1 == start) break;
    }
    const long winding = (q - start) / n2;
    out.windings.push_back(winding);
    if (winding == 0) {
      ++out.trivial;
    } else {
      ++out.nontrivial;
    }
  }
  return out;
}

// Construction (i) drawing one chord at a time, lowest drawable mark first.
inline tlgram::AnnularDiagram sequential_subset_to_diagram(int n, std::set<int> pending, int j) {
  (void)j;
  std::vector<int> points;
  for (int p = 1; p <= 2 * n; ++p) points.push_back(p);
  std::vector<tlgram::Chord> chords;
  auto draw = [&](int from, int to) {
    chords.push_back(from < to ? tlgram::Chord{from, to, 0} : tlgram::Chord{to, from, 1});
    std::erase(points, from);
    std::erase(points, to);
  };
  while (!pending.empty()) {
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      const int p = points[idx];
      const int q = points[(idx + 1) % points.size()];
      if (pending.contains(p) && !pending.contains(q)) {
        draw(p, q);
        pending.erase(p);
        break;
      }
    }
  }
  while (!points.empty()) draw(points.back(), points.front());
  return tlgram::AnnularDiagram(n, chords);
}

inline tlgram::Bivariate random_bivariate(std::mt19937_64& rng, int terms = 4, unsigned max_exp = 4) {
  tlgram::Bivariate p;
  for (int t = 0; t < terms; ++t) {
    const long c = static_cast<long>(rng() % 21) - 10;
    p += tlgram::Bivariate::monomial(c, static_cast<unsigned>(rng() % (max_exp + 1)),
                                     static_cast<unsigned>(rng() % (max_exp + 1)));
  }
  return p;
}

inline tlgram::Laurent random_laurent(std::mt19937_64& rng, int terms = 4, int max_exp = 5) {
  tlgram::Laurent p;
  for (int t = 0; t < terms; ++t) {
    const long c = static_cast<long>(rng() % 21) - 10;
    const int e = static_cast<int>(rng() % static_cast<unsigned>(2 * max_exp + 1)) - max_exp;
    p += tlgram::Laurent::monomial(c, e);
  }
  return p;
}

inline tlgram::ExactMatrix<BigInt> random_int_matrix(std::mt19937_64& rng, std::size_t n, long range = 50) {
  tlgram::ExactMatrix<BigInt> m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long>(rng() % static_cast<unsigned long>(2 * range + 1)) - range;
  }
  return m;
}

// Δ_k from the ratio form (-1)^k (a^{2(k+1)} - a^{-2(k+1)}) / (a^2 - a^{-2}).
inline Rational delta_ratio(int k, const Rational& a) {
  Rational big = 1;
  for (int e = 0; e < 2 * (k + 1); ++e) big *= a;
  const Rational sq = a * a;
  Rational value = (big - 1 / big) / (sq - 1 / sq);
  return k % 2 == 0 ? value : Rational(-value);
}

inline Rational power(Rational base, int e) {
  Rational out = 1;
  if (e < 0) {
    base = 1 / base;
    e = -e;
  }
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace oracle

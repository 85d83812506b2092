#include <functional>
#include <stdexcept>

#include "tlgram/combinatorics.hpp"
#include "tlgram/guards.hpp"

namespace tlgram {
namespace {

// All matchings of the positions [lo, hi), appended into `partner`.
void match_interval(int lo, int hi, std::vector<int>& partner, const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (int m = lo + 1; m < hi; m += 2) {
    partner[static_cast<std::size_t>(lo)] = m;
    partner[static_cast<std::size_t>(m)] = lo;
    match_interval(lo + 1, m, partner, [&] { match_interval(m + 1, hi, partner, emit); });
  }
}

}  // namespace

std::vector<std::vector<int>> noncrossing_matchings(int points) {
  if (points < 0 || points % 2 != 0) throw std::invalid_argument("matchings need an even number of points");
  std::vector<std::vector<int>> out;
  std::vector<int> partner(static_cast<std::size_t>(points), -1);
  match_interval(0, points, partner, [&] { out.push_back(partner); });
  return out;
}

DiskDiagram::DiskDiagram(int n, int k, std::vector<int> partner) : n_(n), k_(k), partner_(std::move(partner)) {
  const int size = 2 * (n + k);
  if (n < 0 || k < 0 || static_cast<int>(partner_.size()) != size) throw std::invalid_argument("disk diagram size mismatch");
  for (int p = 0; p < size; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= size || q == p || partner_[static_cast<std::size_t>(q)] != p) {
      throw std::invalid_argument("disk diagram is not a perfect matching");
    }
  }
  for (int p = 0; p < size; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < p) continue;
    for (int r = p + 1; r < q; ++r) {
      const int s = partner_[static_cast<std::size_t>(r)];
      if (s < p || s > q) throw std::invalid_argument("disk diagram has crossing chords");
    }
  }
}

DiskDiagram::Label DiskDiagram::label(int position) const {
  if (position < 2 * n_) return {Kind::a, position + 1};
  if (position < 2 * n_ + k_) return {Kind::l, position - 2 * n_ + 1};
  return {Kind::u, 2 * n_ + 2 * k_ - position};
}

bool DiskDiagram::is_tilde() const {
  for (int p = 0; p < static_cast<int>(partner_.size()); ++p) {
    const Kind x = label(p).kind;
    const Kind y = label(partner_[static_cast<std::size_t>(p)]).kind;
    if (x == y && x != Kind::a) return false;
  }
  return true;
}

std::string to_string(const DiskDiagram::Label& label) {
  const char* prefix = label.kind == DiskDiagram::Kind::a ? "a" : (label.kind == DiskDiagram::Kind::l ? "l" : "u");
  return prefix + std::to_string(label.index);
}

std::string DiskDiagram::to_string() const {
  std::string out;
  for (int p = 0; p < static_cast<int>(partner_.size()); ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < p) continue;
    if (!out.empty()) out += ' ';
    out += tlgram::to_string(label(p)) + "-" + tlgram::to_string(label(q));
  }
  return out;
}

std::vector<DiskDiagram> enumerate_disk(int n, int k) {
  require_range("n", n, 0, 8);
  require_range("k", k, 0, 8);
  require_range("n+k", n + k, 0, 8);
  std::vector<DiskDiagram> out;
  for (auto& partner : noncrossing_matchings(2 * (n + k))) out.emplace_back(n, k, std::move(partner));
  return out;
}

std::uint64_t count_tilde_dp(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("disk sizes must be non-negative");
  const int size = 2 * (n + k);
  // Kind of each circular position: 0 for a, 1 for l, 2 for u.
  std::vector<int> kind(static_cast<std::size_t>(size), 0);
  for (int p = 2 * n; p < 2 * n + k; ++p) kind[static_cast<std::size_t>(p)] = 1;
  for (int p = 2 * n + k; p < size; ++p) kind[static_cast<std::size_t>(p)] = 2;
  // ways[i][j]: admissible matchings of the positions i..j-1.
  std::vector<std::vector<std::uint64_t>> ways(static_cast<std::size_t>(size + 1),
                                               std::vector<std::uint64_t>(static_cast<std::size_t>(size + 1), 0));
  for (int i = 0; i <= size; ++i) ways[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int len = 2; len <= size; len += 2) {
    for (int i = 0; i + len <= size; ++i) {
      const int j = i + len;
      std::uint64_t total = 0;
      for (int m = i + 1; m < j; m += 2) {
        const int ki = kind[static_cast<std::size_t>(i)];
        if (ki != 0 && ki == kind[static_cast<std::size_t>(m)]) continue;
        total += ways[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(m)] *
                 ways[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(j)];
      }
      ways[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = total;
    }
  }
  return ways[0][static_cast<std::size_t>(size)];
}

std::uint64_t count_tilde(int n, int k) {
  if (n >= 0 && k >= 0 && n + k <= 8) {
    std::uint64_t count = 0;
    for (const auto& d : enumerate_disk(n, k)) count += d.is_tilde() ? 1 : 0;
    return count;
  }
  require_range("n+k", n + k, 0, 16);
  return count_tilde_dp(n, k);
}

BigInt count_tilde_formula(int n, int k) { return binomial(2 * n, n) - binomial(2 * n, n - k - 1); }

std::uint64_t count_atmost(int n, int k) {
  require_range("n", n, 1, 6);
  std::uint64_t count = 0;
  for (const auto& d : enumerate(n)) count += d.cut_crossings() <= k ? 1 : 0;
  return count;
}

std::uint64_t count_atleast(int n, int j) {
  require_range("n", n, 1, 6);
  std::uint64_t count = 0;
  for (const auto& d : enumerate(n)) count += d.cut_crossings() >= j ? 1 : 0;
  return count;
}

}  // namespace tlgram

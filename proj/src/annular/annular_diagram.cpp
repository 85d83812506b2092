#include "tlgram/annular_diagram.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "tlgram/errors.hpp"
#include "tlgram/guards.hpp"

namespace tlgram {
namespace {

bool interleave(int a, int b, int c, int d) { return a < c && c < b && b < d; }

// Every lifted chord is shorter than 2n, so translates by |t| <= 2 periods
// cover every possible interleaving.
bool lifts_cross(const Chord& x, const Chord& y, int n) {
  const Lift lx = lift(x, n);
  const Lift ly = lift(y, n);
  for (int t = -2; t <= 2; ++t) {
    const int shift = 2 * n * t;
    if (interleave(lx.left, lx.right, ly.left + shift, ly.right + shift)) return true;
    if (interleave(ly.left + shift, ly.right + shift, lx.left, lx.right)) return true;
  }
  return false;
}

void require_matching(int n, std::span<const Chord> chords) {
  if (n < 1) throw std::invalid_argument("diagram size must be positive");
  if (chords.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("a diagram of size " + std::to_string(n) + " needs exactly n chords");
  }
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  for (const auto& c : chords) {
    if (c.i < 1 || c.j > 2 * n || c.i >= c.j) throw std::invalid_argument("chord endpoints must satisfy 1 <= i < j <= 2n");
    if (c.w != 0 && c.w != 1) throw std::invalid_argument("chord flag must be 0 or 1");
    for (int p : {c.i, c.j}) {
      if (seen[static_cast<std::size_t>(p - 1)]) throw std::invalid_argument("point " + std::to_string(p) + " used twice");
      seen[static_cast<std::size_t>(p - 1)] = true;
    }
  }
}

}  // namespace

Lift lift(const Chord& chord, int n) {
  if (chord.w == 0) return {chord.i, chord.j};
  return {chord.j, chord.i + 2 * n};
}

bool is_noncrossing(int n, std::span<const Chord> chords) {
  require_matching(n, chords);
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      if (lifts_cross(chords[a], chords[b], n)) return false;
    }
  }
  return true;
}

AnnularDiagram::AnnularDiagram(int n, std::vector<Chord> chords) : n_(n), chords_(std::move(chords)) {
  if (!is_noncrossing(n_, chords_)) throw std::invalid_argument("chords cross in the annulus");
  std::sort(chords_.begin(), chords_.end());
  chord_index_.assign(static_cast<std::size_t>(2 * n_), 0);
  for (std::size_t k = 0; k < chords_.size(); ++k) {
    chord_index_[static_cast<std::size_t>(chords_[k].i - 1)] = static_cast<int>(k);
    chord_index_[static_cast<std::size_t>(chords_[k].j - 1)] = static_cast<int>(k);
  }
}

int AnnularDiagram::partner(int point) const {
  const Chord& c = chord_at(point);
  return c.i == point ? c.j : c.i;
}

int AnnularDiagram::cut_crossings() const {
  int count = 0;
  for (const auto& c : chords_) count += c.w;
  return count;
}

int cut_crossings(const AnnularDiagram& d) { return d.cut_crossings(); }

std::strong_ordering operator<=>(const AnnularDiagram& x, const AnnularDiagram& y) {
  if (auto c = x.n_ <=> y.n_; c != 0) return c;
  // Chords sorted by i list "next smallest unmatched point" in order, so the
  // canonical key is the sequence (j, w) over sorted chords.
  for (std::size_t k = 0; k < x.chords_.size(); ++k) {
    if (auto c = x.chords_[k].j <=> y.chords_[k].j; c != 0) return c;
    if (auto c = x.chords_[k].w <=> y.chords_[k].w; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string AnnularDiagram::to_string() const {
  std::string out = "n=" + std::to_string(n_) + ";";
  for (std::size_t k = 0; k < chords_.size(); ++k) {
    if (k > 0) out += ",";
    const auto& c = chords_[k];
    out += "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ",w=" + std::to_string(c.w) + ")";
  }
  return out;
}

AnnularDiagram AnnularDiagram::parse(const std::string& text) {
  static const std::regex header(R"(^n=([1-9][0-9]{0,3});(.*)$)");
  static const std::regex chord(R"(\(([1-9][0-9]{0,4}),([1-9][0-9]{0,4}),w=([01])\))");
  std::smatch m;
  if (!std::regex_match(text, m, header)) throw ParseError("bad diagram text: '" + text + "'");
  const int n = std::stoi(m[1]);
  std::vector<Chord> chords;
  const std::string body = m[2];
  for (auto it = std::sregex_iterator(body.begin(), body.end(), chord); it != std::sregex_iterator(); ++it) {
    chords.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3])});
  }
  try {
    AnnularDiagram d(n, std::move(chords));
    if (d.to_string() != text) throw ParseError("diagram text not canonical: '" + text + "'");
    return d;
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid diagram '") + text + "': " + e.what());
  }
}

nlohmann::ordered_json AnnularDiagram::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : chords_) arr.push_back({{"i", c.i}, {"j", c.j}, {"w", c.w}});
  return arr;
}

AnnularDiagram AnnularDiagram::from_json(int n, const nlohmann::json& chords) {
  if (!chords.is_array()) throw ParseError("diagram JSON must be an array");
  std::vector<Chord> out;
  try {
    for (const auto& c : chords) out.push_back({c.at("i").get<int>(), c.at("j").get<int>(), c.at("w").get<int>()});
    return AnnularDiagram(n, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad diagram JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid diagram: ") + e.what());
  }
}

std::vector<AnnularDiagram> enumerate(int n) {
  require_range("n", n, 1, 7);
  std::vector<AnnularDiagram> out;
  std::vector<Chord> chords;
  std::vector<bool> used(static_cast<std::size_t>(2 * n), false);

  auto recurse = [&](auto&& self) -> void {
    int p = 1;
    while (p <= 2 * n && used[static_cast<std::size_t>(p - 1)]) ++p;
    if (p > 2 * n) {
      out.emplace_back(n, chords);
      return;
    }
    used[static_cast<std::size_t>(p - 1)] = true;
    for (int q = p + 1; q <= 2 * n; ++q) {
      if (used[static_cast<std::size_t>(q - 1)]) continue;
      used[static_cast<std::size_t>(q - 1)] = true;
      for (int w = 0; w <= 1; ++w) {
        const Chord c{p, q, w};
        const bool ok = std::none_of(chords.begin(), chords.end(), [&](const Chord& o) { return lifts_cross(c, o, n); });
        if (!ok) continue;
        chords.push_back(c);
        self(self);
        chords.pop_back();
      }
      used[static_cast<std::size_t>(q - 1)] = false;
    }
    used[static_cast<std::size_t>(p - 1)] = false;
  };
  recurse(recurse);
  return out;
}

std::vector<int> loop_windings(const AnnularDiagram& x, const AnnularDiagram& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pairing diagrams of different sizes");
  const int n = x.size();
  // Crossing S from the a_1 side to the a_2n side counts +1: that is a w=1
  // chord traversed from j to i. The inverted diagram keeps angular
  // positions, so y uses the same rule.
  auto step = [](const Chord& c, int from) { return c.w == 0 ? 0 : (from == c.j ? 1 : -1); };
  std::vector<bool> visited(static_cast<std::size_t>(2 * n), false);
  std::vector<int> windings;
  for (int start = 1; start <= 2 * n; ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    int winding = 0;
    int cur = start;
    do {
      visited[static_cast<std::size_t>(cur - 1)] = true;
      winding += step(x.chord_at(cur), cur);
      cur = x.partner(cur);
      visited[static_cast<std::size_t>(cur - 1)] = true;
      winding += step(y.chord_at(cur), cur);
      cur = y.partner(cur);
    } while (cur != start);
    windings.push_back(winding);
  }
  return windings;
}

PairingValue pair(const AnnularDiagram& x, const AnnularDiagram& y) {
  PairingValue v;
  for (int w : loop_windings(x, y)) (w != 0 ? v.m : v.t) += 1;
  return v;
}

}  // namespace tlgram

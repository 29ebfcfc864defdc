#include "capture/lamination.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "capture/errors.hpp"

namespace capture {

Chord::Chord(Angle x, Angle y) {
  if (x == y) throw std::invalid_argument("degenerate chord");
  if (y < x) std::swap(x, y);
  a = x;
  b = y;
}

bool chords_cross(const Chord& c1, const Chord& c2) {
  if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b)
    return false;
  bool in1 = c1.a < c2.a && c2.a < c1.b;
  bool in2 = c1.a < c2.b && c2.b < c1.b;
  return in1 != in2;
}

std::vector<Chord> seed_chords() {
  return {Chord(Angle(3, 7), Angle(4, 7)), Chord(Angle(6, 7), Angle(1, 7)),
          Chord(Angle(5, 7), Angle(2, 7))};
}

namespace {

// Internal fixed-point representation: angle t as tick t*D on a circle of D
// positions, D = 7 * 2^(max_depth+2), so every halving stays integral.
using Tick = std::int64_t;
using TChord = std::pair<Tick, Tick>;  // first < second

TChord make_tchord(Tick x, Tick y) {
  if (x > y) std::swap(x, y);
  return {x, y};
}

bool tcross(const TChord& c1, const TChord& c2) {
  if (c1.first == c2.first || c1.first == c2.second ||
      c1.second == c2.first || c1.second == c2.second)
    return false;
  bool in1 = c1.first < c2.first && c2.first < c1.second;
  bool in2 = c1.first < c2.second && c2.second < c1.second;
  return in1 != in2;
}

struct Builder {
  Tick D;
  std::vector<TChord> all;                     // every distinct chord so far
  std::set<TChord> seen;
  std::map<TChord, std::array<TChord, 2>> memo;

  void remember(const TChord& c) {
    if (seen.insert(c).second) all.push_back(c);
  }

  std::array<TChord, 2> children(const TChord& parent) {
    if (auto it = memo.find(parent); it != memo.end()) return it->second;
    const Tick x0 = parent.first / 2, x1 = x0 + D / 2;
    const Tick y0 = parent.second / 2, y1 = y0 + D / 2;
    const std::array<std::array<TChord, 2>, 2> cand = {{
        {make_tchord(x0, y0), make_tchord(x1, y1)},
        {make_tchord(x0, y1), make_tchord(x1, y0)},
    }};
    auto crossing_free = [&](const std::array<TChord, 2>& p) {
      for (const TChord& c : p)
        for (const TChord& e : all)
          if (tcross(c, e)) return false;
      return true;
    };
    // Every seed chord is invariant under the reflection t -> -t, and the
    // reflection commutes with doubling, so the whole lamination inherits
    // the symmetry: when the crossing test cannot separate the pairings
    // (both are crossing-free from depth 3 on), the reflection-invariant
    // pairing is the one that belongs to the lamination.
    auto symmetric = [&](const std::array<TChord, 2>& p) {
      return p[0].first + p[0].second == D && p[1].first + p[1].second == D;
    };
    const bool ok0 = crossing_free(cand[0]), ok1 = crossing_free(cand[1]);
    int pick;
    if (ok0 != ok1) {
      pick = ok1 ? 1 : 0;
    } else if (!ok0) {
      throw std::logic_error("no crossing-free preimage pairing");
    } else {
      const bool s0 = symmetric(cand[0]), s1 = symmetric(cand[1]);
      if (s0 == s1) throw AmbiguousPairing("both preimage pairings qualify");
      pick = s1 ? 1 : 0;
    }
    std::array<TChord, 2> kids = cand[pick];
    if (kids[1] < kids[0]) std::swap(kids[0], kids[1]);
    memo.emplace(parent, kids);
    remember(kids[0]);
    remember(kids[1]);
    return kids;
  }
};

}  // namespace

std::vector<Leaf> build_lamination(int max_depth) {
  if (max_depth < 0) throw SpecInvalid("lamination depth must be >= 0");
  if (max_depth > 24) throw SpecInvalid("lamination depth too large");

  Builder b;
  b.D = Tick(7) << (max_depth + 2);

  std::vector<Leaf> leaves;
  std::vector<TChord> layer;
  for (const Chord& s : seed_chords()) {
    TChord c = make_tchord(s.a.num.convert_to<Tick>() * (b.D / s.a.den.convert_to<Tick>()),
                           s.b.num.convert_to<Tick>() * (b.D / s.b.den.convert_to<Tick>()));
    b.remember(c);
    layer.push_back(c);
    leaves.push_back(Leaf{Chord(s.a, s.b), 0});
  }
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<TChord> next;
    next.reserve(2 * layer.size());
    for (const TChord& parent : layer) {
      for (const TChord& kid : b.children(parent)) {
        next.push_back(kid);
        leaves.push_back(
            Leaf{Chord(Angle(kid.first, b.D), Angle(kid.second, b.D)), d});
      }
    }
    layer = std::move(next);
  }
  return leaves;
}

}  // namespace capture

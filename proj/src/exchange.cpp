#include "capture/exchange.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "capture/circle.hpp"
#include "capture/errors.hpp"

namespace capture {

namespace {

// Parse-once cache for the word literals used throughout this file.
const Word& K(const std::string& text) {
  static std::map<std::string, Word> cache;
  auto [it, fresh] = cache.try_emplace(text);
  if (fresh && !text.empty()) it->second = parse_word(text);
  return it->second;
}

Word prepend(Letter x, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(x);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word suffix_of(const Word& w, std::size_t m) {
  return Word(w.end() - static_cast<std::ptrdiff_t>(m), w.end());
}

// ---------------------------------------------------------------------------
// attachment angles
// ---------------------------------------------------------------------------

// Where a one-letter leaf hangs off the circle: the endpoint of its region
// closest to the gap the connecting arcs thread through.
Angle base_attachment(Letter last) {
  switch (last) {
    case Letter::L3: return Angle(10, 14);
    case Letter::R3: return Angle(2, 14);
    case Letter::L2: return Angle(9, 14);
    case Letter::R2: return Angle(1, 14);
    default:
      throw NotEligible("attachment angle needs a word ending in L2/L3/R2/R3");
  }
}

bool in_closed_region(const Angle& t, Letter x) {
  for (const Arc& a : region_arcs(x))
    if (t == a.lo || t == a.hi || a.contains(t)) return true;
  return false;
}

// The unique halving preimage of t lying in the closure of region x.
Angle half_into(const Angle& t, Letter x) {
  const Angle h0 = halve_angle(t, false);
  const Angle h1 = halve_angle(t, true);
  const bool b0 = in_closed_region(h0, x);
  const bool b1 = in_closed_region(h1, x);
  if (b0 == b1) throw AmbiguousPairing("attachment halving is not unique");
  return b0 ? h0 : h1;
}

PairSide side_of(const Angle& t) {
  return t < Angle(1, 2) ? PairSide::Top : PairSide::Bot;
}

// ---------------------------------------------------------------------------
// family recognition
// ---------------------------------------------------------------------------

// One side of a parametric family: pre (unit)^(mult*n+shift) suf, n >= 0.
struct SideSpec {
  const char* pre;
  const char* unit;
  const char* suf;
  int mult = 1;
  int shift = 0;
};

struct FamilySpec {
  const char* tag;
  SideSpec one, two;
};

// Exponent of unit between pre and suf, or -1 when w has no such shape.
int unit_exponent(const Word& w, const Word& pre, const Word& unit,
                  const Word& suf) {
  if (w.size() < pre.size() + suf.size()) return -1;
  const std::size_t mid = w.size() - pre.size() - suf.size();
  if (unit.empty()) {
    if (mid != 0) return -1;
  } else if (mid % unit.size() != 0) {
    return -1;
  }
  if (!is_prefix(pre, w) || !is_suffix(suf, w)) return -1;
  const int reps = unit.empty() ? 0 : static_cast<int>(mid / unit.size());
  for (int r = 0; r < reps; ++r) {
    const std::size_t base =
        pre.size() + static_cast<std::size_t>(r) * unit.size();
    for (std::size_t j = 0; j < unit.size(); ++j)
      if (w[base + j] != unit[j]) return -1;
  }
  return reps;
}

// Parameter n >= 0 with exponent mult*n+shift, or -1 on mismatch.
int side_param(const Word& w, const SideSpec& s) {
  const int reps = unit_exponent(w, K(s.pre), K(s.unit), K(s.suf));
  if (reps < 0) return -1;
  const int adjusted = reps - s.shift;
  if (adjusted < 0 || adjusted % s.mult != 0) return -1;
  return adjusted / s.mult;
}

bool matches_family(const ExchangePair& p, const FamilySpec& f) {
  const int n1 = side_param(p.v1, f.one);
  if (n1 >= 0 && n1 == side_param(p.v2, f.two)) return true;
  const int n2 = side_param(p.v2, f.one);
  return n2 >= 0 && n2 == side_param(p.v1, f.two);
}

const std::vector<FamilySpec>& family_specs() {
  static const std::vector<FamilySpec> specs = {
      {"l3-a1", {"L2", "UCL1R2", "R3L3L3"}, {"L3", "L3L2R3", "", 1, 1}},
      {"l3-a2", {"BCL1R2", "UCL1R2", "R3L3L3"}, {"R3L2R3", "L3L2R3", "", 1, 1}},
      {"l3-a3", {"R1R2", "UCL1R2", "R3L3L3"}, {"R2R3", "L3L2R3", "", 1, 1}},
      {"l3-b1", {"L2", "BCL1R2", "R3L2R3"}, {"L3", "L3L2R3", "L3L3L3"}},
      {"l3-b2", {"UCL1R2", "BCL1R2", "R3L2R3"}, {"R3L2R3", "L3L2R3", "L3L3L3"}},
      {"l3-b3", {"R1R2", "BCL1R2", "R3L2R3"}, {"R2R3", "L3L2R3", "L3L3L3"}},
      {"l3-c1", {"L2", "BCL1R2", "R3", 1, 1}, {"L3", "L3L2R3", "L3", 1, 1}},
      {"l3-c2", {"UCL1R2", "BCL1R2", "R3"}, {"R3L2R3", "L3L2R3", "L3"}},
      {"l3-c3", {"R1R2", "BCL1R2", "R3", 1, 1}, {"R2R3", "L3L2R3", "L3", 1, 1}},
      {"l3-c4", {"R2R3L3", "", ""}, {"R1R2R3", "", ""}},
      {"bc-a", {"", "BCL1R2", "", 1, 1}, {"", "L3L2R3", "L3L3L2"}},
      {"bc-b", {"L3", "L3L2R3", "L3L3L2"}, {"L2", "BCL1R2", "", 1, 1}},
      {"bc-c1", {"R2R3", "L3L2R3", "L3L3L2"}, {"R1R2", "BCL1R2", "", 1, 1}},
      {"bc-c2", {"R3L2R3", "L3L2R3", "L3L3L2"}, {"UCL1R2", "BCL1R2", "", 1, 1}},
      {"bc-d0", {"R2R3L2", "", ""}, {"R1R1R2", "", ""}},
      {"bc-d1", {"L3", "L3L2R3", "L2", 1, 1}, {"L2", "BCL1R2", "BCL1R1R2"}},
      {"bc-d2", {"R2R3", "L3L2R3", "L2", 1, 1}, {"R1R2", "BCL1R2", "BCL1R1R2"}},
      {"bc-d3",
       {"R3L2R3", "L3L2R3", "L2", 1, 1},
       {"UCL1R2", "BCL1R2", "BCL1R1R2"}},
      {"bc-e1", {"R3L3L2", "", ""}, {"UCL1R2", "", ""}},
      {"bc-e2", {"R3L2R3L2", "", ""}, {"UCL1R1R2", "", ""}},
  };
  return specs;
}

// Families whose connecting arcs run along the boundary of the main capture
// region; kept apart so downstream consumers can treat them specially.
const std::vector<FamilySpec>& boundary_specs() {
  static const std::vector<FamilySpec> specs = {
      {"boundary-family",
       {"L3", "L2R3", "L3L3L2R3", 2, 1},
       {"L3", "L2R3", "L3L3", 2, 2}},
      {"boundary-family",
       {"L3", "L2R3", "", 2, 2},
       {"L3", "L2R3", "L3L3L3L3", 2, 0}},
      {"boundary-family",
       {"", "BCL1R2", "R3L2R3", 1, 1},
       {"", "L3L2R3", "L3L3L3", 1, 1}},
      {"boundary-family",
       {"", "BCL1R2", "R3", 1, 1},
       {"", "L3L2R3", "L3", 1, 1}},
  };
  return specs;
}

// Two-parameter boundary family:
//   L3 (L2R3)^{2t} L2 BCL1R2 (UCL1R2)^n R3L3^2  <->  L3 (L2R3)^{2t+2} (L3L2R3)^{n+1}
bool matches_boundary_two_param(const Word& w1, const Word& w2) {
  for (int t = 0;; ++t) {
    Word pre1 = concat(K("L3"), repeat(K("L2R3"), 2 * static_cast<std::size_t>(t)));
    pre1 = concat(pre1, K("L2BCL1R2"));
    const Word pre2 =
        concat(K("L3"), repeat(K("L2R3"), 2 * static_cast<std::size_t>(t) + 2));
    if (pre1.size() > w1.size() && pre2.size() > w2.size()) return false;
    const int n1 = unit_exponent(w1, pre1, K("UCL1R2"), K("R3L3L3"));
    const int n2 = unit_exponent(w2, pre2, K("L3L2R3"), K(""));
    if (n1 >= 0 && n2 >= 1 && n1 == n2 - 1) return true;
  }
}

Word instantiate(const SideSpec& s, int n) {
  Word w = concat(K(s.pre), repeat(K(s.unit),
                                   static_cast<std::size_t>(s.mult * n + s.shift)));
  return concat(w, K(s.suf));
}

bool suffix_pair_of(const Word& a, const Word& b, const Word& big_a,
                    const Word& big_b) {
  if (big_a.size() < a.size() || big_b.size() < b.size()) return false;
  return std::equal(a.begin(), a.end(), big_a.end() - static_cast<std::ptrdiff_t>(a.size())) &&
         std::equal(b.begin(), b.end(), big_b.end() - static_cast<std::ptrdiff_t>(b.size()));
}

bool covered_by_instance(const ExchangePair& p, const Word& big_a,
                         const Word& big_b) {
  return suffix_pair_of(p.v1, p.v2, big_a, big_b) ||
         suffix_pair_of(p.v1, p.v2, big_b, big_a);
}

// True when both words of p are simultaneous (positional) suffixes of some
// family instance no longer than `reach`.
bool is_family_suffix(const ExchangePair& p, std::size_t reach) {
  auto scan = [&](const FamilySpec& f) {
    for (int n = 0;; ++n) {
      const Word a = instantiate(f.one, n);
      if (a.size() > reach) return false;
      const Word b = instantiate(f.two, n);
      if (a.size() >= p.v1.size() && covered_by_instance(p, a, b)) return true;
      if (f.one.unit[0] == '\0' && f.two.unit[0] == '\0') return false;
    }
  };
  for (const FamilySpec& f : family_specs())
    if (scan(f)) return true;
  for (const FamilySpec& f : boundary_specs())
    if (scan(f)) return true;
  for (int t = 0; 5 + 4 * static_cast<std::size_t>(t) <= reach; ++t) {
    for (int n = 0;; ++n) {
      Word a = concat(K("L3"), repeat(K("L2R3"), 2 * static_cast<std::size_t>(t)));
      a = concat(a, K("L2BCL1R2"));
      a = concat(a, repeat(K("UCL1R2"), static_cast<std::size_t>(n)));
      a = concat(a, K("R3L3L3"));
      if (a.size() > reach) break;
      Word b = concat(K("L3"), repeat(K("L2R3"), 2 * static_cast<std::size_t>(t) + 2));
      b = concat(b, repeat(K("L3L2R3"), static_cast<std::size_t>(n) + 1));
      if (a.size() >= p.v1.size() && covered_by_instance(p, a, b)) return true;
    }
  }
  return false;
}

std::string classify_pair(const ExchangePair& p, std::size_t reach) {
  if (p.v1.size() == 1) return "base";
  for (const FamilySpec& f : family_specs())
    if (matches_family(p, f)) return f.tag;
  for (const FamilySpec& f : boundary_specs())
    if (matches_family(p, f)) return "boundary-family";
  if (matches_boundary_two_param(p.v1, p.v2) ||
      matches_boundary_two_param(p.v2, p.v1))
    return "boundary-family";
  if (is_family_suffix(p, reach)) return "suffix";
  return "extension";
}

// ---------------------------------------------------------------------------
// catalog growth
// ---------------------------------------------------------------------------

struct GrowPair {
  Word a, b;  // a carries the arc start (ends L2/L3), b the arc end (R2/R3)
  Angle att_a, att_b;
};

std::vector<GrowPair> seed_pairs() {
  return {
      {K("L3"), K("R3"), Angle(10, 14), Angle(2, 14)},
      {K("L2"), K("R2"), Angle(9, 14), Angle(1, 14)},
  };
}

// One halving step: each pair has exactly two preimage pairs, one per branch.
// The connecting arc halves along with the attachments, and the new first
// letters are read off from the regions the halved attachments land in.
std::vector<GrowPair> grow_level(const std::vector<GrowPair>& level) {
  std::vector<GrowPair> next;
  next.reserve(level.size() * 2);
  for (const GrowPair& gp : level) {
    const Angle len2 = halve_angle(sub(gp.att_b, gp.att_a), false);
    const Angle delta(Int(1), Int(14) << (gp.a.size() + 2));
    for (const bool branch : {false, true}) {
      const Angle qa = halve_angle(gp.att_a, branch);
      const Angle qb = add(qa, len2);
      const Letter xa = region_of(sub(qa, delta));
      const Letter xb = region_of(add(qb, delta));
      if (!can_follow(xa, gp.a.front()) || !can_follow(xb, gp.b.front()))
        throw NotAdmissible("catalog growth produced an illegal letter");
      next.push_back({prepend(xa, gp.a), prepend(xb, gp.b), qa, qb});
    }
  }
  return next;
}

ExchangePair to_pair(const GrowPair& gp) {
  ExchangePair p;
  p.v1 = gp.a;
  p.v2 = gp.b;
  p.side1 = side_of(gp.att_a);
  p.side2 = side_of(gp.att_b);
  return normalize_pair(std::move(p));
}

// ---------------------------------------------------------------------------
// pullback oracle helpers
// ---------------------------------------------------------------------------

bool has_lo_endpoint(const ArcSet& arcs, const Angle& t) {
  for (const Arc& c : arcs)
    if (c.lo == t) return true;
  return false;
}

bool has_hi_endpoint(const ArcSet& arcs, const Angle& t) {
  for (const Arc& c : arcs)
    if (c.hi == t) return true;
  return false;
}

Angle arc_midpoint(const Arc& c) {
  return add(c.lo, halve_angle(sub(c.hi, c.lo), false));
}

struct OracleComp {
  Word a, b;
  Angle att_a, att_b;
};

// ---------------------------------------------------------------------------
// arc predicates shared by is_exchange_for / validate_zeta_eta_pair
// ---------------------------------------------------------------------------

bool arcs_overlap(const Arc& x, const Arc& y) {
  return x.lo == y.lo || x.contains(y.lo) || y.contains(x.lo);
}

bool arc_inside(const Arc& outer, const Arc& inner) {
  return contains_arc(ArcSet{outer}, inner);
}

// Does some component of D(x) sit strictly between D(a) and D(b) — i.e.
// inside a gap that separates a component of D(a) from a component of D(b)
// with no other component of either in the way?
bool cylinder_between(const Word& x, const Word& a, const Word& b) {
  const ArcSet xs = cylinder_arcs(x);
  const ArcSet as = cylinder_arcs(a);
  const ArcSet bs = cylinder_arcs(b);
  auto clear_gap = [&](const Arc& gap) {
    for (const Arc& c : as)
      if (arc_inside(gap, c)) return false;
    for (const Arc& c : bs)
      if (arc_inside(gap, c)) return false;
    return true;
  };
  for (const Arc& alpha : as)
    for (const Arc& beta : bs)
      for (const Arc& gap : {Arc{alpha.hi, beta.lo}, Arc{beta.hi, alpha.lo}}) {
        if (gap.lo == gap.hi) continue;
        if (!clear_gap(gap)) continue;
        for (const Arc& xi : xs)
          if (arc_inside(gap, xi)) return true;
      }
  return false;
}

std::set<std::pair<std::string, std::string>> basic_key_set(
    std::size_t max_len) {
  std::set<std::pair<std::string, std::string>> keys;
  for (const ExchangePair& p : basic_pairs_catalog(max_len))
    keys.emplace(word_text(p.v1), word_text(p.v2));
  return keys;
}

}  // namespace

// ---------------------------------------------------------------------------
// small public helpers
// ---------------------------------------------------------------------------

std::string_view pair_side_name(PairSide s) {
  switch (s) {
    case PairSide::Top: return "top";
    case PairSide::Bot: return "bot";
    default: return "none";
  }
}

ExchangePair normalize_pair(ExchangePair p) {
  if (p.v2 < p.v1) {
    std::swap(p.v1, p.v2);
    std::swap(p.side1, p.side2);
  }
  return p;
}

bool same_pair(const ExchangePair& a, const ExchangePair& b) {
  return a.v1 == b.v1 && a.v2 == b.v2 && a.side1 == b.side1 &&
         a.side2 == b.side2;
}

bool pair_less(const ExchangePair& a, const ExchangePair& b) {
  if (a.v1 != b.v1) return a.v1 < b.v1;
  if (a.v2 != b.v2) return a.v2 < b.v2;
  if (a.side1 != b.side1) return a.side1 < b.side1;
  return a.side2 < b.side2;
}

Angle attachment_angle(const Word& v) {
  if (v.empty()) throw EmptyWord("attachment angle of the empty word");
  Angle t = base_attachment(v.back());
  for (std::size_t i = v.size() - 1; i-- > 0;) t = half_into(t, v[i]);
  return t;
}

Arc connecting_shadow(const Word& v1, const Word& v2) {
  if (v1.empty() || v2.empty())
    throw EmptyWord("connecting shadow of an empty word");
  const Letter e1 = v1.back();
  const bool starts_first = (e1 == Letter::L3 || e1 == Letter::L2);
  const Word& s = starts_first ? v1 : v2;
  const Word& e = starts_first ? v2 : v1;
  return Arc{attachment_angle(s), attachment_angle(e)};
}

// ---------------------------------------------------------------------------
// catalogs
// ---------------------------------------------------------------------------

std::vector<ExchangePair> basic_pairs_catalog(std::size_t max_len) {
  std::vector<ExchangePair> out;
  if (max_len == 0) return out;
  std::vector<GrowPair> level = seed_pairs();
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const GrowPair& gp : level) {
      ExchangePair p = to_pair(gp);
      p.family = classify_pair(p, len + 12);
      out.push_back(std::move(p));
    }
    if (len < max_len) level = grow_level(level);
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

std::vector<ExchangePair> pullback_pairs(std::size_t max_len) {
  std::vector<ExchangePair> out;
  if (max_len == 0) return out;
  std::vector<OracleComp> level = {
      {K("L3"), K("R3"), Angle(10, 14), Angle(2, 14)},
      {K("L2"), K("R2"), Angle(9, 14), Angle(1, 14)},
  };
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const OracleComp& c : level) {
      // Attachments must be leaf-side endpoints of the cylinder arcs;
      // anything else means the lamination pullback lost track of the pair.
      if (!has_hi_endpoint(cylinder_arcs(c.a), c.att_a) ||
          !has_lo_endpoint(cylinder_arcs(c.b), c.att_b))
        throw AmbiguousPairing("pullback attachment left its cylinder");
      ExchangePair p;
      p.v1 = c.a;
      p.v2 = c.b;
      p.side1 = side_of(c.att_a);
      p.side2 = side_of(c.att_b);
      p.family = "pullback";
      out.push_back(normalize_pair(std::move(p)));
    }
    if (len == max_len) break;
    std::vector<OracleComp> next;
    next.reserve(level.size() * 2);
    for (const OracleComp& c : level) {
      const ArcSet ha = halve_preimage(cylinder_arcs(c.a));
      const ArcSet hb = halve_preimage(cylinder_arcs(c.b));
      const Angle len2 = halve_angle(sub(c.att_b, c.att_a), false);
      for (const bool branch : {false, true}) {
        const Angle qa = halve_angle(c.att_a, branch);
        const Angle qb = add(qa, len2);
        const Arc* ea = nullptr;
        for (const Arc& h : ha)
          if (h.hi == qa) ea = &h;
        const Arc* eb = nullptr;
        for (const Arc& h : hb)
          if (h.lo == qb) eb = &h;
        if (ea == nullptr || eb == nullptr)
          throw AmbiguousPairing("no preimage half-arc at the attachment");
        const Letter xa = region_of(arc_midpoint(*ea));
        const Letter xb = region_of(arc_midpoint(*eb));
        next.push_back({prepend(xa, c.a), prepend(xb, c.b), qa, qb});
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

// ---------------------------------------------------------------------------
// exchangeability against a crossing arc
// ---------------------------------------------------------------------------

bool is_exchange_for(const ExchangePair& p, const Arc& zeta_first_crossing) {
  const std::size_t n = p.v1.size();
  if (n == 0 || p.v2.size() != n)
    throw NotEligible("exchange test needs equal-length nonempty words");
  bool any_common = false;
  bool deeper_common = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.v1[i] == p.v2[i]) {
      any_common = true;
      if (i > 0) deeper_common = true;
    }
  }
  if (!any_common) return true;
  if (!deeper_common && p.v1[0] == p.v2[0] && p.v1[0] == Letter::L3)
    return true;
  for (std::size_t m = 2; m < n; ++m) {
    const Arc sh = connecting_shadow(suffix_of(p.v1, m), suffix_of(p.v2, m));
    if (arcs_overlap(sh, zeta_first_crossing)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// block decomposition of a candidate pair
// ---------------------------------------------------------------------------

bool validate_zeta_eta_pair(const ExchangePair& p,
                            const std::vector<Word>& crossing_words) {
  const std::size_t n = p.v1.size();
  if (n == 0 || p.v2.size() != n)
    throw NotEligible("pair words must be nonempty and the same length");
  const auto basics = basic_key_set(n);
  auto is_basic = [&](std::size_t from, std::size_t to) {
    Word a(p.v1.begin() + static_cast<std::ptrdiff_t>(from),
           p.v1.begin() + static_cast<std::ptrdiff_t>(to));
    Word b(p.v2.begin() + static_cast<std::ptrdiff_t>(from),
           p.v2.begin() + static_cast<std::ptrdiff_t>(to));
    if (b < a) std::swap(a, b);
    return basics.count({word_text(a), word_text(b)}) > 0;
  };
  // A block is a shared prefix followed by a basic pair.  Sweep split points
  // right to left; `struct_ok` tracks decomposability alone, `valid_ok`
  // additionally requires a crossing cylinder between the words of every
  // block except the rightmost.
  std::vector<char> struct_ok(n + 1, 0), valid_ok(n + 1, 0);
  struct_ok[n] = valid_ok[n] = 1;
  for (std::size_t s = n; s-- > 0;) {
    for (std::size_t m = s; m < n; ++m) {
      if (m > s && p.v1[m - 1] != p.v2[m - 1]) break;
      for (std::size_t e = m + 1; e <= n; ++e) {
        if (!struct_ok[e] && !valid_ok[e]) continue;
        if (!is_basic(m, e)) continue;
        if (struct_ok[e]) struct_ok[s] = 1;
        if (!valid_ok[e] || valid_ok[s]) continue;
        bool blocked = (e == n);
        if (!blocked) {
          const Word a(p.v1.begin() + static_cast<std::ptrdiff_t>(s),
                       p.v1.begin() + static_cast<std::ptrdiff_t>(e));
          const Word b(p.v2.begin() + static_cast<std::ptrdiff_t>(s),
                       p.v2.begin() + static_cast<std::ptrdiff_t>(e));
          for (const Word& w : crossing_words)
            if (cylinder_between(w, a, b)) {
              blocked = true;
              break;
            }
        }
        if (blocked) valid_ok[s] = 1;
      }
    }
  }
  if (!struct_ok[0])
    throw DecompositionFailed("no split into shared prefixes and basic pairs");
  return valid_ok[0] != 0;
}

// ---------------------------------------------------------------------------
// annulus chains
// ---------------------------------------------------------------------------

namespace {

// Exact signed displacement (winding included, so NOT reduced mod 1).
struct Frac {
  Int num{0};
  Int den{1};
};

Frac reduce(Frac f) {
  if (f.den < 0) {
    f.den = -f.den;
    f.num = -f.num;
  }
  const Int g = gcd(f.num < 0 ? Int(-f.num) : f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

Frac frac(long num, long den) { return reduce({Int(num), Int(den)}); }

Frac frac_add(const Frac& a, const Frac& b) {
  return reduce({a.num * b.den + b.num * a.den, a.den * b.den});
}

Frac frac_half(Frac f) {
  f.den *= 2;
  return reduce(f);
}

Angle frac_mod1(const Frac& f) { return Angle(f.num, f.den); }

// One excursion outside the disk: it leaves the cylinder of `from` at
// out_att and lands on the cylinder of `to` at in_att, moving by disp.
struct Piece {
  Word from, to;
  Angle out_att, in_att;
  Frac disp;
};

// Pieces in cyclic order; piece k lands on the word piece k+1 leaves.
using Chain = std::vector<Piece>;

// Rerouted piece: its two lifts swap landing halves and each acquire a
// half-turn with the given sense.
struct Reroute {
  Word from, to;
  int sign;
};

// The one-per-level rerouted piece of the outer tower.
std::vector<Reroute> a_reroutes(int i, int sign) {
  std::vector<Reroute> out;
  if (i < 2) return out;
  Word from, to;
  if (i % 3 == 2) {
    const std::size_t n = static_cast<std::size_t>((i - 2) / 3);
    from = concat(repeat(K("L3L2R3"), n), K("L3L3"));
    to = concat(repeat(K("R3L3L2"), n), K("R3L3"));
  } else if (i % 3 == 0) {
    const std::size_t n = static_cast<std::size_t>((i - 3) / 3);
    from = concat(repeat(K("R3L3L2"), n), K("R3L3L3"));
    to = repeat(K("L2R3L3"), n + 1);
  } else {
    const std::size_t n = static_cast<std::size_t>((i - 4) / 3);
    from = concat(repeat(K("L2R3L3"), n + 1), K("L3"));
    to = concat(K("L3"), repeat(K("L2R3L3"), n + 1));
  }
  out.push_back({std::move(from), std::move(to), sign});
  return out;
}

// The central tower's rerouted pieces come in a formula/partner pair; the
// partner swaps the final UC/BC of both words and reverses the arrow.  At
// level 2 the pair degenerates to the single piece UC -> BC.
std::pair<std::pair<Word, Word>, std::pair<Word, Word>> c_formula_partner(
    int i) {
  Word from, to;
  if (i % 3 == 0) {
    const std::size_t n = static_cast<std::size_t>((i - 3) / 3);
    from = concat(repeat(K("R2UCL1"), n), K("R2UC"));
    to = concat(repeat(K("L2R3L3"), n), K("L2BC"));
  } else if (i % 3 == 1) {
    const std::size_t n = static_cast<std::size_t>((i - 4) / 3);
    from = repeat(K("L1R2UC"), n + 1);
    to = concat(repeat(K("L3L2R3"), n), K("L3L2BC"));
  } else {
    const long n = (i - 5) / 3;
    from =
        concat(repeat(K("UCL1R2"), static_cast<std::size_t>(n + 1)), K("UC"));
    to = concat(repeat(K("R3L3L2"), static_cast<std::size_t>(n + 1)), K("BC"));
  }
  Word pfrom = to;
  pfrom.back() = Letter::UC;
  Word pto = from;
  pto.back() = Letter::BC;
  return {{std::move(from), std::move(to)}, {std::move(pfrom), std::move(pto)}};
}

// How the central tower is rerouted, level by level.  At level 2 the two
// chain pieces may flip independently.  At level i >= 3 the formula/partner
// pair always flips, and possibly also one or both of the in-disk passages
// running along the far sides of their gaps: the forward passage
// (formula-to -> partner-from) and the backward one (partner-to ->
// formula-from).  Signs are the half-turn senses, in the order formula,
// partner, forward passage, backward passage, level-2 UC->BC, level-2
// BC->UC.
struct CPolicy {
  int flip2set;   // bit 0: UC->BC rerouted, bit 1: BC->UC rerouted
  int pass_rule;  // passages crossed for i >= 3: 0 none, 1 forward,
                  // 2 backward, 3 both
  std::array<int, 6> signs;
};

std::vector<Reroute> c_reroutes(int i, const CPolicy& pol) {
  std::vector<Reroute> out;
  if (i < 2) return out;
  if (i == 2) {
    if (pol.flip2set & 1) out.push_back({K("UC"), K("BC"), pol.signs[4]});
    if (pol.flip2set & 2) out.push_back({K("BC"), K("UC"), pol.signs[5]});
    return out;
  }
  auto [f, p] = c_formula_partner(i);
  if (pol.pass_rule & 1) out.push_back({f.second, p.first, pol.signs[2]});
  if (pol.pass_rule & 2) out.push_back({p.second, f.first, pol.signs[3]});
  out.push_back({std::move(f.first), std::move(f.second), pol.signs[0]});
  out.push_back({std::move(p.first), std::move(p.second), pol.signs[1]});
  return out;
}

struct LiftedEnd {
  Word word;
  Angle att;
};

// Identify the level-(i+1) word whose cylinder the lifted endpoint q sits
// on: parent_att is an endpoint of one of the parent cylinder arcs, q is the
// matching endpoint of one of its preimage halves, and the half's region
// names the prepended letter.
LiftedEnd lift_end(const Word& parent, const Angle& parent_att,
                   const Angle& q) {
  const ArcSet parent_arcs = cylinder_arcs(parent);
  const bool is_hi = has_hi_endpoint(parent_arcs, parent_att);
  if (!is_hi && !has_lo_endpoint(parent_arcs, parent_att))
    throw AmbiguousPairing("chain attachment is not a cylinder endpoint");
  const ArcSet halves = halve_preimage(parent_arcs);
  for (const Arc& h : halves) {
    if ((is_hi ? h.hi : h.lo) != q) continue;
    const Letter x = region_of(arc_midpoint(h));
    Word child = prepend(x, parent);
    const ArcSet child_arcs = cylinder_arcs(child);
    if (!(is_hi ? has_hi_endpoint(child_arcs, q)
                : has_lo_endpoint(child_arcs, q)))
      throw AmbiguousPairing("lifted attachment left the child cylinder");
    return {std::move(child), q};
  }
  throw AmbiguousPairing("no preimage half-arc at lifted attachment");
}

// Double cover: every piece lifts to two pieces, one per halving branch.
// Rerouted pieces swap their landing halves (the strand is dragged across
// the boundary between the two lifts) and pick up a half-turn whose sense is
// fixed per rerouted piece.
std::vector<Piece> lift_pieces(const std::vector<Chain>& chains,
                               const std::vector<Reroute>& reroutes) {
  auto reroute_of = [&](const Piece& pc) -> const Reroute* {
    for (const Reroute& r : reroutes)
      if (pc.from == r.from && pc.to == r.to) return &r;
    return nullptr;
  };
  std::vector<Piece> lifted;
  for (const Chain& ch : chains) {
    for (const Piece& pc : ch) {
      const Frac half_disp = frac_half(pc.disp);
      std::array<std::pair<Angle, Angle>, 2> ends;
      for (int b = 0; b < 2; ++b) {
        const Angle qo = halve_angle(pc.out_att, b == 1);
        const Angle qi = add(qo, frac_mod1(half_disp));
        ends[static_cast<std::size_t>(b)] = {qo, qi};
      }
      Frac child_disp = half_disp;
      if (const Reroute* r = reroute_of(pc)) {
        std::swap(ends[0].second, ends[1].second);
        child_disp = frac_add(child_disp, frac(r->sign, 2));
      }
      for (const auto& [qo, qi] : ends) {
        LiftedEnd eo = lift_end(pc.from, pc.out_att, qo);
        LiftedEnd ei = lift_end(pc.to, pc.in_att, qi);
        lifted.push_back(
            {std::move(eo.word), std::move(ei.word), qo, qi, child_disp});
      }
    }
  }
  return lifted;
}


// Stitch a bag of pieces into disjoint cyclic chains, canonically rotated to
// start at the lexicographically smallest word and sorted by that word.
std::vector<Chain> stitch(std::vector<Piece> pieces) {
  std::map<Word, std::size_t> out_of;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!out_of.emplace(pieces[i].from, i).second)
      throw AmbiguousPairing("two chain pieces leave the same word");
  }
  std::vector<Chain> chains;
  std::vector<char> used(pieces.size(), 0);
  for (const auto& [word, start] : out_of) {
    if (used[start]) continue;
    Chain ch;
    std::size_t cur = start;
    while (!used[cur]) {
      used[cur] = 1;
      ch.push_back(pieces[cur]);
      const auto it = out_of.find(pieces[cur].to);
      if (it == out_of.end())
        throw AmbiguousPairing("chain piece lands on a word with no exit");
      cur = it->second;
    }
    if (pieces[cur].from != ch.front().from)
      throw AmbiguousPairing("chain pieces do not close into a cycle");
    chains.push_back(std::move(ch));
  }
  return chains;  // map iteration already visits smallest start words first
}

// Base configuration, fitted once against the low annulus levels.
Chain base_a_chain() {
  return {
      {K("L3L3"), K("R3L3"), Angle(10, 28), Angle(4, 28), frac(-6, 28)},
      {K("R3L3"), K("L3L3"), Angle(24, 28), Angle(18, 28), frac(-6, 28)},
  };
}

constexpr int kASign = 1;

Chain base_c_chain() {
  return {
      {K("UC"), K("BC"), Angle(3, 14), Angle(11, 14), frac(-6, 14)},
      {K("BC"), K("UC"), Angle(10, 14), Angle(4, 14), frac(8, 14)},
  };
}

CPolicy c_policy() { return {1, 1, {1, 1, -1, 1, -1, 1}}; }

struct AnnulusData {
  std::map<int, std::vector<Chain>> a_levels, c_levels;
};

AnnulusData build_annulus_data(const Chain& a_base, int sign_a,
                               const Chain& c_base, const CPolicy& pol) {
  AnnulusData d;
  d.a_levels[2] = stitch({a_base.begin(), a_base.end()});
  d.c_levels[2] = stitch({c_base.begin(), c_base.end()});
  for (int i = 2; i < 7; ++i) {
    d.a_levels[i + 1] =
        stitch(lift_pieces(d.a_levels[i], a_reroutes(i, sign_a)));
    d.c_levels[i + 1] = stitch(lift_pieces(d.c_levels[i], c_reroutes(i, pol)));
  }
  return d;
}

const AnnulusData& annulus_data() {
  static const AnnulusData data =
      build_annulus_data(base_a_chain(), kASign, base_c_chain(), c_policy());
  return data;
}

AnnulusCycle to_cycle(const Chain& ch, int index, char kind) {
  AnnulusCycle c;
  c.index = index;
  c.kind = kind;
  const std::size_t n = ch.size();
  for (std::size_t k = 0; k < n; ++k) {
    AnnulusCycle::Entry e;
    e.word = ch[k].from;
    if (kind == 'A') e.enter = side_of(ch[(k + n - 1) % n].in_att);
    c.cycle.push_back(std::move(e));
  }
  return c;
}

}  // namespace

const Word& AnnulusCycle::next_word(const Word& w) const {
  for (std::size_t k = 0; k < cycle.size(); ++k)
    if (cycle[k].word == w) return cycle[(k + 1) % cycle.size()].word;
  throw OutOfCatalog("word is not on this cycle");
}

std::vector<AnnulusCycle> annulus_cycles(int i) {
  if (i < 2 || i > 7)
    throw OutOfCatalog("annulus chains are tabulated for levels 2 through 7");
  const AnnulusData& d = annulus_data();
  std::vector<AnnulusCycle> out;
  for (const Chain& ch : d.a_levels.at(i)) out.push_back(to_cycle(ch, i, 'A'));
  for (const Chain& ch : d.c_levels.at(i)) out.push_back(to_cycle(ch, i, 'C'));
  return out;
}

}  // namespace capture

#include "capture/wsequence.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "capture/circle.hpp"
#include "capture/errors.hpp"
#include "capture/letters.hpp"

namespace capture {
namespace {

Word sub(const Word& w, std::size_t lo, std::size_t hi) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo),
              w.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool in_run_alphabet(Letter a) {
  return a == Letter::L3 || a == Letter::L2 || a == Letter::R3;
}

std::size_t count_l_letters(const Word& w, std::size_t lo, std::size_t hi) {
  std::size_t n = 0;
  for (std::size_t i = lo; i < hi; ++i)
    if (w[i] == Letter::L2 || w[i] == Letter::L3) ++n;
  return n;
}

std::size_t l3_run_at(const Word& w, std::size_t p) {
  std::size_t n = 0;
  while (p + n < w.size() && w[p + n] == Letter::L3) ++n;
  return n;
}

// A piece's trailing L3 run may be shared with the word's continuation; the
// scan only accepts a string whose final L3 ends the word or precedes L2.
bool follower_ok(const Word& w, std::size_t p) {
  return p == w.size() || w[p] == Letter::L2;
}

bool is_block(const Word& w, std::size_t p) {  // (L2,R3) at p
  return p + 1 < w.size() && w[p] == Letter::L2 && w[p + 1] == Letter::R3;
}

bool is_q_unit(const Word& w, std::size_t p) {  // (L3,L2,R3) at p
  return p + 2 < w.size() && w[p] == Letter::L3 && w[p + 1] == Letter::L2 &&
         w[p + 2] == Letter::R3;
}

// One factor of a pattern-5 string: (L3L2R3)^q L3 (L2R3)^m L3^{r-1}.
struct Piece {
  std::size_t start = 0;
  std::size_t len = 0;  // letters of the factor itself (shared run L3 excluded when r == 1)
  std::size_t q = 0;
  std::size_t m = 0;
  std::size_t r = 0;
};

// Leading factor with an L3 head: largest q wins, blocks are consumed
// greedily, and the trailing L3 run is taken whole (a shorter run would leave
// the final L3 followed by L3, which the follower condition forbids).
std::optional<Piece> parse_lead_l3(const Word& w, std::size_t s) {
  std::size_t qmax = 0;
  while (is_q_unit(w, s + 3 * qmax)) ++qmax;
  for (std::size_t q = qmax + 1; q-- > 0;) {
    const std::size_t core = s + 3 * q;
    if (core >= w.size() || w[core] != Letter::L3) continue;
    std::size_t p = core + 1;
    std::size_t m = 0;
    while (is_block(w, p)) {
      p += 2;
      ++m;
    }
    if (m < 1) continue;
    const std::size_t r = l3_run_at(w, p);
    if (r < 1 || (m + r) % 2 == 0 || m + r < 3) continue;
    Piece pc;
    pc.start = s;
    pc.q = q;
    pc.m = m;
    pc.r = r;
    pc.len = 3 * q + 2 * m + r;  // = 3q + 1 + 2m + (r-1)
    if (r == 1) pc.len = 3 * q + 1 + 2 * m;
    return pc;
  }
  return std::nullopt;
}

// Interior factor (m,r) = (2,1): shape only; any run or block anomaly after
// it surfaces as a failure at the next factor start.
std::optional<Piece> parse_interior(const Word& w, std::size_t p) {
  std::size_t qmax = 0;
  while (is_q_unit(w, p + 3 * qmax)) ++qmax;
  for (std::size_t q = qmax + 1; q-- > 0;) {
    const std::size_t core = p + 3 * q;
    if (core >= w.size() || w[core] != Letter::L3) continue;
    if (!is_block(w, core + 1) || !is_block(w, core + 3)) continue;
    Piece pc;
    pc.start = p;
    pc.q = q;
    pc.m = 2;
    pc.r = 1;
    pc.len = 3 * q + 5;
    return pc;
  }
  return std::nullopt;
}

// Closing factor (m,r) = (1,2) or (0,3); the run beyond the core must match
// exactly and the string's final L3 must satisfy the follower condition.
std::optional<Piece> parse_terminal(const Word& w, std::size_t p) {
  std::size_t qmax = 0;
  while (is_q_unit(w, p + 3 * qmax)) ++qmax;
  for (std::size_t q = qmax + 1; q-- > 0;) {
    const std::size_t core = p + 3 * q;
    if (core >= w.size() || w[core] != Letter::L3) continue;
    if (is_block(w, core + 1) && l3_run_at(w, core + 3) == 2 &&
        follower_ok(w, core + 5)) {
      Piece pc;
      pc.start = p;
      pc.q = q;
      pc.m = 1;
      pc.r = 2;
      pc.len = 3 * q + 4;
      return pc;
    }
    if (l3_run_at(w, core) == 4 && follower_ok(w, core + 4)) {
      Piece pc;
      pc.start = p;
      pc.q = q;
      pc.m = 0;
      pc.r = 3;
      pc.len = 3 * q + 3;
      return pc;
    }
  }
  return std::nullopt;
}

// A complete pattern-5 occurrence v_1...v_n L3. final_pos indexes the string's
// final L3 in w.
struct CaseString {
  std::vector<Piece> pieces;
  std::size_t start = 0;
  std::size_t final_pos = 0;
  bool x_form = false;
};

// Leading factor headed by BC or UC: X L1 R1^p R2 R3 (L2R3)^m L3^{r-1}, with
// the whole trailing run taken as r in [3,5]. Always a complete n = 1 string.
std::optional<CaseString> parse_lead_x(const Word& w, std::size_t s) {
  std::size_t p = s + 1;
  if (p >= w.size() || w[p] != Letter::L1) return std::nullopt;
  ++p;
  while (p < w.size() && w[p] == Letter::R1) ++p;
  if (p >= w.size() || w[p] != Letter::R2) return std::nullopt;
  ++p;
  if (p >= w.size() || w[p] != Letter::R3) return std::nullopt;
  ++p;
  std::size_t m = 0;
  while (is_block(w, p)) {
    p += 2;
    ++m;
  }
  const std::size_t r = l3_run_at(w, p);
  if (r < 3 || r > 5) return std::nullopt;
  if (!follower_ok(w, p + r)) return std::nullopt;
  CaseString cs;
  cs.start = s;
  cs.final_pos = p + r - 1;
  cs.x_form = true;
  Piece pc;
  pc.start = s;
  pc.len = cs.final_pos - s;
  pc.m = m;
  pc.r = r;
  cs.pieces.push_back(pc);
  return cs;
}

std::optional<CaseString> find_string_core(const Word& w, std::size_t s) {
  if (s >= w.size()) return std::nullopt;
  if (w[s] == Letter::BC || w[s] == Letter::UC) return parse_lead_x(w, s);
  if (w[s] != Letter::L3) return std::nullopt;
  auto v1 = parse_lead_l3(w, s);
  if (!v1) return std::nullopt;
  CaseString cs;
  cs.start = s;
  cs.pieces.push_back(*v1);
  if (v1->r >= 2) {
    cs.final_pos = s + v1->len;
    return cs;
  }
  // r == 1: the run L3 is shared, so the string must continue with interior
  // factors until a factor fails; the failure point decides completion.
  std::size_t cur = s + v1->len;
  for (;;) {
    if (auto pi = parse_interior(w, cur)) {
      cs.pieces.push_back(*pi);
      cur += pi->len;
      continue;
    }
    if (cs.pieces.size() % 2 == 1 && cur < w.size() && w[cur] == Letter::L3 &&
        follower_ok(w, cur + 1)) {
      cs.final_pos = cur;
      return cs;
    }
    if (auto vt = parse_terminal(w, cur)) {
      if ((cs.pieces.size() + 1) % 2 == 1) {
        cs.final_pos = cur + vt->len;
        cs.pieces.push_back(*vt);
        return cs;
      }
    }
    return std::nullopt;
  }
}

// A one-factor string whose shared final L3 itself heads a complete string is
// an artifact of the larger structure, not an occurrence of its own.
std::optional<CaseString> find_string_at(const Word& w, std::size_t s) {
  auto cs = find_string_core(w, s);
  if (!cs) return std::nullopt;
  if (!cs->x_form && cs->pieces.size() == 1 && cs->pieces[0].r == 1 &&
      find_string_core(w, cs->final_pos)) {
    return std::nullopt;
  }
  return cs;
}

struct Event {
  int kind = 0;
  std::size_t end = 0;
  std::size_t blocks = 0;  // pattern 1: number of (UC,L1,R2) groups
  std::optional<CaseString> str;
};

std::optional<Event> match_case1(const Word& w, std::size_t cursor) {
  for (std::size_t e = cursor + 1; e < w.size(); ++e) {
    if (w[e] != Letter::BC) continue;
    std::size_t j = e;
    std::size_t blocks = 0;
    while (j >= 3 && w[j - 3] == Letter::UC && w[j - 2] == Letter::L1 &&
           w[j - 1] == Letter::R2) {
      j -= 3;
      ++blocks;
    }
    std::size_t lo = j;
    while (lo > 0 && in_run_alphabet(w[lo - 1])) --lo;
    if (lo == j) continue;  // no run before the occurrence
    if (count_l_letters(w, lo, j) % 2 != 0) continue;
    Event ev;
    ev.kind = 1;
    ev.end = e;
    ev.blocks = blocks;
    return ev;
  }
  return std::nullopt;
}

std::optional<Event> match_case2(const Word& w, std::size_t cursor) {
  for (std::size_t e = cursor + 1; e < w.size(); ++e) {
    if (w[e] != Letter::UC) continue;
    std::size_t lo = e;
    while (lo > 0 && in_run_alphabet(w[lo - 1])) --lo;
    if (lo == e) continue;
    if (count_l_letters(w, lo, e) % 2 != 1) continue;
    Event ev;
    ev.kind = 2;
    ev.end = e;
    return ev;
  }
  return std::nullopt;
}

std::optional<Event> match_case3(const Word& w, std::size_t cursor) {
  for (std::size_t e = cursor + 1; e < w.size(); ++e) {
    if (e >= 2 && w[e] == Letter::UC && w[e - 2] == Letter::L1 &&
        w[e - 1] == Letter::R2) {
      Event ev;
      ev.kind = 3;
      ev.end = e;
      return ev;
    }
  }
  return std::nullopt;
}

std::optional<Event> match_case4(const Word& w, std::size_t cursor) {
  for (std::size_t e = cursor + 1; e < w.size(); ++e) {
    if (e >= 2 && w[e] == Letter::BC && w[e - 2] == Letter::R1 &&
        w[e - 1] == Letter::R2) {
      Event ev;
      ev.kind = 4;
      ev.end = e;
      return ev;
    }
  }
  return std::nullopt;
}

std::optional<Event> match_case5(const Word& w, std::size_t cursor) {
  for (std::size_t s = cursor; s < w.size(); ++s) {
    if (w[s] != Letter::L3 && w[s] != Letter::BC && w[s] != Letter::UC)
      continue;
    if (auto cs = find_string_at(w, s)) {
      Event ev;
      ev.kind = 5;
      ev.end = cs->final_pos;
      ev.str = std::move(cs);
      return ev;
    }
  }
  return std::nullopt;
}

void append_entry(WSeq& seq, Word wi, Word wpi, int kind, std::size_t end) {
  seq.wi.push_back(std::move(wi));
  seq.wpi.push_back(std::move(wpi));
  seq.kinds.push_back(kind);
  seq.ends.push_back(end);
}

// The companion on the final_letter side of the single-arc cylinder of
// `base`, a word whose last letter is central and refined (BC or UC).  A
// trailing plain C would leave two candidate components; the refined letter
// picks the one the enclosing occurrence actually sits in.
Word companion_of(const Word& base, Letter final_letter) {
  std::vector<Word> hits;
  for (bool left : {true, false}) {
    Word c = neighbor_word(base, left);
    if (c.back() == final_letter) hits.push_back(std::move(c));
  }
  if (hits.size() != 1)
    throw AmbiguousPairing(word_text(base) + " has " +
                           std::to_string(hits.size()) + " companions ending " +
                           std::string(letter_name(final_letter)));
  return hits.front();
}

void apply_case0(const Word& w, std::size_t e, std::size_t prev_end,
                 WSeq& seq) {
  std::size_t lo = e;
  while (lo > 0 && in_run_alphabet(w[lo - 1])) --lo;
  lo = std::max(lo, prev_end);
  const Letter fin =
      count_l_letters(w, lo, e) % 2 == 0 ? Letter::L3 : Letter::R3;
  // A terminal C leaves two candidate components when the word starts with
  // BC; refining it to BC fixes one, and agrees with the plain adjacency on
  // words whose cylinder is a mirror-symmetric pair.
  Word base = w;
  base.back() = Letter::BC;
  append_entry(seq, w, companion_of(base, fin), 0, e);
}

void apply_case1(const Word& w, const Event& ev, WSeq& seq) {
  Word prefix = sub(w, 0, ev.end + 1);
  Word base = sub(w, 0, ev.end - 3 * ev.blocks);
  base.push_back(ev.blocks > 0 ? Letter::UC : Letter::BC);
  append_entry(seq, prefix, companion_of(base, Letter::L3), 1, ev.end);
  if (ev.blocks > 0)
    append_entry(seq, prefix, companion_of(base, Letter::R3), 1, ev.end);
}

void apply_case2(const Word& w, const Event& ev, WSeq& seq) {
  Word base = sub(w, 0, ev.end);
  base.push_back(Letter::UC);
  append_entry(seq, sub(w, 0, ev.end + 1), companion_of(base, Letter::R3), 2,
               ev.end);
}

void apply_case3(const Word& w, const Event& ev, WSeq& seq) {
  Word wp = sub(w, 0, ev.end);
  wp.push_back(Letter::BC);
  append_entry(seq, sub(w, 0, ev.end + 1), std::move(wp), 3, ev.end);
}

void apply_case4(const Word& w, const Event& ev, WSeq& seq) {
  const std::size_t e = ev.end;
  if (e >= 3 && w[e - 3] == Letter::R1) {
    Word wp = sub(w, 0, e);
    for (Letter a : {Letter::R3, Letter::L2, Letter::R3, Letter::L3})
      wp.push_back(a);
    append_entry(seq, sub(w, 0, e + 1), std::move(wp), 4, e);
    return;
  }
  if (e >= 4 && w[e - 3] == Letter::L1) {
    Word base = sub(w, 0, e - 3);  // ends in the central letter before L1
    append_entry(seq, base, neighbor_word(base, true), 4, e - 4);
    append_entry(seq, sub(w, 0, e + 1), neighbor_word(base, false), 4, e);
    return;
  }
  throw NoCaseMatched("occurrence of R1R2BC with no preceding R1 or L1");
}

void apply_case5(const Word& w, const Event& ev, WSeq& seq) {
  const CaseString& cs = *ev.str;
  const std::size_t f = cs.final_pos;
  const Piece& v1 = cs.pieces.front();
  Word wp;
  if (cs.pieces.size() > 1 ||
      (!cs.x_form && cs.pieces.size() == 1 && v1.m + v1.r == 3)) {
    wp = sub(w, 0, cs.pieces.back().start + 1);
  } else if (v1.r == 3) {
    wp = sub(w, 0, f - 2);  // replace the last L3^3 by L2 R3 L3
    for (Letter a : {Letter::L2, Letter::R3, Letter::L3}) wp.push_back(a);
  } else if (v1.r > 3) {
    wp = sub(w, 0, f - 2);  // delete the last L3^3
  } else if (v1.r == 2) {
    wp = sub(w, 0, f - 3);  // delete the last L2 R3 L3^2
  } else {
    wp = sub(w, 0, f - 4);  // delete the last (L2 R3)^2 L3
  }
  append_entry(seq, sub(w, 0, f + 1), std::move(wp), 5, f);
}

// Tail-swap rule: paired tail families whose members bound the same gap.
// Family A: y1 = L3 (L2R3)^{2j} L3^4   y2 = L3 (L2R3)^{2j+2}      (j >= 0)
// Family B: y1 = L3 (L2R3)^{2j} L3^2   y2 = L3 (L2R3)^{2j-1} L3^2 L2 R3 (j >= 1)
Word tail_family(int family, std::size_t j, int k) {
  Word y{Letter::L3};
  std::size_t blocks = 0;
  if (family == 0)
    blocks = k == 1 ? 2 * j : 2 * j + 2;
  else
    blocks = k == 1 ? 2 * j : 2 * j - 1;
  for (std::size_t i = 0; i < blocks; ++i) {
    y.push_back(Letter::L2);
    y.push_back(Letter::R3);
  }
  std::size_t tail = 0;
  if (family == 0 && k == 1) tail = 4;
  if (family == 1) tail = 2;
  for (std::size_t i = 0; i < tail; ++i) y.push_back(Letter::L3);
  if (family == 1 && k == 2) {
    y.push_back(Letter::L2);
    y.push_back(Letter::R3);
  }
  return y;
}

// Is the cylinder of v entirely on the far (clockwise) side of the branch
// angle tx?
bool cylinder_right_of(const Word& v, const Angle& tx) {
  const ArcSet arcs = cylinder_arcs(v);
  if (arcs.empty()) throw EmptyCylinder(word_text(v));
  const Angle half(1, 2);
  if (tx < half) {
    for (const Arc& a : arcs)
      if (a.hi <= half) return a.hi <= tx;  // upper-half arc
    return false;
  }
  for (const Arc& a : arcs)
    if (half <= a.lo) return tx <= a.lo;  // lower-half arc
  return false;
}

WSeq scan_word(const Word& w);

// Swapped companion for entry idx of seq against the branch at x, or nullopt
// when the swap rule does not apply to that entry.
std::optional<Word> swapped_companion(const Word& w, const WSeq& seq,
                                      std::size_t idx, const Angle& tx) {
  const Word& wij = seq.wi[idx];
  if (wij.empty() || wij.back() != Letter::L3) return std::nullopt;
  const std::size_t e = seq.ends[idx];
  if (e + 1 >= w.size() || w[e + 1] != Letter::L2) return std::nullopt;
  if (!cylinder_right_of(sub(w, e, w.size()), tx)) return std::nullopt;

  std::vector<Word> results;
  for (int family = 0; family < 2; ++family) {
    for (std::size_t j = family == 0 ? 0 : 1;; ++j) {
      const Word y1 = tail_family(family, j, 1);
      if (y1.size() + 1 > wij.size()) break;
      for (int k = 1; k <= 2; ++k) {
        Word pat = tail_family(family, j, k);
        pat.push_back(Letter::L3);
        if (!is_suffix(pat, wij)) continue;
        Word surrogate = sub(wij, 0, wij.size() - pat.size());
        const Word other = tail_family(family, j, k == 1 ? 2 : 1);
        surrogate.insert(surrogate.end(), other.begin(), other.end());
        surrogate.push_back(Letter::L3);
        surrogate.push_back(Letter::L2);
        WSeq sseq = scan_word(surrogate);
        if (sseq.wpi.size() <= idx) continue;
        results.push_back(sseq.wpi[idx]);
      }
    }
  }
  if (results.empty()) return std::nullopt;
  for (const Word& r : results)
    if (r != results.front())
      throw AmbiguousPairing("tail swap matches disagree for " +
                             word_text(wij));
  return results.front();
}

WSeq scan_word(const Word& w) {
  WSeq seq;
  seq.w = w;
  if (w.empty()) throw NoCaseMatched("empty word");
  if (!is_admissible(w)) throw NotAdmissible(word_text(w));

  if (w.size() == 1 && w[0] == Letter::C) {
    append_entry(seq, w, Word{Letter::L3}, 0, 0);
    seq.n = 0;
    return seq;
  }
  if (in_U0(w) == Membership::Out) throw NotInU0(word_text(w));

  // Head rule and scan origin.
  std::size_t cursor = 0;
  bool started = false;
  if (w[0] == Letter::BC) {
    append_entry(seq, sub(w, 0, 1), Word{Letter::L3}, -1, 0);
    started = true;
  } else if (l3_run_at(w, 0) >= 4) {
    append_entry(seq, sub(w, 0, 4), Word{Letter::L3}, -1, 3);
    cursor = 3;
    started = true;
  } else if (w.size() >= 4 && w[0] == Letter::L3 && w[1] == Letter::L3 &&
             w[2] == Letter::L2 && w[3] == Letter::BC) {
    append_entry(seq, sub(w, 0, 2), Word{Letter::L3}, -1, 1);
    cursor = 1;
    started = true;
  } else if (w.size() >= 2 && w[0] == Letter::L3 && w[1] == Letter::L2) {
    started = true;
  }
  if (!started) throw NoCaseMatched(word_text(w));

  std::size_t prev_end = cursor;
  for (;;) {
    std::vector<Event> cands;
    if (w.back() == Letter::C) {
      Event ev;
      ev.kind = 0;
      ev.end = w.size() - 1;
      cands.push_back(ev);
    }
    if (auto ev = match_case1(w, cursor)) cands.push_back(*ev);
    if (auto ev = match_case2(w, cursor)) cands.push_back(*ev);
    if (auto ev = match_case3(w, cursor)) cands.push_back(*ev);
    if (auto ev = match_case4(w, cursor)) cands.push_back(*ev);
    if (auto ev = match_case5(w, cursor)) cands.push_back(std::move(*ev));
    if (cands.empty()) break;
    auto best = std::min_element(
        cands.begin(), cands.end(), [](const Event& a, const Event& b) {
          return a.end != b.end ? a.end < b.end : a.kind < b.kind;
        });
    Event ev = std::move(*best);
    switch (ev.kind) {
      case 0:
        apply_case0(w, ev.end, prev_end, seq);
        break;
      case 1:
        apply_case1(w, ev, seq);
        break;
      case 2:
        apply_case2(w, ev, seq);
        break;
      case 3:
        apply_case3(w, ev, seq);
        break;
      case 4:
        apply_case4(w, ev, seq);
        break;
      default:
        apply_case5(w, ev, seq);
        break;
    }
    if (ev.kind == 0) break;
    cursor = ev.end;
    prev_end = ev.end;
  }

  seq.n = seq.wi.size();
  if (!seq.kinds.empty() && seq.kinds.back() == 0 && seq.wi.back() == w)
    seq.n -= 1;
  return seq;
}

}  // namespace

Membership in_U0(const Word& w) {
  if (w.empty()) return Membership::Undecided;
  if (w[0] == Letter::BC) return Membership::In;
  if (w[0] != Letter::L3) return Membership::Out;
  std::size_t k = 0;
  while (k < w.size() && w[k] == Letter::L3) ++k;
  if (k == w.size()) return Membership::Undecided;  // bare L3 run
  if (w[k] != Letter::L2) return Membership::Out;
  const bool k1 = k % 3 == 1;
  if (k + 1 == w.size()) {  // bare L3^k L2
    if (k1 || k % 2 == 0) return Membership::Undecided;
    return Membership::Out;
  }
  switch (w[k + 1]) {
    case Letter::BC:
      if (k1) return Membership::Out;
      return k % 2 == 0 ? Membership::In : Membership::Out;
    case Letter::R3:
    case Letter::UC:
    case Letter::C:
      return k1 ? Membership::In : Membership::Out;
    default:
      return Membership::Out;
  }
}

WSeq w_sequences(const Word& w, const std::optional<Word>& x) {
  WSeq seq = scan_word(w);
  if (!x) return seq;
  const Angle tx = branch_angle(*x);
  for (std::size_t i = 0; i < seq.wi.size(); ++i) {
    const Word& wij = seq.wi[i];
    if (!wij.empty() &&
        (wij.back() == Letter::BC || wij.back() == Letter::UC))
      continue;  // companions of BC/UC-ended prefixes are branch-independent
    if (auto swapped = swapped_companion(w, seq, i, tx))
      seq.wpi[i] = std::move(*swapped);
  }
  return seq;
}

Word w1(const Word& w) {
  WSeq seq = scan_word(w);
  if (seq.wi.empty()) throw NoCaseMatched(word_text(w));
  return seq.wi.front();
}

Word w1_prime(const Word& w) {
  WSeq seq = scan_word(w);
  if (seq.wpi.empty()) throw NoCaseMatched(word_text(w));
  return seq.wpi.front();
}

Word w2_bc(const Word& w) {
  if (w.empty() || w[0] != Letter::BC) throw FirstLetterNotBC(word_text(w));
  WSeq seq = scan_word(w);
  if (seq.wi.size() < 2 || seq.kinds[1] == 0) return w;
  return seq.wi[1];
}

Word w1_prime_x(const Word& w, const Word& x) {
  WSeq seq = w_sequences(w, x);
  if (seq.wpi.empty()) throw NoCaseMatched(word_text(w));
  return seq.wpi.front();
}

Membership in_Ux(const Word& w, const Word& x) {
  if (w.empty()) return Membership::Undecided;
  switch (in_U0(w)) {
    case Membership::Out:
      return Membership::Out;
    case Membership::Undecided:
      return Membership::Undecided;
    case Membership::In:
      break;
  }
  try {
    return w1_prime_x(w, x) == x ? Membership::In : Membership::Out;
  } catch (const NoCaseMatched&) {
    return Membership::Undecided;
  }
}

Angle branch_angle(const Word& x) {
  if (x.empty()) throw EmptyWord("branch word");
  Angle t(3, 7);  // lands on the periodic orbit continuing every branch word
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    std::optional<Angle> next;
    for (bool add_half : {false, true}) {
      const Angle cand = halve_angle(t, add_half);
      bool inside = false;
      for (const Arc& a : region_arcs(*it)) {
        if (a.contains(cand) || cand == a.lo || cand == a.hi) {
          inside = true;
          break;
        }
      }
      if (!inside) continue;
      if (next) throw AmbiguousPairing("both halves admissible for " +
                                       std::string(letter_name(*it)));
      next = cand;
    }
    if (!next)
      throw DecompositionFailed("no preimage lands in " +
                                std::string(letter_name(*it)));
    t = *next;
  }
  return t;
}

Word adjacent_word(const Word& w, Letter final_letter) {
  const ArcSet arcs = cylinder_arcs(w);
  if (arcs.empty()) throw EmptyCylinder(word_text(w));
  const std::size_t n = w.size();
  const Angle eps(1, Int(7) << (n + 2));
  std::vector<Word> cands;
  for (const Arc& a : arcs) {
    for (const Angle& t : {sub(a.lo, eps), add(a.hi, eps)}) {
      Word it = itinerary(t, n);
      if (it.back() != final_letter || it == w) continue;
      if (std::find(cands.begin(), cands.end(), it) == cands.end())
        cands.push_back(std::move(it));
    }
  }
  if (cands.size() != 1)
    throw AmbiguousPairing(word_text(w) + " has " +
                           std::to_string(cands.size()) + " neighbours ending " +
                           std::string(letter_name(final_letter)));
  return cands.front();
}

Word neighbor_word(const Word& v, bool left) {
  const ArcSet arcs = cylinder_arcs(v);
  if (arcs.empty()) throw EmptyCylinder(word_text(v));
  if (arcs.size() != 1)
    throw AmbiguousPairing(word_text(v) + " has a disconnected cylinder");
  const Angle eps(1, Int(7) << (v.size() + 2));
  const Angle t =
      left ? sub(arcs.front().lo, eps) : add(arcs.front().hi, eps);
  return itinerary(t, v.size());
}

}  // namespace capture

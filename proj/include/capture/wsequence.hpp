#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "capture/angle.hpp"
#include "capture/words.hpp"

namespace capture {

// Membership of a cylinder in the distinguished open region. Short prefixes
// whose extensions can land on either side report Undecided.
enum class Membership { In, Out, Undecided };

// Decides whether D(w) lies inside, outside, or undecidably on the fence of
// the distinguished region. Accepts any canonical word, including the empty
// prefix (Undecided).
Membership in_U0(const Word& w);

// One derivation step of the marked-prefix sequence. wi[j] is a prefix of w
// holding the j-th marked event; wpi[j] is its companion word of the same
// rough length describing the adjacent branch. kinds[j] records which event
// rule fired (-1 head rule, 0 final-letter rule, 1..5 pattern rules) and
// ends[j] the index of the event's last letter in w.
struct WSeq {
    Word w;
    std::vector<Word> wi;
    std::vector<Word> wpi;
    std::vector<int> kinds;
    std::vector<std::size_t> ends;
    std::size_t n = 0;  // entries before the final-letter terminator
};

// Runs the full event scan. With a branch word x, companion words are routed
// through the tail-swap rule for the branch at x where it applies.
WSeq w_sequences(const Word& w, const std::optional<Word>& x = std::nullopt);

// First marked prefix of w. Throws NotInU0 when D(w) is outside the
// distinguished region, NoCaseMatched when no event rule applies.
Word w1(const Word& w);

// First companion word. Same preconditions as w1.
Word w1_prime(const Word& w);

// Marked prefix for words whose first letter is BC. Throws FirstLetterNotBC
// otherwise.
Word w2_bc(const Word& w);

// Companion word relative to the branch at x: applies the tail-swap rule to
// w1(w) when its suffix matches one of the paired tail families and the
// continuation lies on the far side of the branch angle of x.
Word w1_prime_x(const Word& w, const Word& x);

// Whether D(w) lies in the region attached to the branch word x.
Membership in_Ux(const Word& w, const Word& x);

// The angle whose forward orbit realises x followed by the periodic word
// of the fixed central branch; the binding angle of the branch at x.
Angle branch_angle(const Word& x);

// The unique word of the same length as w, ending in final_letter, whose
// cylinder shares a boundary point with D(w). Throws AmbiguousPairing if the
// candidates do not agree, EmptyCylinder if D(w) is empty.
Word adjacent_word(const Word& w, Letter final_letter);

// Neighbouring word of the same length as v immediately outside D(v), which
// must be a single arc (v ends in BC or UC, say); left probes below the
// lower endpoint, right probes above the upper one.
Word neighbor_word(const Word& v, bool left);

}  // namespace capture

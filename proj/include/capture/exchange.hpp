#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "capture/angle.hpp"
#include "capture/words.hpp"

namespace capture {

// Half-circle label of an attachment point: top = angle in (0, 1/2).
enum class PairSide { Top, Bot, None };

std::string_view pair_side_name(PairSide s);

// Two equal-length admissible words whose cylinders are joined by an arc
// running outside the unit disc ("v1 <-> v2").  The pair set is closed under
// taking equal-length suffixes.  Pairs come in two strains, told apart by
// the final letters: (L3, R3) in some order, or (L2, R2) in some order.
//
// `family` names the closed-form family the pair instantiates ("base",
// "boundary-family", "l3-a1", ..., "bc-e2"), or "suffix" / "extension" for
// pairs reachable from those only by suffix-taking / prefix growth, or
// "pullback" when produced by the geometric oracle.
struct ExchangePair {
  Word v1, v2;
  PairSide side1 = PairSide::None;
  PairSide side2 = PairSide::None;
  std::string family;
};

// Normalizes so that v1 < v2 lexicographically (sides follow their words).
ExchangePair normalize_pair(ExchangePair p);

// Comparison key ignoring the family tag.
bool same_pair(const ExchangePair& a, const ExchangePair& b);
bool pair_less(const ExchangePair& a, const ExchangePair& b);

// The point of the cylinder boundary where the connecting arc of a pair
// attaches to D(v).  Defined for admissible words ending in L3/R3/L2/R2 by
// pulling the base attachment of the final letter back through the earlier
// letters (at each step the unique preimage half lying in the closed region
// of the prepended letter).
Angle attachment_angle(const Word& v);

// Circle shadow of the connecting arc: runs counterclockwise from the
// attachment of the L3/L2-ending word to the attachment of the other word.
Arc connecting_shadow(const Word& v1, const Word& v2);

// All pairs of length <= max_len, generated by growing the two length-one
// seed pairs letter by letter through the attachment-point recursion, with
// family tags assigned by matching the closed-form catalogs.
std::vector<ExchangePair> basic_pairs_catalog(std::size_t max_len);

// Independent oracle for the same set: pulls the two seed components back
// through angle doubling, tracking full cylinder arc sets plus the
// connecting arc's shadow, and pairing preimage cylinders by which preimage
// arc joins them.  Verifies at every level that the attachment points are
// endpoints of the tracked cylinder arcs.
std::vector<ExchangePair> pullback_pairs(std::size_t max_len);

// True iff the connecting arcs of all intermediate suffix pairs (lengths
// strictly between 1 and |v1|) avoid the given circle arc (the first
// unit-disc crossing of the ambient path, an arc inside [2/7, 9/28]).
// Fast paths: words with no common letters in equal positions, or whose
// only common letter is an initial L3, always pass.
bool is_exchange_for(const ExchangePair& p, const Arc& zeta_first_crossing);

// Validates the block form u_r a_r ... u_1 a_1 <-> u_r b_r ... u_1 b_1:
// each (a_i, b_i) must be a pair from the catalog and, for every block
// except the rightmost, some crossing word's cylinder must lie strictly
// between the cylinders of the block's two spellings.  Throws
// DecompositionFailed when no block decomposition exists at all; returns
// false when decompositions exist but none satisfies the betweenness
// requirement.
bool validate_zeta_eta_pair(const ExchangePair& p,
                            const std::vector<Word>& crossing_words);

// One component of the double-annulus intersection data at level `index`:
// the cyclic word list together with, for each word, the half-circle where
// the arc arriving at that word attaches (None when not recorded).
struct AnnulusCycle {
  int index = 0;
  char kind = 'A';  // 'A' = annulus chain, 'C' = central chain
  struct Entry {
    Word word;
    PairSide enter = PairSide::None;
  };
  std::vector<Entry> cycle;

  // Cycle map: the word listed after w (cyclically).  Throws OutOfCatalog
  // if w is not on the cycle.
  const Word& next_word(const Word& w) const;
};

// All cycle components at level i, 2 <= i <= 7: built by repeatedly lifting
// the level-2 base chains through the halving map, rerouting the pieces the
// ambient path crosses.  Throws OutOfCatalog outside the supported range.
std::vector<AnnulusCycle> annulus_cycles(int i);

}  // namespace capture

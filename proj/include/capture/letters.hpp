#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace capture {

// Labels of the seven Markov regions, with the central region refined into
// its two circle components: BC meets the lower unit circle, UC the upper,
// and C stands for the unrefined central letter (only legal as the last
// letter of a word).
//
// The enumeration order L1 < L2 < L3 < R1 < R2 < R3 < BC < UC < C is frozen;
// word comparison and enumeration order depend on it.
enum class Letter : std::uint8_t { L1, L2, L3, R1, R2, R3, BC, UC, C };

inline constexpr std::size_t kAlphabetSize = 9;

inline constexpr std::array<Letter, kAlphabetSize> kAllLetters = {
    Letter::L1, Letter::L2, Letter::L3, Letter::R1, Letter::R2,
    Letter::R3, Letter::BC, Letter::UC, Letter::C};

constexpr bool is_c_class(Letter x) {
  return x == Letter::C || x == Letter::BC || x == Letter::UC;
}

std::string_view letter_name(Letter x);

// Transition relation of the subshift.  C is terminal; the C-class letters
// BC/UC/C all sit in the same partition cell, so wherever the cell is a
// legal continuation all three spellings are returned (the canonical-form
// rule then restricts which spelling may appear where).
const std::vector<Letter>& successors(Letter x);

// True iff y may follow x, ignoring the canonical-form rule.
bool can_follow(Letter x, Letter y);

}  // namespace capture

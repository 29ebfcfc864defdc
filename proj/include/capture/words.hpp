#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "capture/letters.hpp"

namespace capture {

// A word is a plain letter sequence.  Lexicographic vector comparison agrees
// with the frozen letter order, so std::sort / operator< are used directly.
using Word = std::vector<Letter>;

// Greedy tokenizer for the textual form ("L3L2BCL1C" and so on).
//   'L' / 'R' must be followed by a digit 1-3, 'B' / 'U' by 'C',
//   a bare 'C' is the terminal letter.
// Throws WordParseError with the byte offset of the offending character.
Word parse_word(const std::string& text);

std::string word_text(const Word& w);

// Shorthand used pervasively in tests and catalogs.
inline Word W(const std::string& text) { return parse_word(text); }

// Canonical form: the unrefined letter C may only appear as the last letter.
bool is_canonical(const Word& w);

// Admissible = non-empty, canonical, and every adjacent pair lies in the
// transition relation.  Throws EmptyWord on empty input.
bool is_admissible(const Word& w);

Word concat(const Word& a, const Word& b);
Word repeat(const Word& a, std::size_t k);

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);

// Number of (possibly overlapping) start positions of f in w.
std::size_t count_factor_occurrences(const Word& w, const Word& f);

// First start position of f in w at or after `from`, or npos.
std::size_t find_factor(const Word& w, const Word& f, std::size_t from = 0);
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Emits every canonical admissible word of the given length, in
// lexicographic order, optionally restricted to a fixed prefix and/or a
// fixed final letter.  The callback returns false to stop early.
void for_each_word(std::size_t n, const std::optional<Word>& prefix,
                   std::optional<Letter> final_letter,
                   const std::function<bool(const Word&)>& fn);

std::vector<Word> enumerate_words(std::size_t n,
                                  const std::optional<Word>& prefix = {},
                                  std::optional<Letter> final_letter = {});

}  // namespace capture

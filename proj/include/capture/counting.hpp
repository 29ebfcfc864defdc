#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "capture/words.hpp"

namespace capture {

using BigInt = boost::multiprecision::cpp_int;

// Exact number of canonical admissible words of length n, optionally
// containing no occurrence of `avoid` as a factor and/or ending in a fixed
// letter.  Computed by a product of the subshift with a prefix-function
// factor tracker; integer arithmetic throughout.
BigInt count_words(std::size_t n, const std::optional<Word>& avoid = {},
                   std::optional<Letter> final_letter = {});

// Same, for every length 1..n in one sweep (cheap: one DP pass).
std::vector<BigInt> count_words_upto(std::size_t n,
                                     const std::optional<Word>& avoid = {},
                                     std::optional<Letter> final_letter = {});

// Reference implementation by exhaustive enumeration; for cross-checks.
BigInt count_words_brute(std::size_t n, const std::optional<Word>& avoid = {},
                         std::optional<Letter> final_letter = {});

// Least-squares fit of log(avoiding fraction) = log C + N log rho over the
// inclusive length range, plus the largest relative deviation of the fitted
// curve from the data.
struct DecayFit {
  double c = 0;
  double rho = 0;
  double max_rel_error = 0;
};
DecayFit fit_avoidance_decay(const Word& avoid, std::size_t n_lo, std::size_t n_hi);

}  // namespace capture

#include "capture/counting.hpp"

#include <array>
#include <cmath>
#include <cstddef>

#include "capture/errors.hpp"

namespace capture {

namespace {

constexpr std::size_t kNumLetters = kAlphabetSize;

// Prefix-function automaton for a single factor.  State = length of the
// longest pattern prefix that is a suffix of the text read so far; reaching
// |pattern| is a match.
struct FactorTracker {
  std::size_t m = 0;                      // pattern length; 0 = no pattern
  std::vector<std::array<std::size_t, kNumLetters>> delta;

  explicit FactorTracker(const std::optional<Word>& pattern) {
    if (!pattern) return;
    const Word& p = *pattern;
    if (p.empty()) throw EmptyWord("empty avoid factor");
    m = p.size();
    std::vector<std::size_t> fail(m, 0);
    for (std::size_t i = 1; i < m; ++i) {
      std::size_t k = fail[i - 1];
      while (k > 0 && p[k] != p[i]) k = fail[k - 1];
      if (p[k] == p[i]) ++k;
      fail[i] = k;
    }
    delta.resize(m);
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t a = 0; a < kNumLetters; ++a) {
        Letter y = static_cast<Letter>(a);
        std::size_t k = q;
        while (k > 0 && p[k] != y) k = fail[k - 1];
        if (p[k] == y) ++k;
        delta[q][a] = k;
      }
  }

  std::size_t states() const { return m == 0 ? 1 : m; }
  // next state, or npos on a match
  std::size_t step(std::size_t q, Letter y) const {
    if (m == 0) return 0;
    std::size_t k = delta[q][static_cast<std::size_t>(y)];
    return k == m ? npos : k;
  }
};

}  // namespace

std::vector<BigInt> count_words_upto(std::size_t n, const std::optional<Word>& avoid,
                                     std::optional<Letter> final_letter) {
  std::vector<BigInt> out(n + 1, BigInt(0));
  if (n == 0) return out;
  FactorTracker t(avoid);
  const std::size_t S = t.states();
  auto idx = [S](std::size_t letter, std::size_t q) { return letter * S + q; };

  // live[x][q]: C-free words ending in letter x with tracker state q.
  std::vector<BigInt> live(8 * S, BigInt(0)), next(8 * S);
  auto tally = [&](std::size_t len, const std::vector<BigInt>& v) {
    // words of this exact length: the C-free ones counted in v, plus the
    // one-step C extensions of length len (C is only legal as last letter).
    BigInt total = 0;
    for (std::size_t x = 0; x < 8; ++x)
      for (std::size_t q = 0; q < S; ++q) {
        const BigInt& c = v[idx(x, q)];
        if (c == 0) continue;
        Letter lx = static_cast<Letter>(x);
        if (!final_letter || lx == *final_letter) total += c;
        if (len + 1 <= n && can_follow(lx, Letter::C) &&
            (!final_letter || *final_letter == Letter::C) &&
            t.step(q, Letter::C) != npos)
          out[len + 1] += c;
      }
    out[len] += total;
  };

  // length 1 seeds
  for (std::size_t x = 0; x < 8; ++x) {
    std::size_t q = t.step(0, static_cast<Letter>(x));
    if (q != npos) live[idx(x, q)] = 1;
  }
  if ((!final_letter || *final_letter == Letter::C) &&
      t.step(0, Letter::C) != npos)
    out[1] += 1;  // the single-letter word "C"
  tally(1, live);

  for (std::size_t len = 2; len <= n; ++len) {
    std::fill(next.begin(), next.end(), BigInt(0));
    for (std::size_t x = 0; x < 8; ++x)
      for (std::size_t q = 0; q < S; ++q) {
        const BigInt& c = live[idx(x, q)];
        if (c == 0) continue;
        for (Letter y : successors(static_cast<Letter>(x))) {
          if (y == Letter::C) continue;
          std::size_t q2 = t.step(q, y);
          if (q2 == npos) continue;
          next[idx(static_cast<std::size_t>(y), q2)] += c;
        }
      }
    live.swap(next);
    tally(len, live);
  }
  return out;
}

BigInt count_words(std::size_t n, const std::optional<Word>& avoid,
                   std::optional<Letter> final_letter) {
  if (n == 0) return 0;
  return count_words_upto(n, avoid, final_letter)[n];
}

BigInt count_words_brute(std::size_t n, const std::optional<Word>& avoid,
                         std::optional<Letter> final_letter) {
  BigInt total = 0;
  for_each_word(n, {}, final_letter, [&](const Word& w) {
    if (!avoid || find_factor(w, *avoid) == npos) ++total;
    return true;
  });
  return total;
}

DecayFit fit_avoidance_decay(const Word& avoid, std::size_t n_lo, std::size_t n_hi) {
  auto all = count_words_upto(n_hi);
  auto avoiding = count_words_upto(n_hi, avoid);
  std::vector<double> xs, ys;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    double frac = avoiding[n].convert_to<double>() / all[n].convert_to<double>();
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::log(frac));
  }
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
  }
  double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  double inter = (sy - slope * sx) / k;
  DecayFit fit;
  fit.rho = std::exp(slope);
  fit.c = std::exp(inter);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double fitted = inter + slope * xs[i];
    double rel = std::abs(std::exp(fitted - ys[i]) - 1.0);
    fit.max_rel_error = std::max(fit.max_rel_error, rel);
  }
  return fit;
}

}  // namespace capture

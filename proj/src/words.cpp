#include "capture/words.hpp"

#include <algorithm>

#include "capture/errors.hpp"

namespace capture {

Word parse_word(const std::string& text) {
  Word out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == 'L' || c == 'R') {
      if (i + 1 >= n || text[i + 1] < '1' || text[i + 1] > '3')
        throw WordParseError(i + 1, std::string("expected digit 1-3 after '") + c + "'");
      int d = text[i + 1] - '1';
      out.push_back(static_cast<Letter>((c == 'L' ? 0 : 3) + d));
      i += 2;
    } else if (c == 'B' || c == 'U') {
      if (i + 1 >= n || text[i + 1] != 'C')
        throw WordParseError(i + 1, std::string("expected 'C' after '") + c + "'");
      out.push_back(c == 'B' ? Letter::BC : Letter::UC);
      i += 2;
    } else if (c == 'C') {
      out.push_back(Letter::C);
      i += 1;
    } else {
      throw WordParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

std::string word_text(const Word& w) {
  std::string s;
  s.reserve(w.size() * 2);
  for (Letter x : w) s += letter_name(x);
  return s;
}

bool is_canonical(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == Letter::C) return false;
  return true;
}

bool is_admissible(const Word& w) {
  if (w.empty()) throw EmptyWord();
  if (!is_canonical(w)) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!can_follow(w[i], w[i + 1])) return false;
  return true;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word repeat(const Word& a, std::size_t k) {
  Word out;
  out.reserve(a.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), a.begin(), a.end());
  return out;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

std::size_t find_factor(const Word& w, const Word& f, std::size_t from) {
  if (f.empty() || f.size() > w.size()) return npos;
  for (std::size_t i = from; i + f.size() <= w.size(); ++i)
    if (std::equal(f.begin(), f.end(), w.begin() + i)) return i;
  return npos;
}

std::size_t count_factor_occurrences(const Word& w, const Word& f) {
  if (f.empty()) throw EmptyWord("empty factor");
  std::size_t count = 0;
  for (std::size_t i = find_factor(w, f); i != npos; i = find_factor(w, f, i + 1))
    ++count;
  return count;
}

namespace {

// can `x` reach some word-end in exactly `k` more letters, with the final
// letter optionally pinned?  Tabulated up front so enumeration never walks
// into a dead branch.
struct Reach {
  // reach[k][letter]
  std::vector<std::array<bool, kAlphabetSize>> table;
  Reach(std::size_t n, std::optional<Letter> fin) {
    table.resize(n + 1);
    for (Letter x : kAllLetters) {
      bool ok = !fin || x == *fin;
      table[0][static_cast<std::size_t>(x)] = ok;
    }
    for (std::size_t k = 1; k <= n; ++k)
      for (Letter x : kAllLetters) {
        bool ok = false;
        for (Letter y : successors(x)) {
          if (y == Letter::C && k != 1) continue;  // C is final-only
          if (table[k - 1][static_cast<std::size_t>(y)]) { ok = true; break; }
        }
        table[k][static_cast<std::size_t>(x)] = ok;
      }
  }
  bool ok(Letter x, std::size_t k) const {
    return table[k][static_cast<std::size_t>(x)];
  }
};

bool extend(Word& w, std::size_t n, const Reach& reach,
            const std::function<bool(const Word&)>& fn) {
  if (w.size() == n) return fn(w);
  const std::size_t left = n - w.size() - 1;
  for (Letter y : successors(w.back())) {
    if (y == Letter::C && left != 0) continue;
    if (!reach.ok(y, left)) continue;
    w.push_back(y);
    bool go = extend(w, n, reach, fn);
    w.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace

void for_each_word(std::size_t n, const std::optional<Word>& prefix,
                   std::optional<Letter> final_letter,
                   const std::function<bool(const Word&)>& fn) {
  if (n == 0) return;
  Reach reach(n, final_letter);
  if (prefix) {
    if (prefix->size() > n || !is_admissible(*prefix)) return;
    if (prefix->back() == Letter::C && prefix->size() != n) return;
    Word w = *prefix;
    if (!reach.ok(w.back(), n - w.size())) return;
    // verify the interior of the prefix too (is_admissible already did)
    extend(w, n, reach, fn);
    return;
  }
  Word w;
  for (Letter x : kAllLetters) {
    if (x == Letter::C && n != 1) continue;
    if (!reach.ok(x, n - 1)) continue;
    w.assign(1, x);
    if (!extend(w, n, reach, fn)) return;
  }
}

std::vector<Word> enumerate_words(std::size_t n, const std::optional<Word>& prefix,
                                  std::optional<Letter> final_letter) {
  std::vector<Word> out;
  for_each_word(n, prefix, final_letter, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace capture

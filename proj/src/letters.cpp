#include "capture/letters.hpp"

namespace capture {

std::string_view letter_name(Letter x) {
  switch (x) {
    case Letter::L1: return "L1";
    case Letter::L2: return "L2";
    case Letter::L3: return "L3";
    case Letter::R1: return "R1";
    case Letter::R2: return "R2";
    case Letter::R3: return "R3";
    case Letter::BC: return "BC";
    case Letter::UC: return "UC";
    case Letter::C:  return "C";
  }
  return "?";
}

const std::vector<Letter>& successors(Letter x) {
  using L = Letter;
  static const std::vector<Letter> r1r2 = {L::R1, L::R2};
  static const std::vector<Letter> r3c = {L::R3, L::BC, L::UC, L::C};
  static const std::vector<Letter> l2l3 = {L::L2, L::L3};
  static const std::vector<Letter> l1 = {L::L1};
  static const std::vector<Letter> none = {};
  switch (x) {
    case L::L1:
    case L::R1: return r1r2;
    case L::L2:
    case L::R2: return r3c;
    case L::L3:
    case L::R3: return l2l3;
    case L::BC:
    case L::UC: return l1;
    case L::C:  return none;
  }
  return none;
}

bool can_follow(Letter x, Letter y) {
  for (Letter s : successors(x))
    if (s == y) return true;
  return false;
}

}  // namespace capture

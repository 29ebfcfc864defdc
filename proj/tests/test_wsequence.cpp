#include "doctest.h"

#include <string>
#include <vector>

#include "capture/errors.hpp"
#include "capture/words.hpp"
#include "capture/wsequence.hpp"

using namespace capture;

namespace {

Angle A(long n, long d) { return Angle(Int(n), Int(d)); }

std::string T(const Word& w) { return word_text(w); }

Word prefix(const Word& w, std::size_t n) {
  REQUIRE(n <= w.size());
  return Word(w.begin(), w.begin() + n);
}

// Building blocks of the recursively defined word families.
const Word kA = W("L3L2R3L2R3");
const Word kB = W("L3L3L3L3L3");
const Word kC = W("L3L3L3L2C");
const Word kD = W("L3L3L3L2R3L2R3");
const Word kV0 = W("L3L2R3L3L2R3L2R3");
const Word kW0 = W("L3L2R3L3L3L3L3L3");
const Word kU0 = W("L3L2R3L3L2C");
const Word kT0 = W("L3L2R3L3L3L3L2R3L2R3");

// alpha is a string over {a,b}; alpha[k] picks the k-th recursion atom.
Word build_x(const std::string& alpha) {
  REQUIRE(!alpha.empty());
  Word v = alpha[0] == 'a' ? kV0 : kW0;
  Word t = kT0;
  Word u = kU0;
  for (std::size_t k = 1; k < alpha.size(); ++k) {
    const Word& atom = alpha[k] == 'a' ? kA : kB;
    u = concat(concat(v, t), kC);
    Word nv = concat(concat(v, t), atom);
    t = concat(concat(v, t), kD);
    v = nv;
  }
  return concat(v, u);
}

std::vector<std::string> all_alphas(std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      next.push_back(s + 'a');
      next.push_back(s + 'b');
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("in_U0 decides membership from prefixes") {
  CHECK(in_U0(Word{}) == Membership::Undecided);

  CHECK(in_U0(W("BC")) == Membership::In);
  CHECK(in_U0(W("BCL1R2C")) == Membership::In);
  CHECK(in_U0(W("BCL1R1R2C")) == Membership::In);

  CHECK(in_U0(W("UC")) == Membership::Out);
  CHECK(in_U0(W("UCL1R2C")) == Membership::Out);
  CHECK(in_U0(W("R1R2C")) == Membership::Out);
  CHECK(in_U0(W("R2C")) == Membership::Out);
  CHECK(in_U0(W("R3L2C")) == Membership::Out);
  CHECK(in_U0(W("L1R2C")) == Membership::Out);
  CHECK(in_U0(W("L2C")) == Membership::Out);
  CHECK(in_U0(W("C")) == Membership::Out);

  // Bare runs of L3 never decide membership.
  for (std::size_t k = 1; k <= 5; ++k)
    CHECK(in_U0(repeat(W("L3"), k)) == Membership::Undecided);

  // L3^k L2 with nothing after: decided only for odd k not of form 3i+1.
  auto bare = [](std::size_t k) { return concat(repeat(W("L3"), k), W("L2")); };
  CHECK(in_U0(bare(1)) == Membership::Undecided);
  CHECK(in_U0(bare(2)) == Membership::Undecided);
  CHECK(in_U0(bare(3)) == Membership::Out);
  CHECK(in_U0(bare(4)) == Membership::Undecided);
  CHECK(in_U0(bare(5)) == Membership::Out);
  CHECK(in_U0(bare(6)) == Membership::Undecided);
  CHECK(in_U0(bare(7)) == Membership::Undecided);

  // L3^k L2 BC...: the k = 3i+1 exclusion beats the even-k generator.
  auto bc = [](std::size_t k) { return concat(repeat(W("L3"), k), W("L2BC")); };
  CHECK(in_U0(bc(1)) == Membership::Out);
  CHECK(in_U0(bc(2)) == Membership::In);
  CHECK(in_U0(bc(3)) == Membership::Out);
  CHECK(in_U0(bc(4)) == Membership::Out);
  CHECK(in_U0(bc(5)) == Membership::Out);
  CHECK(in_U0(bc(6)) == Membership::In);
  CHECK(in_U0(bc(7)) == Membership::Out);

  // L3^k L2 followed by anything other than BC: in iff k = 3i+1.
  auto r3 = [](std::size_t k) { return concat(repeat(W("L3"), k), W("L2R3")); };
  CHECK(in_U0(r3(1)) == Membership::In);
  CHECK(in_U0(r3(2)) == Membership::Out);
  CHECK(in_U0(r3(3)) == Membership::Out);
  CHECK(in_U0(r3(4)) == Membership::In);
  CHECK(in_U0(r3(7)) == Membership::In);
  auto uc = [](std::size_t k) { return concat(repeat(W("L3"), k), W("L2UC")); };
  CHECK(in_U0(uc(1)) == Membership::In);
  CHECK(in_U0(uc(2)) == Membership::Out);
  auto cc = [](std::size_t k) { return concat(repeat(W("L3"), k), W("L2C")); };
  CHECK(in_U0(cc(1)) == Membership::In);
  CHECK(in_U0(cc(2)) == Membership::Out);
  CHECK(in_U0(cc(4)) == Membership::In);
}

TEST_CASE("scan head rules") {
  SUBCASE("BC head") {
    const WSeq s = w_sequences(W("BCL1R2C"));
    REQUIRE(s.wi.size() == 2);
    CHECK(T(s.wi[0]) == "BC");
    CHECK(T(s.wi[1]) == "BCL1R2C");
    CHECK(T(s.wpi[0]) == "L3");
    CHECK(T(s.wpi[1]) == "L3L2R3L3");
    CHECK(s.kinds == std::vector<int>{-1, 0});
    CHECK(s.ends == std::vector<std::size_t>{0, 3});
    CHECK(s.n == 1);
  }
  SUBCASE("four-fold L3 head") {
    const WSeq s = w_sequences(W("L3L3L3L3L2C"));
    REQUIRE(s.wi.size() == 2);
    CHECK(T(s.wi[0]) == "L3L3L3L3");
    CHECK(T(s.wpi[0]) == "L3");
    CHECK(s.kinds == std::vector<int>{-1, 0});
    CHECK(s.n == 1);
  }
  SUBCASE("double L3 head before BC") {
    const WSeq s = w_sequences(W("L3L3L2BCL1R2C"));
    REQUIRE(s.wi.size() == 2);
    CHECK(T(s.wi[0]) == "L3L3");
    CHECK(T(s.wpi[0]) == "L3");
    CHECK(s.kinds == std::vector<int>{-1, 0});
    CHECK(s.ends == std::vector<std::size_t>{1, 6});
    CHECK(s.n == 1);
  }
  SUBCASE("the single-letter word") {
    const WSeq s = w_sequences(W("C"));
    REQUIRE(s.wi.size() == 1);
    CHECK(T(s.wi[0]) == "C");
    CHECK(T(s.wpi[0]) == "L3");
    CHECK(s.kinds == std::vector<int>{0});
    CHECK(s.n == 0);
  }
}

TEST_CASE("base family words") {
  SUBCASE("v0 u0") {
    const Word w = concat(kV0, kU0);
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 2);
    CHECK(s.kinds == std::vector<int>{5, 0});
    CHECK(s.ends == std::vector<std::size_t>{8, 13});
    CHECK(T(s.wi[0]) == T(prefix(w, 9)));
    CHECK(T(s.wi[1]) == T(w));
    CHECK(T(s.wpi[0]) == "L3");
    CHECK(T(s.wpi[1]) == T(concat(kV0, W("L3L2R3L3L3L3"))));
    CHECK(s.n == 1);
  }
  SUBCASE("w0 u0") {
    const Word w = concat(kW0, kU0);
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 2);
    CHECK(s.kinds == std::vector<int>{5, 0});
    CHECK(s.ends == std::vector<std::size_t>{8, 13});
    CHECK(T(s.wpi[0]) == "L3L2R3L3L3L3");
    CHECK(T(s.wpi[1]) == T(concat(kW0, W("L3L2R3L3L3L3"))));
    CHECK(s.n == 1);
  }
}

TEST_CASE("first-stage family words, all four tails") {
  const Word x1 = build_x("aa");
  REQUIRE(x1.size() == 46);

  SUBCASE("aa") {
    const WSeq s = w_sequences(x1);
    REQUIRE(s.wi.size() == 4);
    CHECK(s.kinds == std::vector<int>{5, 5, 5, 0});
    CHECK(s.ends == std::vector<std::size_t>{8, 31, 43, 45});
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(T(s.wi[j]) == T(prefix(x1, s.ends[j] + 1)));
    CHECK(T(s.wpi[0]) == "L3");
    CHECK(T(s.wpi[1]) == T(prefix(x1, 24)));
    CHECK(T(s.wpi[2]) == T(concat(prefix(x1, 41), W("L2R3L3"))));
    CHECK(T(s.wpi[3]) == T(concat(prefix(x1, 41), W("L3L3L3L3L3"))));
    CHECK(s.n == 3);
  }
  SUBCASE("ab") {
    const Word x = build_x("ab");
    REQUIRE(x.size() == 46);
    const WSeq s = w_sequences(x);
    REQUIRE(s.wi.size() == 4);
    CHECK(s.kinds == std::vector<int>{5, 5, 5, 0});
    CHECK(s.ends == std::vector<std::size_t>{8, 31, 43, 45});
    CHECK(T(s.wpi[0]) == "L3");
    CHECK(T(s.wpi[1]) == T(prefix(x, 24)));
    CHECK(T(s.wpi[2]) == T(concat(prefix(x, 41), W("L2R3L3"))));
    CHECK(T(s.wpi[3]) == T(concat(prefix(x, 41), W("L3L3L3L3L3"))));
    CHECK(s.n == 3);
  }
  SUBCASE("ba") {
    const Word x = build_x("ba");
    REQUIRE(x.size() == 46);
    const WSeq s = w_sequences(x);
    REQUIRE(s.wi.size() == 4);
    CHECK(s.kinds == std::vector<int>{5, 5, 5, 0});
    CHECK(s.ends == std::vector<std::size_t>{8, 31, 43, 45});
    CHECK(T(s.wpi[0]) == "L3L2R3L3L3L3");
    CHECK(T(s.wpi[1]) == T(prefix(x, 29)));
    CHECK(T(s.wpi[2]) == T(concat(prefix(x, 41), W("L2R3L3"))));
    CHECK(T(s.wpi[3]) == T(concat(prefix(x, 41), W("L3L3L3L3L3"))));
    CHECK(s.n == 3);
  }
  SUBCASE("bb") {
    const Word x = build_x("bb");
    REQUIRE(x.size() == 46);
    const WSeq s = w_sequences(x);
    REQUIRE(s.wi.size() == 4);
    CHECK(s.ends == std::vector<std::size_t>{8, 31, 43, 45});
    CHECK(T(s.wpi[0]) == "L3L2R3L3L3L3");
    CHECK(T(s.wpi[1]) == T(prefix(x, 29)));
    CHECK(s.wpi[2].size() == 44);
    CHECK(s.wpi[3].size() == 46);
    CHECK(s.n == 3);
  }
}

TEST_CASE("second-stage family word") {
  const Word x2 = build_x("aaa");
  REQUIRE(x2.size() == 106);
  const WSeq s = w_sequences(x2);
  REQUIRE(s.wi.size() == 8);
  CHECK(s.kinds == std::vector<int>{5, 5, 5, 5, 5, 5, 5, 0});
  CHECK(s.ends ==
        std::vector<std::size_t>{8, 31, 43, 61, 84, 96, 103, 105});
  const std::vector<std::size_t> lens{1, 24, 44, 54, 77, 97, 104, 106};
  for (std::size_t j = 0; j < 8; ++j) CHECK(s.wpi[j].size() == lens[j]);
  CHECK(T(s.wpi[0]) == "L3");
  CHECK(T(s.wpi[1]) == T(prefix(x2, 24)));
  CHECK(T(s.wpi[2]) == T(concat(prefix(x2, 41), W("L2R3L3"))));
  CHECK(T(s.wpi[3]) == T(prefix(x2, 54)));
  CHECK(T(s.wpi[4]) == T(prefix(x2, 77)));
  CHECK(T(s.wpi[5]) == T(concat(prefix(x2, 94), W("L2R3L3"))));
  CHECK(T(s.wpi[6]) == T(concat(prefix(x2, 101), W("L2R3L3"))));
  CHECK(T(s.wpi[7]) == T(concat(prefix(x2, 101), W("L3L3L3L3L3"))));
  CHECK(s.n == 7);
}

TEST_CASE("constructed words exercising each case") {
  SUBCASE("plain central occurrence") {
    const Word w = W("L3L2R3L3L2BCL1R2C");
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 2);
    CHECK(s.kinds == std::vector<int>{1, 0});
    CHECK(s.ends == std::vector<std::size_t>{5, 8});
    CHECK(T(s.wi[0]) == T(prefix(w, 6)));
    CHECK(T(s.wpi[0]) == "L3L2R3L3L3L3");
    CHECK(s.wpi[1].size() == 9);
    CHECK(s.wpi[1].back() == Letter::L3);
    CHECK(s.n == 1);
  }
  SUBCASE("central occurrence preceded by blocks") {
    const Word w = W("L3L2R3L3L2UCL1R2BCL1R2C");
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 3);
    CHECK(s.kinds == std::vector<int>{1, 1, 0});
    CHECK(s.ends == std::vector<std::size_t>{8, 8, 11});
    CHECK(T(s.wi[0]) == T(prefix(w, 9)));
    CHECK(T(s.wi[1]) == T(prefix(w, 9)));
    CHECK(T(s.wpi[0]) == "L3L2R3L3L3L3");
    CHECK(T(s.wpi[1]) == "L3L2R3L3L2R3");
    CHECK(s.n == 2);
  }
  SUBCASE("odd-position upper-central letter") {
    const Word w = W("L3L2R3L3L3L2UCL1R2C");
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 3);
    CHECK(s.kinds == std::vector<int>{5, 2, 0});
    CHECK(s.ends == std::vector<std::size_t>{4, 6, 9});
    CHECK(T(s.wpi[0]) == "L3");
    CHECK(T(s.wi[1]) == T(prefix(w, 7)));
    CHECK(T(s.wpi[1]) == "L3L2R3L3L3L2R3");
    CHECK(s.wpi[2].size() == 10);
    CHECK(s.wpi[2].back() == Letter::L3);
    CHECK(s.n == 2);
  }
  SUBCASE("upper-central letter after a lower one") {
    const Word w = W("L3L2R3L3L2BCL1R2UCL1R2C");
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 3);
    CHECK(s.kinds == std::vector<int>{1, 3, 0});
    CHECK(s.ends == std::vector<std::size_t>{5, 8, 11});
    CHECK(T(s.wi[1]) == T(prefix(w, 9)));
    CHECK(T(s.wpi[1]) == "L3L2R3L3L2BCL1R2BC");
    CHECK(s.n == 2);
  }
  SUBCASE("doubled R1 before the lower-central letter") {
    const Word w = W("L3L2R3L3L2BCL1R1R1R2BCL1R2C");
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 3);
    CHECK(s.kinds == std::vector<int>{1, 4, 0});
    CHECK(s.ends == std::vector<std::size_t>{5, 10, 13});
    CHECK(T(s.wi[1]) == T(prefix(w, 11)));
    CHECK(T(s.wpi[1]) == T(concat(prefix(w, 10), W("R3L2R3L3"))));
    CHECK(s.n == 2);
  }
  SUBCASE("single R1 before the lower-central letter") {
    const Word w = W("BCL1R2BCL1R1R2BCL1R2C");
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 4);
    CHECK(s.kinds == std::vector<int>{-1, 4, 4, 0});
    CHECK(s.ends == std::vector<std::size_t>{0, 3, 7, 10});
    CHECK(T(s.wi[1]) == "BCL1R2BC");
    CHECK(T(s.wpi[1]) == "L3L2R3L3");
    CHECK(T(s.wi[2]) == T(prefix(w, 8)));
    CHECK(T(s.wpi[2]) == "BCL1R2R3");
    CHECK(s.n == 3);
  }
  SUBCASE("string with a double-L3 terminal piece") {
    const Word w = concat(concat(kA, kA), W("L3L2R3L3L3L2C"));
    REQUIRE(w.size() == 17);
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 2);
    CHECK(s.kinds == std::vector<int>{5, 0});
    CHECK(s.ends == std::vector<std::size_t>{14, 16});
    CHECK(T(s.wpi[0]) == T(prefix(w, 11)));
    CHECK(s.n == 1);
  }
  SUBCASE("string with a quadruple-L3 terminal piece") {
    const Word w = concat(concat(kA, kA), W("L3L3L3L3L2C"));
    REQUIRE(w.size() == 16);
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 2);
    CHECK(s.kinds == std::vector<int>{5, 0});
    CHECK(s.ends == std::vector<std::size_t>{13, 15});
    CHECK(T(s.wpi[0]) == T(prefix(w, 11)));
    CHECK(s.n == 1);
  }
  SUBCASE("string whose lead piece carries a unit factor") {
    const Word w = concat(kV0, W("L3L2C"));
    REQUIRE(w.size() == 11);
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 2);
    CHECK(s.kinds == std::vector<int>{5, 0});
    CHECK(s.ends == std::vector<std::size_t>{8, 10});
    CHECK(T(s.wpi[0]) == "L3");
    CHECK(T(s.wpi[1]) == T(concat(kV0, W("L3L3L3"))));
    CHECK(s.n == 1);
  }
  SUBCASE("string starting from the head letter") {
    const Word w = W("BCL1R2R3L3L3L3L2C");
    const WSeq s = w_sequences(w);
    REQUIRE(s.wi.size() == 3);
    CHECK(s.kinds == std::vector<int>{-1, 5, 0});
    CHECK(s.ends == std::vector<std::size_t>{0, 6, 8});
    CHECK(T(s.wpi[1]) == "BCL1R2R3L2R3L3");
    CHECK(s.n == 2);
  }
}

TEST_CASE("prefix selectors") {
  CHECK(T(w1(W("BCL1R2C"))) == "BC");
  CHECK(T(w1(W("L3L3L3L3L2C"))) == "L3L3L3L3");
  CHECK(T(w1(concat(kV0, kU0))) == T(concat(kV0, W("L3"))));

  CHECK(T(w2_bc(W("BCL1R2C"))) == "BCL1R2C");
  CHECK(T(w2_bc(W("BCL1R2R3L2UCL1R2C"))) == "BCL1R2R3L2UC");
  CHECK_THROWS_AS((void)w2_bc(W("L3L2C")), FirstLetterNotBC);
  CHECK_THROWS_AS((void)w2_bc(W("BCC")), NotAdmissible);

  CHECK(T(w1_prime(concat(kV0, kU0))) == "L3");
  CHECK(T(w1_prime(concat(kW0, kU0))) == "L3L2R3L3L3L3");
  CHECK(T(w1_prime(W("BCL1R2C"))) == "L3");
  CHECK(T(w1_prime(W("L3L2C"))) == "L3L3L3");
}

TEST_CASE("adjacent words of equal length") {
  CHECK(T(adjacent_word(W("L3L2C"), Letter::L3)) == "L3L3L3");
  CHECK(T(adjacent_word(W("L3L2C"), Letter::R3)) == "L3L2R3");
  CHECK_THROWS_AS((void)adjacent_word(W("L3L2C"), Letter::BC),
                  AmbiguousPairing);

  // Every short central-ending word has a unique neighbour on each side on
  // which the probe lands, whenever one exists at all.
  std::size_t found = 0;
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const Word& w : enumerate_words(n, {}, Letter::C)) {
      for (Letter fin : {Letter::L3, Letter::R3}) {
        try {
          const Word adj = adjacent_word(w, fin);
          CHECK(adj.size() == w.size());
          CHECK(adj.back() == fin);
          CHECK(is_admissible(adj));
          ++found;
        } catch (const AmbiguousPairing&) {
        } catch (const EmptyCylinder&) {
        }
      }
    }
  }
  CHECK(found > 50);
}

TEST_CASE("angles of one-sided branch points") {
  CHECK(branch_angle(W("L3")) == A(5, 7));
  CHECK(branch_angle(W("L3L3")) == A(5, 14));
  CHECK(branch_angle(W("BC")) == A(5, 7));
  CHECK_THROWS_AS((void)branch_angle(Word{}), EmptyWord);
}

TEST_CASE("cut-parameter swap") {
  const Word w0u0 = concat(kW0, kU0);
  const Word x = W("L3L3");

  CHECK(T(w1_prime_x(w0u0, x)) == "L3");
  CHECK(T(w1_prime_x(w0u0, W("L3"))) == "L3L2R3L3L3L3");

  CHECK(in_Ux(w0u0, W("L3")) == Membership::Out);
  CHECK(in_Ux(w0u0, x) == Membership::Out);
  CHECK(in_Ux(concat(kV0, kU0), W("L3")) == Membership::In);
  CHECK(in_Ux(W("L3L2C"), W("L3L3L3")) == Membership::In);
  CHECK(in_Ux(W("L3L2R3"), W("L3")) == Membership::Undecided);
  CHECK(in_Ux(W("BC"), W("L3")) == Membership::In);
  CHECK(in_Ux(W("R3L2C"), W("L3")) == Membership::Out);

  const Word x1 = build_x("aa");
  CHECK(T(w1_prime_x(x1, x)) == "L3L2R3L3L3L3");
  CHECK(T(w1_prime_x(x1, W("L3"))) == "L3");
  CHECK(in_Ux(x1, W("L3")) == Membership::In);

  const WSeq s = w_sequences(x1, x);
  REQUIRE(s.wpi.size() == 4);
  CHECK(T(s.wpi[0]) == "L3L2R3L3L3L3");
  CHECK(T(s.wpi[1]) == T(concat(prefix(x1, 26), W("L3L3L3"))));
  CHECK(T(s.wpi[2]) == T(concat(prefix(x1, 36), W("L3"))));
  CHECK(T(s.wpi[3]) == T(concat(prefix(x1, 41), W("L3L3L3L3L3"))));

  // Passing the un-swapped branch word must reproduce the plain sequences.
  const WSeq plain = w_sequences(x1);
  const WSeq with_l3 = w_sequences(x1, W("L3"));
  REQUIRE(with_l3.wpi.size() == plain.wpi.size());
  for (std::size_t j = 0; j < plain.wpi.size(); ++j)
    CHECK(T(with_l3.wpi[j]) == T(plain.wpi[j]));
}

TEST_CASE("shift compatibility on straddle-free junctions") {
  // Prepends whose scan dies at the junction: blocks in even pairs, an even
  // number of L letters, no central letters, and an R3 against the join.
  // The trailing block padding matters: a prepend ending in a bare L3L2R3
  // unit would be absorbed into the lead factor of a string starting right
  // at the junction (see the absorption test below).
  std::vector<Word> us;
  for (std::size_t j = 1; j <= 12; ++j)
    for (std::size_t i = 1; i <= 4; ++i)
      us.push_back(concat(repeat(W("L3L2R3"), j), repeat(W("L2R3"), 2 * i)));

  std::vector<Word> ys{concat(kV0, kU0), concat(kW0, kU0), build_x("aa"),
                       build_x("ab"),    build_x("ba"),    build_x("bb"),
                       kU0,              W("L3L2C"),       build_x("aaa"),
                       build_x("aab"),   build_x("aba"),   build_x("baa")};

  std::size_t instances = 0;
  for (const Word& y : ys) {
    const WSeq sy = w_sequences(y);
    for (const Word& u : us) {
      const Word w = concat(u, y);
      REQUIRE(is_admissible(w));
      const WSeq sw = w_sequences(w);
      REQUIRE(sw.wi.size() == sy.wi.size());
      REQUIRE(sw.wi[0].size() > u.size());
      CHECK(sw.kinds == sy.kinds);
      CHECK(sw.n == sy.n);
      bool ok = true;
      for (std::size_t j = 0; j < sy.wi.size(); ++j) {
        ok &= sw.ends[j] == sy.ends[j] + u.size();
        ok &= sw.wi[j] == concat(u, sy.wi[j]);
        ok &= sw.wpi[j] == concat(u, sy.wpi[j]);
      }
      CHECK(ok);
      ++instances;
    }
  }
  CHECK(instances >= 500);
}

TEST_CASE("lead-unit prepends are absorbed by a junction string") {
  // A string occurrence is parsed from its earliest start, so unit triples
  // placed directly before a word whose scan opens with a string fold into
  // that string's lead factor.  The deletion in the surgery then reaches
  // back through the prepended units: the result is not the shifted one.
  const Word y = concat(kV0, kU0);
  for (std::size_t j = 1; j <= 3; ++j) {
    const Word u = repeat(W("L3L2R3"), j);
    const WSeq s = w_sequences(concat(u, y));
    REQUIRE(s.wi.size() == 2);
    CHECK(s.ends[0] == 3 * j + 8);
    CHECK(T(s.wi[0]) == T(concat(u, prefix(y, 9))));
    CHECK(T(s.wpi[0]) == "L3");
  }
}

TEST_CASE("family laws across all tails") {
  for (std::size_t r = 0; r <= 5; ++r) {
    for (const std::string& alpha : all_alphas(r + 1)) {
      const Word x = build_x(alpha);
      const WSeq s = w_sequences(x);
      REQUIRE(!s.wpi.empty());
      const std::string expect =
          alpha[0] == 'a' ? "L3" : "L3L2R3L3L3L3";
      CHECK(T(s.wpi[0]) == expect);
      CHECK(s.n == (std::size_t{2} << r) - 1);
      CHECK(s.wi.back() == x);
      CHECK(s.kinds.back() == 0);
    }
  }
}

TEST_CASE("structural sequence invariants") {
  std::vector<Word> corpus;
  for (std::size_t r = 0; r <= 3; ++r)
    for (const std::string& alpha : all_alphas(r + 1))
      corpus.push_back(build_x(alpha));
  corpus.push_back(concat(kV0, W("L3L2C")));
  corpus.push_back(concat(concat(kA, kA), W("L3L3L3L3L2C")));

  for (const Word& w : corpus) {
    const WSeq s = w_sequences(w);
    REQUIRE(!s.wi.empty());
    CHECK(s.n == s.wi.size() - 1);
    for (std::size_t j = 0; j < s.wi.size(); ++j) {
      CHECK(is_admissible(s.wi[j]));
      CHECK(is_admissible(s.wpi[j]));
      const Letter fin = s.wpi[j].back();
      CHECK((fin == Letter::L3 || fin == Letter::R3 || fin == Letter::BC));
      CHECK(is_prefix(s.wi[j], w));
      if (j + 1 < s.wi.size()) {
        CHECK(s.wi[j].size() < s.wi[j + 1].size());
        CHECK(is_prefix(s.wi[j], s.wi[j + 1]));
        CHECK(is_prefix(s.wi[j], s.wpi[j + 1]));
        CHECK(s.ends[j] < s.ends[j + 1]);
      }
    }
  }
}

TEST_CASE("scan totality over short admissible words") {
  std::size_t scanned = 0;
  for (std::size_t n = 4; n <= 8; ++n) {
    for (const Word& prefix_word : {W("L3L2"), W("BC")}) {
      if (prefix_word.size() > n) continue;
      for (const Word& w : enumerate_words(n, prefix_word, Letter::C)) {
        try {
          const WSeq s = w_sequences(w);
          CHECK(s.kinds.back() == 0);
          CHECK(s.wi.back() == w);
          for (const Word& p : s.wpi) {
            CHECK(is_admissible(p));
            const Letter fin = p.back();
            CHECK(
                (fin == Letter::L3 || fin == Letter::R3 || fin == Letter::BC));
          }
          ++scanned;
        } catch (const NotInU0&) {
        }
      }
    }
  }
  CHECK(scanned > 30);
}

TEST_CASE("scan error reporting") {
  CHECK_THROWS_AS((void)w_sequences(Word{}), NoCaseMatched);
  CHECK_THROWS_AS((void)w_sequences(W("L3L3")), NoCaseMatched);
  CHECK_THROWS_AS((void)w1(W("L3L2R3")), NoCaseMatched);
  CHECK_THROWS_AS((void)w_sequences(W("L3L2BCL1R2C")), NotInU0);
  CHECK_THROWS_AS((void)w_sequences(W("R1R2C")), NotInU0);
  CHECK_THROWS_AS((void)w_sequences(W("L3C")), NotAdmissible);
}

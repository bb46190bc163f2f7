#include "doctest.h"
#include "opk/perm.hpp"
#include "opk/tmap.hpp"

using namespace opk;

TEST_CASE("composition is 'p after q'") {
  // worked 4-element example: (2314) after (4321) = (4132)
  Permutation p({2, 3, 1, 4}), q({4, 3, 2, 1});
  CHECK(compose(p, q) == Permutation({4, 1, 3, 2}));

  // left action: (p*q)(i) = p(q(i)) exhaustively on S_3
  for (const auto& a : all_permutations(3))
    for (const auto& b : all_permutations(3)) {
      Permutation c = compose(a, b);
      for (int i = 1; i <= 3; ++i) CHECK(c.image(i) == a.image(b.image(i)));
    }
}

TEST_CASE("inverse and identity") {
  for (const auto& p : all_permutations(4)) {
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
  }
  CHECK(Permutation(0).is_identity());
  CHECK(Permutation(1).is_identity());
}

TEST_CASE("parity is a homomorphism and odd on transpositions") {
  for (const auto& p : all_permutations(4))
    for (const auto& q : all_permutations(4))
      CHECK(parity(compose(p, q)) == (parity(p) + parity(q)) % 2);
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) CHECK(parity(transposition(5, a, b)) == 1);
}

TEST_CASE("block sums") {
  Permutation tau({2, 1});
  Permutation id1(1);
  CHECK(block_sum({tau, id1}) == Permutation({2, 1, 3}));
  CHECK(block_sum({id1, tau}) == Permutation({1, 3, 2}));
  CHECK(parity(block_sum({tau, tau})) == 0);
  CHECK(block_sum({}) == Permutation(0));
}

TEST_CASE("tmap worked example") {
  Permutation sigma({3, 1, 2});  // 1->3, 2->1, 3->2
  Permutation t = tmap({2, 1, 3}, sigma);
  CHECK(t == Permutation({4, 5, 6, 1, 2, 3}));  // (1,4)(2,5)(3,6)
  CHECK(inversion_count(t) == 9);
  CHECK(parity(t) == 1);
  // an involution here: blocks 1+2 and 3 swap as equal-length groups
  CHECK(compose(t, t).is_identity());
}

TEST_CASE("tmap fixes nothing under identity and collapses unit blocks") {
  CHECK(tmap({2, 1, 3}, Permutation(3)).is_identity());
  for (const auto& s : all_permutations(4)) CHECK(tmap({1, 1, 1, 1}, s) == s);
}

TEST_CASE("tmap agrees with the block-concatenation oracle") {
  // all shapes with k <= 4 blocks of size 0..3, every sigma in S_k
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> alpha(k, 0);
    while (true) {
      for (const auto& s : all_permutations(k))
        CHECK(tmap(alpha, s) == tmap_block_oracle(alpha, s));
      int i = 0;
      while (i < k && alpha[i] == 3) alpha[i++] = 0;
      if (i == k) break;
      ++alpha[i];
    }
  }
}

TEST_CASE("tmap is a homomorphism for uniform shapes") {
  for (int c = 1; c <= 3; ++c) {
    CompositionShape alpha(3, c);
    for (const auto& s : all_permutations(3))
      for (const auto& t : all_permutations(3))
        CHECK(compose(tmap(alpha, s), tmap(alpha, t)) ==
              tmap(alpha, compose(s, t)));
  }
}

TEST_CASE("empty blocks are legal") {
  Permutation sigma({2, 1});
  CHECK(tmap({0, 2}, sigma) == Permutation({1, 2}));
  CHECK(tmap({2, 0}, sigma) == Permutation({1, 2}));
}

TEST_CASE("labels round-trip") {
  for (const auto& p : all_permutations(4))
    CHECK(perm_from_label(p.label()) == p);
}

// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "garside/typeb.hpp"

using namespace garside;

namespace {
SignedPermutation sp(std::initializer_list<int> w) {
  return SignedPermutation(std::vector<int>(w));
}
}  // namespace

TEST_CASE("window basics") {
  auto id3 = SignedPermutation::identity(3);
  CHECK(id3.is_identity());
  CHECK(id3.str() == "(1,2,3)");
  CHECK(SignedPermutation::longest(3) == sp({-1, -2, -3}));
  CHECK(sp({2, -1, 3})(2) == -1);
  CHECK(sp({2, -1, 3})(-2) == 1);
  CHECK_THROWS(SignedPermutation(std::vector<int>{1, 1}));
  CHECK_THROWS(SignedPermutation(std::vector<int>{2, 3}));
  CHECK_THROWS(SignedPermutation(std::vector<int>{0, 1}));
}

TEST_CASE("composition and inverse") {
  // (sigma tau)(i) = sigma(tau(i))
  auto s0 = SignedPermutation::generator(2, 0);  // (-1,2)
  auto s1 = SignedPermutation::generator(2, 1);  // (2,1)
  CHECK(s0 == sp({-1, 2}));
  CHECK(s1 == sp({2, 1}));
  CHECK(s0 * s1 == sp({2, -1}));
  CHECK(s1 * s0 == sp({-2, 1}));
  CHECK(s0 * s0 == SignedPermutation::identity(2));
  // the published rank-2 table: (2,-1)^-1 = (-2,1), all others self-inverse
  CHECK(sp({2, -1}).inverse() == sp({-2, 1}));
  CHECK(sp({-2, 1}).inverse() == sp({2, -1}));
  for (auto w : {sp({1, 2}), sp({1, -2}), sp({-1, 2}), sp({-1, -2}),
                 sp({2, 1}), sp({-2, -1})})
    CHECK(w.inverse() == w);
}

TEST_CASE("length and descent sets of the published rank-2 table") {
  struct Row {
    SignedPermutation w;
    uint32_t des, des_inv;
  };
  const Row rows[] = {
      {sp({1, 2}), 0u, 0u},         {sp({1, -2}), 2u, 2u},
      {sp({-1, 2}), 1u, 1u},        {sp({-1, -2}), 3u, 3u},
      {sp({2, 1}), 2u, 2u},         {sp({2, -1}), 2u, 1u},
      {sp({-2, 1}), 1u, 2u},        {sp({-2, -1}), 1u, 1u},
  };
  for (const auto& r : rows) {
    CHECK(r.w.descent_set() == r.des);
    CHECK(r.w.inverse().descent_set() == r.des_inv);
  }
}

TEST_CASE("length is inversions plus negative-entry weight") {
  CHECK(SignedPermutation::identity(4).length() == 0);
  CHECK(SignedPermutation::longest(3).length() == 9);  // n^2
  CHECK(sp({2, 1}).length() == 1);
  CHECK(sp({-2, 1}).length() == 2);
  CHECK(sp({1, -2}).length() == 3);
  CHECK(sp({-1, -2}).length() == 4);
  // descent i iff right multiplication by s_i shortens
  for (const auto& w : all_signed_permutations(3)) {
    for (int i = 0; i < 3; ++i) {
      auto shorter =
          (w * SignedPermutation::generator(3, i)).length() < w.length();
      CHECK(((w.descent_set() >> i) & 1u) == (shorter ? 1u : 0u));
    }
  }
}

TEST_CASE("canonical enumeration") {
  auto all2 = all_signed_permutations(2);
  REQUIRE(all2.size() == 8);
  CHECK(all2.front() == SignedPermutation::identity(2));
  CHECK(all2.back() == SignedPermutation::longest(2));
  for (size_t i = 1; i < all2.size(); ++i)
    CHECK(all2[i - 1].length() <= all2[i].length());
  CHECK(all_signed_permutations(3).size() == 48);
  CHECK(all_signed_permutations(0).size() == 1);
}

TEST_CASE("parse and print") {
  CHECK(SignedPermutation::parse("(2,-1,3)") == sp({2, -1, 3}));
  CHECK(SignedPermutation::parse("2 -1 3") == sp({2, -1, 3}));
  CHECK(sp({2, -1, 3}).str() == "(2,-1,3)");
  CHECK_THROWS(SignedPermutation::parse("(1,1)"));
}

TEST_CASE("standardization of signed words") {
  CHECK(std_word({4, -2}) == SignedWord({2, -1}));
  CHECK(std_word({-2, 3, 1}) == SignedWord({-2, 3, 1}));
  CHECK(std_word({5, -2, 4}) == SignedWord({3, -1, 2}));
  CHECK(std_word({}) == SignedWord({}));
  CHECK(perm_of_word({5, -2, 4}) == sp({3, -1, 2}));
}

TEST_CASE("shift and dec") {
  CHECK(shift_word({3, -1, 2}, 2) == SignedWord({5, -3, 4}));
  CHECK(shift_letter(-1, 4) == -5);
  CHECK(dec_letter(5, 3) == 4);
  CHECK(dec_letter(-5, 3) == -4);
  CHECK(dec_letter(2, 3) == 2);
  CHECK(dec_set(0b1011u, 2) == 0b111u);
  CHECK(dec_set(0b1011u, 0) == 0b101u);
  CHECK(dec_set(0u, 1) == 0u);
}

TEST_CASE("del on the published example") {
  SignedWord u{-1, 2, -4, -5, 3, 6};
  CHECK(del_word(u, 1) == SignedWord({1, -3, -4, 2, 5}));
  CHECK(del_word(u, 2) == SignedWord({-1, -3, -4, 2, 5}));
  CHECK(del_word(u, 3) == SignedWord({-1, 2, -3, -4, 5}));
  CHECK(del_word(u, 4) == SignedWord({-1, 2, -4, 3, 5}));
  CHECK(del_word(u, 5) == SignedWord({-1, 2, -4, 3, 5}));
  CHECK(del_word(u, 6) == SignedWord({-1, 2, -4, -5, 3}));
}

TEST_CASE("sign on the published example") {
  SignedWord u{-1, 2, -4, -5, 3, 6};
  CHECK(sign_letter(u, 1) == 0);
  CHECK(sign_letter(u, 2) == 0);
  CHECK(sign_letter(u, 3) == 1);
  CHECK(sign_letter(u, 4) == -1);
  CHECK(sign_letter(u, 5) == 0);
  CHECK(sign_letter(u, 6) == 0);
}

TEST_CASE("sign values are determined by descent membership") {
  // lemma: for j < n, sign is +1/-1/0 according to {j-1, j} vs Des(sigma);
  // at j = n it is -1 iff n-1 is a descent
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : all_signed_permutations(n)) {
      uint32_t des = s.descent_set();
      const SignedWord& w = s.window();
      for (int j = 1; j <= n; ++j) {
        int got = sign_letter(w, std::abs(w[j - 1]));
        int want;
        if (j == n) {
          want = (des >> (n - 1)) & 1u ? -1 : 0;
        } else {
          bool a = (des >> (j - 1)) & 1u, b = (des >> j) & 1u;
          want = a && b ? -1 : (!a && !b ? 1 : 0);
        }
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("embedding into a larger rank") {
  CHECK(embed(sp({2, -1}), 4) == sp({2, -1, 3, 4}));
  CHECK(embed(SignedPermutation::identity(0), 2) ==
        SignedPermutation::identity(2));
}

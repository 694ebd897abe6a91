// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "garside/normal.hpp"

using namespace garside;

namespace {
SignedPermutation sp(std::initializer_list<int> w) {
  return SignedPermutation(std::vector<int>(w));
}
}  // namespace

TEST_CASE("normal pair predicate") {
  WindowModel m(2);
  auto id = m.identity();
  auto delta = SignedPermutation::longest(2);
  for (const auto& s : all_signed_permutations(2)) {
    // a trivial first factor is never normal against a nontrivial second
    if (!s.is_identity()) CHECK_FALSE(is_normal_pair(m, id, s));
    // the longest element absorbs every left descent
    CHECK(is_normal_pair(m, delta, s));
    // (s, Delta) is normal only when s = Delta
    CHECK(is_normal_pair(m, s, delta) == (s == delta));
  }
}

TEST_CASE("normalize pair") {
  WindowModel m(2);
  auto a = m.generator(0), b = m.generator(1);
  normalize_pair(m, a, b);
  CHECK(a == sp({2, -1}));
  CHECK(b.is_identity());
  // already-normal input is untouched
  auto c = SignedPermutation::longest(2), d = m.generator(0);
  normalize_pair(m, c, d);
  CHECK(c == SignedPermutation::longest(2));
  CHECK(d == m.generator(0));
}

TEST_CASE("left normal form on worked examples") {
  WindowModel m2(2);
  auto nf = left_normal_form(m2, parse_braid_word("1 1 0 1 0 0"));
  REQUIRE(nf.size() == 2);
  CHECK(nf[0] == sp({-1, -2}));  // Delta
  CHECK(nf[1] == sp({-2, 1}));
  nf = left_normal_form(m2, parse_braid_word("1 1 0 1 0 1"));
  REQUIRE(nf.size() == 3);
  CHECK(nf[0] == sp({-1, -2}));
  CHECK(nf[1] == sp({2, 1}));
  CHECK(nf[2] == sp({2, 1}));
  // Delta * Delta stays [Delta, Delta]
  nf = left_normal_form(m2, parse_braid_word("0 1 0 1 0 1 0 1"));
  REQUIRE(nf.size() == 2);
  CHECK(nf[0] == SignedPermutation::longest(2));
  CHECK(nf[1] == SignedPermutation::longest(2));
  CHECK(left_normal_form(m2, {}).empty());
  nf = left_normal_form(m2, parse_braid_word("1 0"));
  REQUIRE(nf.size() == 1);
  CHECK(nf[0] == sp({-2, 1}));
  WindowModel m3(3);
  nf = left_normal_form(m3, parse_braid_word("0"));
  REQUIRE(nf.size() == 1);
  CHECK(nf[0] == m3.generator(0));
  CHECK(garside_length(m2, parse_braid_word("1 1 0 1 0 0")) == 2);
  CHECK_THROWS_AS(left_normal_form(m2, {0, 3}), std::invalid_argument);
}

TEST_CASE("braid word parsing") {
  CHECK(parse_braid_word("1 1 0") == std::vector<int>({1, 1, 0}));
  CHECK(parse_braid_word("").empty());
  CHECK_THROWS(parse_braid_word("1 x 0"));
}

namespace {

template <class Model>
typename Model::Element word_image(const Model& m,
                                   const std::vector<int>& w) {
  auto e = m.identity();
  for (int i : w) e = m.multiply(e, m.generator(i));
  return e;
}

// Random positive word rewriting: apply defining relations at random spots.
std::vector<int> rewrite_word(std::vector<int> w, const CoxeterGraph& g,
                              std::mt19937_64& rng, int steps) {
  for (int step = 0; step < steps; ++step) {
    if (w.size() < 2) break;
    size_t pos = rng() % (w.size() - 1);
    int a = w[pos], b = w[pos + 1];
    if (a == b) continue;
    int ord = g.order(a, b);
    // check the alternating run a b a b ... of length ord starting at pos
    if (pos + ord > w.size()) continue;
    bool run = true;
    for (int i = 0; i < ord; ++i)
      if (w[pos + i] != (i % 2 == 0 ? a : b)) run = false;
    if (!run) continue;
    for (int i = 0; i < ord; ++i) w[pos + i] = (i % 2 == 0 ? b : a);
  }
  return w;
}

template <class Model>
void check_normal_form_properties(const Model& model, const CoxeterGraph& g,
                                  int words, int max_len, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < words; ++trial) {
    std::vector<int> w(rng() % (max_len + 1));
    for (int& x : w) x = static_cast<int>(rng() % g.rank());
    auto nf = left_normal_form(model, w);
    // factors multiply back to the image of the word
    auto prod = model.identity();
    long total = 0;
    for (const auto& f : nf) {
      CHECK_FALSE(f == model.identity());
      prod = model.multiply(prod, f);
      total += model.length(f);
    }
    CHECK(prod == word_image(model, w));
    CHECK(total == static_cast<long>(w.size()));
    // adjacent factors are left-weighted
    for (size_t i = 0; i + 1 < nf.size(); ++i)
      CHECK(is_normal_pair(model, nf[i], nf[i + 1]));
    // idempotence: renormalizing the factor word changes nothing
    std::vector<int> flat;
    // rebuild a word from the normal form by greedy descent extraction
    for (auto f : nf) {
      while (!(f == model.identity())) {
        uint32_t des = model.descents(model.inverse(f));
        int i = 0;
        while (!(des & (1u << i))) ++i;
        flat.push_back(i);
        f = model.multiply(model.generator(i), f);
      }
    }
    CHECK(left_normal_form(model, flat) == nf);
    // invariance under the defining relations
    auto w2 = rewrite_word(w, g, rng, 8);
    CHECK(left_normal_form(model, w2) == nf);
  }
}

}  // namespace

TEST_CASE("normal form properties on random words") {
  check_normal_form_properties(WindowModel(2), CoxeterGraph(TypeTag{'B', 2}),
                               200, 14, 101);
  check_normal_form_properties(WindowModel(4), CoxeterGraph(TypeTag{'B', 4}),
                               200, 20, 102);
  check_normal_form_properties(RootModel(CoxeterGraph(TypeTag{'A', 3})),
                               CoxeterGraph(TypeTag{'A', 3}), 200, 16, 103);
  check_normal_form_properties(RootModel(CoxeterGraph(TypeTag{'D', 4})),
                               CoxeterGraph(TypeTag{'D', 4}), 200, 20, 104);
  check_normal_form_properties(DihedralModel(7),
                               CoxeterGraph(TypeTag{'I', 7}), 100, 18, 105);
}

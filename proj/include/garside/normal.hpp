// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_NORMAL_HPP
#define GARSIDE_NORMAL_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/groups.hpp"

namespace garside {

// Left Garside normal form in a spherical braid monoid. Simple braids are
// identified with group elements; a pair (a, b) is left-weighted iff every
// left descent of b is a right descent of a, i.e. Des(b^-1) <= Des(a).

template <class Model>
bool is_normal_pair(const Model& model, const typename Model::Element& a,
                    const typename Model::Element& b) {
  uint32_t need = model.descents(model.inverse(b));
  uint32_t have = model.descents(a);
  return (need & ~have) == 0;
}

// Slides letters from the head of b to the tail of a until the pair is
// left-weighted. Preserves the product a * b.
template <class Model>
void normalize_pair(const Model& model, typename Model::Element& a,
                    typename Model::Element& b) {
  for (;;) {
    uint32_t movable = model.descents(model.inverse(b)) & ~model.descents(a);
    if (movable == 0) return;
    int i = 0;
    while (!(movable & (1u << i))) ++i;
    auto s = model.generator(i);
    a = model.multiply(a, s);
    b = model.multiply(s, b);
  }
}

// Left normal form of the positive braid word given by generator indices.
// Factors multiply left to right to the image of the word; identity factors
// are dropped, so the empty word yields an empty factor list.
template <class Model>
std::vector<typename Model::Element> left_normal_form(
    const Model& model, const std::vector<int>& letters) {
  using Element = typename Model::Element;
  std::vector<Element> f;
  f.reserve(letters.size());
  for (int i : letters) {
    if (i < 0 || i >= model.rank())
      throw std::invalid_argument("braid letter out of range: " +
                                  std::to_string(i));
    f.push_back(model.generator(i));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i) {
      if (!is_normal_pair(model, f[i], f[i + 1])) {
        normalize_pair(model, f[i], f[i + 1]);
        changed = true;
      }
    }
    // drop trivial factors created by complete slides
    std::vector<Element> kept;
    kept.reserve(f.size());
    auto id = model.identity();
    for (auto& e : f)
      if (!(e == id)) kept.push_back(std::move(e));
    f = std::move(kept);
  }
  return f;
}

template <class Model>
long garside_length(const Model& model, const std::vector<int>& letters) {
  return static_cast<long>(left_normal_form(model, letters).size());
}

// Whitespace-separated generator indices, e.g. "1 1 0 1 0 1".
inline std::vector<int> parse_braid_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> letters;
  int v;
  while (in >> v) letters.push_back(v);
  if (!in.eof()) throw std::invalid_argument("cannot parse braid word");
  return letters;
}

}  // namespace garside

#endif  // GARSIDE_NORMAL_HPP

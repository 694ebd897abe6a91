// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_GROUPS_HPP
#define GARSIDE_GROUPS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "garside/coxeter.hpp"
#include "garside/roots.hpp"
#include "garside/typeb.hpp"

namespace garside {

// Raised instead of attempting an enumeration that would exceed the caller's
// element budget; carries the size estimate for the refusal message.
struct ResourceLimit : std::runtime_error {
  Integer estimate;
  explicit ResourceLimit(const std::string& what, Integer est)
      : std::runtime_error(what), estimate(std::move(est)) {}
};

// The three concrete group models share one informal interface:
//   Element, rank(), identity(), generator(i), multiply(a, b), inverse(a),
//   length(a), descents(a). Elements are totally ordered by operator<.

// Hyperoctahedral model: type B_n on signed-permutation windows.
struct WindowModel {
  using Element = SignedPermutation;
  int n;

  explicit WindowModel(int n_) : n(n_) {}
  int rank() const { return n; }
  Element identity() const { return SignedPermutation::identity(n); }
  Element generator(int i) const { return SignedPermutation::generator(n, i); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  long length(const Element& a) const { return a.length().get_si(); }
  uint32_t descents(const Element& a) const { return a.descent_set(); }
};

// Reflection model: elements are signed permutations of the positive roots.
// img[r] = +-(r' + 1) records the image of positive root r.
struct RootModel {
  using Element = std::vector<int32_t>;
  RootTables t;

  explicit RootModel(RootTables tables) : t(std::move(tables)) {}
  explicit RootModel(const CoxeterGraph& g) : t(build_root_tables(g)) {}

  int rank() const { return t.rank; }

  Element identity() const {
    Element e(t.n_positive);
    for (int r = 0; r < t.n_positive; ++r) e[r] = r + 1;
    return e;
  }
  Element generator(int s) const {
    Element e(t.n_positive);
    for (int r = 0; r < t.n_positive; ++r) e[r] = t.action[s][r];
    return e;
  }
  // (ab)(beta) = a(b(beta))
  Element multiply(const Element& a, const Element& b) const {
    Element e(t.n_positive);
    for (int r = 0; r < t.n_positive; ++r) {
      int32_t v = b[r];
      e[r] = v > 0 ? a[v - 1] : -a[-v - 1];
    }
    return e;
  }
  Element inverse(const Element& a) const {
    Element e(t.n_positive);
    for (int r = 0; r < t.n_positive; ++r) {
      int32_t v = a[r];
      if (v > 0)
        e[v - 1] = r + 1;
      else
        e[-v - 1] = -(r + 1);
    }
    return e;
  }
  // Length = number of positive roots sent to negative ones.
  long length(const Element& a) const {
    long len = 0;
    for (int32_t v : a)
      if (v < 0) ++len;
    return len;
  }
  // i is a right descent iff the simple root of s_i (root index i) goes
  // negative.
  uint32_t descents(const Element& a) const {
    uint32_t mask = 0;
    for (int s = 0; s < t.rank; ++s)
      if (a[s] < 0) mask |= 1u << s;
    return mask;
  }
};

// Dihedral model for I_2(m): rotations rot(a) = r^a and reflections
// ref(a) = r^a s, with generators s = ref(0) and ref(m - 1) (so their
// product is the rotation r).
struct DihedralModel {
  // (is_reflection, a mod m)
  using Element = std::pair<int, int>;
  int m;
  std::vector<int> rot_len, ref_len;

  explicit DihedralModel(int m_) : m(m_) {
    if (m < 2) throw std::invalid_argument("dihedral order");
    rot_len.assign(m, -1);
    ref_len.assign(m, -1);
    // breadth-first from the identity
    std::vector<Element> frontier{Element{0, 0}};
    rot_len[0] = 0;
    for (int depth = 0; !frontier.empty(); ++depth) {
      std::vector<Element> next;
      for (const Element& e : frontier)
        for (int i = 0; i < 2; ++i) {
          Element f = multiply(e, generator(i));
          int& slot = f.first ? ref_len[f.second] : rot_len[f.second];
          if (slot < 0) {
            slot = depth + 1;
            next.push_back(f);
          }
        }
      frontier = std::move(next);
    }
  }

  int rank() const { return 2; }
  Element identity() const { return {0, 0}; }
  Element generator(int i) const {
    if (i == 0) return {1, 0};
    if (i == 1) return {1, m - 1};
    throw std::invalid_argument("generator index");
  }
  Element multiply(const Element& a, const Element& b) const {
    // rot(x)rot(y) = rot(x+y), rot(x)ref(y) = ref(x+y),
    // ref(x)rot(y) = ref(x-y), ref(x)ref(y) = rot(x-y)
    int x = a.second, y = b.second;
    int v = a.first ? x - y : x + y;
    v = ((v % m) + m) % m;
    return {a.first ^ b.first, v};
  }
  Element inverse(const Element& a) const {
    if (a.first) return a;
    return {0, (m - a.second) % m};
  }
  long length(const Element& a) const {
    return a.first ? ref_len[a.second] : rot_len[a.second];
  }
  uint32_t descents(const Element& a) const {
    uint32_t mask = 0;
    long len = length(a);
    for (int i = 0; i < 2; ++i)
      if (length(multiply(a, generator(i))) < len) mask |= 1u << i;
    return mask;
  }
};

// Breadth-first enumeration of the whole group, returned in the canonical
// order (length, then element comparison). Refuses up front when the known
// group order exceeds the cap.
template <class Model>
std::vector<typename Model::Element> enumerate_group(const Model& model,
                                                     const Integer& order_hint,
                                                     const Integer& cap) {
  if (cap > 0 && order_hint > cap)
    throw ResourceLimit("group order " + order_hint.get_str() +
                            " exceeds element cap " + cap.get_str(),
                        order_hint);
  using Element = typename Model::Element;
  std::set<Element> seen;
  std::vector<Element> frontier{model.identity()};
  seen.insert(model.identity());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& e : frontier)
      for (int i = 0; i < model.rank(); ++i) {
        Element f = model.multiply(e, model.generator(i));
        if (seen.insert(f).second) next.push_back(f);
      }
    frontier = std::move(next);
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [&](const Element& a, const Element& b) {
                     long la = model.length(a), lb = model.length(b);
                     if (la != lb) return la < lb;
                     return a < b;
                   });
  return out;
}

}  // namespace garside

#endif  // GARSIDE_GROUPS_HPP

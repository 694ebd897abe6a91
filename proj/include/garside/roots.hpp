// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_ROOTS_HPP
#define GARSIDE_ROOTS_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/coxeter.hpp"
#include "garside/integer.hpp"

namespace garside {

// Root system in the basis of simple roots, over an exact coefficient ring
// (Integer for the crystallographic types, GoldenNumber when an edge label
// is 5). Only the combinatorial shadow - how each generator permutes the
// positive roots - is needed downstream; it is exported as RootTables.
template <class Ring>
struct RootSystem {
  int rank = 0;
  // cartan[s][t] = <alpha_t, alpha_s^vee>; the reflection s changes only
  // coordinate s of a root: v_s -> v_s - sum_t cartan[s][t] v_t.
  std::vector<std::vector<Ring>> cartan;
  std::vector<std::vector<Ring>> positive;  // the first `rank` are simple

  std::vector<Ring> reflect(int s, const std::vector<Ring>& v) const {
    Ring acc{};
    for (int t = 0; t < rank; ++t) acc = acc + cartan[s][t] * v[t];
    std::vector<Ring> w = v;
    w[s] = w[s] - acc;
    return w;
  }
};

// Integer-coded action of generators on positive roots. action[s][r] is
// +-(r' + 1) where s maps positive root r to +-(positive root r'); the
// sign is negative exactly when r is the simple root of s.
struct RootTables {
  int rank = 0;
  int n_positive = 0;
  std::string ring_name;  // "Integer" or "GoldenNumber"
  std::vector<std::vector<int32_t>> action;
};

namespace detail {

template <class Ring>
Ring cartan_entry(int m, bool heavy_side);

template <>
inline Integer cartan_entry<Integer>(int m, bool heavy_side) {
  switch (m) {
    case 2:
      return 0;
    case 3:
      return -1;
    case 4:
      return heavy_side ? -2 : -1;
    case 6:
      return heavy_side ? -3 : -1;
    default:
      throw std::invalid_argument(
          "edge order not realizable over Integer: " + std::to_string(m));
  }
}

template <>
inline GoldenNumber cartan_entry<GoldenNumber>(int m, bool heavy_side) {
  if (m == 5) return -GoldenNumber::phi();
  return GoldenNumber(cartan_entry<Integer>(m, heavy_side), 0);
}

template <class Ring>
std::string root_key(const std::vector<Ring>& v) {
  std::string k;
  for (const auto& x : v) {
    k += ring_str(x);
    k += '|';
  }
  return k;
}

// 1 all coordinates >= 0, -1 all <= 0, 0 mixed (impossible for roots).
template <class Ring>
int root_orientation(const std::vector<Ring>& v) {
  bool has_pos = false, has_neg = false;
  for (const auto& x : v) {
    int s = ring_sign(x);
    if (s > 0) has_pos = true;
    if (s < 0) has_neg = true;
  }
  if (has_pos && has_neg) return 0;
  return has_pos ? 1 : -1;
}

}  // namespace detail

template <class Ring>
RootSystem<Ring> build_root_system(const CoxeterGraph& g) {
  RootSystem<Ring> rs;
  const int n = g.rank();
  rs.rank = n;
  rs.cartan.assign(n, std::vector<Ring>(n, Ring{}));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) {
        rs.cartan[s][t] = Ring(2);
        continue;
      }
      int m = g.order(s, t);
      // On asymmetric edges the lower-indexed node takes the heavy entry;
      // the opposite choice gives the dual system, same Coxeter group.
      rs.cartan[s][t] = detail::cartan_entry<Ring>(m, s < t);
    }

  std::map<std::string, int> index;
  for (int s = 0; s < n; ++s) {
    std::vector<Ring> e(n, Ring{});
    e[s] = Ring(1);
    index[detail::root_key(e)] = s;
    rs.positive.push_back(std::move(e));
  }
  for (size_t head = 0; head < rs.positive.size(); ++head) {
    for (int s = 0; s < n; ++s) {
      std::vector<Ring> w = rs.reflect(s, rs.positive[head]);
      int orient = detail::root_orientation(w);
      if (orient == 0)
        throw std::logic_error("root closure: mixed-sign image");
      if (orient < 0) continue;
      std::string k = detail::root_key(w);
      if (!index.count(k)) {
        index[k] = static_cast<int>(rs.positive.size());
        rs.positive.push_back(std::move(w));
      }
    }
  }
  int expected = positive_root_count(g.tag());
  if (static_cast<int>(rs.positive.size()) != expected)
    throw std::logic_error("root closure: wrong count for " + g.tag().str());
  return rs;
}

template <class Ring>
RootTables root_tables_from(const RootSystem<Ring>& rs,
                            const std::string& ring_name) {
  RootTables t;
  t.rank = rs.rank;
  t.n_positive = static_cast<int>(rs.positive.size());
  t.ring_name = ring_name;
  std::map<std::string, int> index;
  for (int r = 0; r < t.n_positive; ++r)
    index[detail::root_key(rs.positive[r])] = r;
  t.action.assign(rs.rank, std::vector<int32_t>(t.n_positive, 0));
  for (int s = 0; s < rs.rank; ++s)
    for (int r = 0; r < t.n_positive; ++r) {
      std::vector<Ring> w = rs.reflect(s, rs.positive[r]);
      if (detail::root_orientation(w) > 0) {
        t.action[s][r] = index.at(detail::root_key(w)) + 1;
      } else {
        std::vector<Ring> neg = w;
        for (auto& x : neg) x = -x;
        t.action[s][r] = -(index.at(detail::root_key(neg)) + 1);
      }
    }
  return t;
}

// Builds the combinatorial tables, choosing the coefficient ring from the
// edge labels.
inline RootTables build_root_tables(const CoxeterGraph& g) {
  bool golden = false;
  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < g.rank(); ++j) {
      int m = g.order(i, j);
      if (m == 5) golden = true;
      if (m != 1 && m != 2 && m != 3 && m != 4 && m != 5 && m != 6)
        throw std::invalid_argument(
            "no exact root model for edge order " + std::to_string(m));
    }
  if (golden)
    return root_tables_from(build_root_system<GoldenNumber>(g),
                            "GoldenNumber");
  return root_tables_from(build_root_system<Integer>(g), "Integer");
}

}  // namespace garside

#endif  // GARSIDE_ROOTS_HPP

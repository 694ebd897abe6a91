// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_COXETER_HPP
#define GARSIDE_COXETER_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/integer.hpp"

namespace garside {

// Spherical type label, e.g. B4, E6, I7 (the dihedral group I_2(7)).
struct TypeTag {
  char letter = 'A';
  int param = 1;  // rank, except for I where it is the dihedral order m

  int rank() const { return letter == 'I' ? 2 : param; }

  std::string str() const { return std::string(1, letter) + std::to_string(param); }

  static TypeTag parse(const std::string& s) {
    if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
      throw std::invalid_argument("bad type tag: " + s);
    TypeTag t;
    t.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    try {
      size_t pos = 0;
      t.param = std::stoi(s.substr(1), &pos);
      if (pos + 1 != s.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad type tag: " + s);
    }
    t.check();
    return t;
  }

  void check() const {
    switch (letter) {
      case 'A':
      case 'B':
        if (param < 1) throw std::invalid_argument("rank must be >= 1");
        break;
      case 'D':
        if (param < 2) throw std::invalid_argument("type D needs rank >= 2");
        break;
      case 'E':
        if (param < 6 || param > 8)
          throw std::invalid_argument("type E has ranks 6, 7, 8");
        break;
      case 'F':
        if (param != 4) throw std::invalid_argument("type F has rank 4");
        break;
      case 'H':
        if (param != 3 && param != 4)
          throw std::invalid_argument("type H has ranks 3, 4");
        break;
      case 'I':
        if (param < 2)
          throw std::invalid_argument("dihedral order must be >= 2");
        break;
      default:
        throw std::invalid_argument("unknown type letter");
    }
  }
};

// Coxeter matrix of a spherical type; m(i, j) is the order of s_i s_j.
class CoxeterGraph {
 public:
  explicit CoxeterGraph(TypeTag tag) : tag_(tag), rank_(tag.rank()) {
    m_.assign(rank_, std::vector<int>(rank_, 2));
    for (int i = 0; i < rank_; ++i) m_[i][i] = 1;
    auto edge = [&](int i, int j, int ord) { m_[i][j] = m_[j][i] = ord; };
    int n = rank_;
    switch (tag.letter) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
        break;
      case 'B':
        // s_0 is the sign-change generator of the window model.
        if (n >= 2) edge(0, 1, 4);
        for (int i = 1; i + 1 < n; ++i) edge(i, i + 1, 3);
        break;
      case 'D':
        // Fork: nodes 0 and 1 both attach to node 2; 2-3-...-(n-1) is a path.
        if (n == 2) break;  // A1 x A1
        edge(0, 2, 3);
        edge(1, 2, 3);
        for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, 3);
        break;
      case 'E':
        // Chain 0-2-3-4-... with node 1 hanging off node 3.
        edge(0, 2, 3);
        edge(1, 3, 3);
        for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, 3);
        break;
      case 'F':
        edge(0, 1, 3);
        edge(1, 2, 4);
        edge(2, 3, 3);
        break;
      case 'H':
        edge(0, 1, 5);
        for (int i = 1; i + 1 < n; ++i) edge(i, i + 1, 3);
        break;
      case 'I':
        edge(0, 1, tag.param);
        break;
    }
  }

  const TypeTag& tag() const { return tag_; }
  int rank() const { return rank_; }
  int order(int i, int j) const { return m_[i][j]; }

  bool crystallographic() const {
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (m_[i][j] != 1 && m_[i][j] != 2 && m_[i][j] != 3 && m_[i][j] != 4 &&
            m_[i][j] != 6)
          return false;
    return true;
  }

 private:
  TypeTag tag_;
  int rank_;
  std::vector<std::vector<int>> m_;
};

// |W| for the spherical types.
inline Integer group_order(const TypeTag& t) {
  auto fact = [](int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  switch (t.letter) {
    case 'A':
      return fact(t.param + 1);
    case 'B':
      return int_pow(Integer(2), t.param) * fact(t.param);
    case 'D':
      return int_pow(Integer(2), t.param - 1) * fact(t.param);
    case 'E':
      if (t.param == 6) return 51840;
      if (t.param == 7) return 2903040;
      return 696729600;
    case 'F':
      return 1152;
    case 'H':
      return t.param == 3 ? 120 : 14400;
    case 'I':
      return 2 * t.param;
  }
  throw std::logic_error("group_order");
}

// Number of positive roots (= length of the longest element).
inline int positive_root_count(const TypeTag& t) {
  switch (t.letter) {
    case 'A':
      return t.param * (t.param + 1) / 2;
    case 'B':
      return t.param * t.param;
    case 'D':
      return t.param * (t.param - 1);
    case 'E':
      if (t.param == 6) return 36;
      if (t.param == 7) return 63;
      return 120;
    case 'F':
      return 24;
    case 'H':
      return t.param == 3 ? 15 : 60;
    case 'I':
      return t.param;
  }
  throw std::logic_error("positive_root_count");
}

}  // namespace garside

#endif  // GARSIDE_COXETER_HPP

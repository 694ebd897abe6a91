// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_TYPEB_HPP
#define GARSIDE_TYPEB_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/integer.hpp"

namespace garside {

// Signed permutation of {1..n} in window notation: w[i-1] is the image of i,
// and sigma(-i) = -sigma(i). This is the hyperoctahedral group, i.e. the
// Coxeter group of type B_n with s_0 the sign change in position 1 and s_i
// (i >= 1) the adjacent transposition.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window) : w_(std::move(window)) {
    validate();
  }

  static SignedPermutation identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return SignedPermutation(std::move(w));
  }

  // s_0 negates position 1; s_i swaps positions i and i+1.
  static SignedPermutation generator(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("generator index");
    auto g = identity(n);
    if (i == 0)
      g.w_[0] = -1;
    else
      std::swap(g.w_[i - 1], g.w_[i]);
    return g;
  }

  // The longest element (-1, -2, ..., -n); Garside element of the braid
  // monoid of type B_n.
  static SignedPermutation longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = -(i + 1);
    return SignedPermutation(std::move(w));
  }

  int size() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }

  int operator()(int i) const {
    if (i == 0 || std::abs(i) > size())
      throw std::out_of_range("SignedPermutation::operator()");
    return i > 0 ? w_[i - 1] : -w_[-i - 1];
  }

  // (sigma * tau)(i) = sigma(tau(i))
  friend SignedPermutation operator*(const SignedPermutation& s,
                                     const SignedPermutation& t) {
    if (s.size() != t.size())
      throw std::invalid_argument("SignedPermutation: size mismatch");
    std::vector<int> w(s.size());
    for (int i = 1; i <= s.size(); ++i) w[i - 1] = s(t(i));
    return SignedPermutation(std::move(w));
  }

  SignedPermutation inverse() const {
    std::vector<int> w(size());
    for (int i = 1; i <= size(); ++i) {
      int v = w_[i - 1];
      if (v > 0)
        w[v - 1] = i;
      else
        w[-v - 1] = -i;
    }
    return SignedPermutation(std::move(w));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (w_[i] != i + 1) return false;
    return true;
  }

  // Coxeter length: inversions plus the sum of the absolute values of the
  // negative window entries.
  Integer length() const {
    Integer len = 0;
    for (int i = 0; i < size(); ++i) {
      if (w_[i] < 0) len += -w_[i];
      for (int j = i + 1; j < size(); ++j)
        if (w_[i] > w_[j]) len += 1;
    }
    return len;
  }

  // Right descents as a bitmask over {0, .., n-1}: bit i is set iff
  // sigma(i) > sigma(i+1), reading sigma(0) = 0.
  uint32_t descent_set() const {
    uint32_t mask = 0;
    int prev = 0;
    for (int i = 0; i < size(); ++i) {
      if (prev > w_[i]) mask |= 1u << i;
      prev = w_[i];
    }
    return mask;
  }

  friend bool operator==(const SignedPermutation& a,
                         const SignedPermutation& b) {
    return a.w_ == b.w_;
  }
  friend bool operator!=(const SignedPermutation& a,
                         const SignedPermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const SignedPermutation& a,
                        const SignedPermutation& b) {
    return a.w_ < b.w_;
  }

  // "(2,-1,3)"
  std::string str() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < size(); ++i) {
      if (i) out << ",";
      out << w_[i];
    }
    out << ")";
    return out.str();
  }

  // Accepts "(2,-1,3)", "2,-1,3", "2 -1 3".
  static SignedPermutation parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (c != '(' && c != ')') s += (c == ',' ? ' ' : c);
    std::istringstream in(s);
    std::vector<int> w;
    int v;
    while (in >> v) w.push_back(v);
    if (!in.eof())
      throw std::invalid_argument("cannot parse window: " + text);
    return SignedPermutation(std::move(w));
  }

 private:
  void validate() const {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
      int a = std::abs(v);
      if (a < 1 || a > size() || seen[a - 1])
        throw std::invalid_argument("invalid window: " + str_unchecked());
      seen[a - 1] = true;
    }
  }
  std::string str_unchecked() const {
    std::ostringstream out;
    for (int v : w_) out << v << " ";
    return out.str();
  }
  std::vector<int> w_;
};

// All of the hyperoctahedral group of rank n, ordered by (length, window).
inline std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;
  std::vector<SignedPermutation> out;
  out.reserve(size_t(1) << n);
  do {
    for (uint32_t signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> w = base;
      for (int i = 0; i < n; ++i)
        if (signs & (1u << i)) w[i] = -w[i];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end(),
            [](const SignedPermutation& a, const SignedPermutation& b) {
              Integer la = a.length(), lb = b.length();
              if (la != lb) return la < lb;
              return a.window() < b.window();
            });
  return out;
}

// ---- Signed words ----
//
// A signed word is a sequence of nonzero integers with pairwise distinct
// absolute values; a window is the special case where those absolute values
// are exactly 1..k. Words carry the combinatorics behind the Hopf-algebra
// operations: standardization, shifting, and letter deletion.

using SignedWord = std::vector<int>;

inline void check_word(const SignedWord& u) {
  std::vector<int> abs_vals;
  for (int v : u) {
    if (v == 0) throw std::invalid_argument("signed word: zero letter");
    abs_vals.push_back(std::abs(v));
  }
  std::sort(abs_vals.begin(), abs_vals.end());
  if (std::adjacent_find(abs_vals.begin(), abs_vals.end()) != abs_vals.end())
    throw std::invalid_argument("signed word: repeated absolute value");
}

// Standardization: the unique increasing bijection from the set of absolute
// values onto 1..k, applied preserving signs.
inline SignedWord std_word(const SignedWord& u) {
  check_word(u);
  std::vector<int> abs_vals;
  abs_vals.reserve(u.size());
  for (int v : u) abs_vals.push_back(std::abs(v));
  std::vector<int> sorted = abs_vals;
  std::sort(sorted.begin(), sorted.end());
  SignedWord out;
  out.reserve(u.size());
  for (int v : u) {
    int r = int(std::lower_bound(sorted.begin(), sorted.end(), std::abs(v)) -
                sorted.begin()) +
            1;
    out.push_back(v > 0 ? r : -r);
  }
  return out;
}

inline SignedPermutation perm_of_word(const SignedWord& u) {
  SignedWord s = std_word(u);
  return SignedPermutation(std::move(s));
}

// shift_k: add k to the magnitude, preserving sign.
inline int shift_letter(int v, int k) { return v > 0 ? v + k : v - k; }

inline SignedWord shift_word(const SignedWord& u, int k) {
  SignedWord out;
  out.reserve(u.size());
  for (int v : u) out.push_back(shift_letter(v, k));
  return out;
}

// dec_k: close the gap left by removing magnitude k.
inline int dec_letter(int v, int k) {
  if (v > k) return v - 1;
  if (v < -k) return v + 1;
  return v;
}

inline SignedWord dec_word(const SignedWord& u, int k) {
  SignedWord out;
  out.reserve(u.size());
  for (int v : u) out.push_back(dec_letter(v, k));
  return out;
}

// Descent-set analogue of dec: remove k, pull larger values down by one.
inline uint32_t dec_set(uint32_t mask, int k) {
  uint32_t low = mask & ((1u << k) - 1);
  uint32_t high = mask >> (k + 1);
  return low | (high << k);
}

// del_i: delete the letter of magnitude i, then dec_i the rest.
inline SignedWord del_word(const SignedWord& u, int i) {
  SignedWord out;
  bool found = false;
  for (int v : u) {
    if (std::abs(v) == i) {
      found = true;
      continue;
    }
    out.push_back(dec_letter(v, i));
  }
  if (!found) throw std::invalid_argument("del_word: magnitude absent");
  return out;
}

// eps(a, b) = +1 if a < b else -1, with an implicit -infinity sentinel
// after the last letter and 0 before the first.
namespace detail {
inline int eps(long a, long b) { return a < b ? 1 : -1; }
constexpr long kMinusInf = std::numeric_limits<long>::min();
}  // namespace detail

// sign_i(u) = (eps(prev, u_j) + eps(u_j, next)) / 2 where u_j is the letter
// of magnitude i; takes values in {-1, 0, 1}.
inline int sign_letter(const SignedWord& u, int i) {
  int j = -1;
  for (size_t p = 0; p < u.size(); ++p)
    if (std::abs(u[p]) == i) {
      j = int(p);
      break;
    }
  if (j < 0) throw std::invalid_argument("sign_letter: magnitude absent");
  long prev = j > 0 ? u[j - 1] : 0;
  long next = j + 1 < int(u.size()) ? long(u[j + 1]) : detail::kMinusInf;
  return (detail::eps(prev, u[j]) + detail::eps(u[j], next)) / 2;
}

// Embed a window of rank n into rank m >= n, fixing n+1..m.
inline SignedPermutation embed(const SignedPermutation& s, int m) {
  if (m < s.size()) throw std::invalid_argument("embed: rank too small");
  std::vector<int> w = s.window();
  for (int i = s.size(); i < m; ++i) w.push_back(i + 1);
  return SignedPermutation(std::move(w));
}

}  // namespace garside

#endif  // GARSIDE_TYPEB_HPP

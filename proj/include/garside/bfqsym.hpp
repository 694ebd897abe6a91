// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_BFQSYM_HPP
#define GARSIDE_BFQSYM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "garside/integer.hpp"
#include "garside/matrix.hpp"
#include "garside/typeb.hpp"

namespace garside {

// The Hopf algebra on signed permutations: rational linear combinations of
// windows, with the shuffle product, the convolution product, the coproduct,
// the endomorphism Phi and the derivation (the del/sign calculus).

// Finitely supported Q-linear combination of signed permutations. Keys may
// mix ranks in principle; the algebraic operations require homogeneous
// input and check it.
class PermVector {
 public:
  using Map = std::map<SignedPermutation, Rational>;

  PermVector() = default;
  static PermVector basis(SignedPermutation s) {
    PermVector v;
    v.terms_[std::move(s)] = 1;
    return v;
  }
  static PermVector zero() { return {}; }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const SignedPermutation& s, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_.emplace(s, c);
      return;
    }
    it->second += c;
    it->second.canonicalize();
    if (sgn(it->second) == 0) terms_.erase(it);
  }

  Rational coeff(const SignedPermutation& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend PermVector operator+(const PermVector& a, const PermVector& b) {
    PermVector r = a;
    for (const auto& [s, c] : b.terms_) r.add(s, c);
    return r;
  }
  friend PermVector operator-(const PermVector& a, const PermVector& b) {
    PermVector r = a;
    for (const auto& [s, c] : b.terms_) r.add(s, -c);
    return r;
  }
  friend PermVector operator*(const Rational& c, const PermVector& a) {
    PermVector r;
    for (const auto& [s, v] : a.terms_) r.add(s, c * v);
    return r;
  }
  friend bool operator==(const PermVector& a, const PermVector& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PermVector& a, const PermVector& b) {
    return !(a == b);
  }

  // Common rank of all terms; requires homogeneity. The zero vector has no
  // rank; callers pass the expected one where it matters.
  int rank() const {
    if (terms_.empty())
      throw std::logic_error("PermVector::rank: zero vector");
    int n = terms_.begin()->first.size();
    for (const auto& [s, c] : terms_)
      if (s.size() != n)
        throw std::logic_error("PermVector: non-homogeneous vector");
    return n;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      if (c != 1) out << c.get_str() << "*";
      out << s.str();
    }
    return out.str();
  }

 private:
  Map terms_;
};

// Linear combination of descent sets at a fixed rank.
using DescentVector = std::map<uint32_t, Rational>;

inline void descent_add(DescentVector& v, uint32_t d, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = v.find(d);
  if (it == v.end()) {
    v.emplace(d, c);
    return;
  }
  it->second += c;
  it->second.canonicalize();
  if (sgn(it->second) == 0) v.erase(it);
}

inline DescentVector descent_linear(const PermVector& v) {
  DescentVector out;
  for (const auto& [s, c] : v.terms()) descent_add(out, s.descent_set(), c);
  return out;
}

// ---- shuffle ----

// The X-shuffle of words: letters of u sit at the positions X (1-based,
// |X| = |u|), the letters of v, shifted by |u|, fill the rest.
inline SignedWord x_shuffle(const SignedWord& u, const SignedWord& v,
                            const std::vector<int>& X) {
  const int k = static_cast<int>(u.size());
  const int n = k + static_cast<int>(v.size());
  if (static_cast<int>(X.size()) != k)
    throw std::invalid_argument("x_shuffle: |X| must equal |u|");
  SignedWord out(n, 0);
  size_t ui = 0;
  for (int pos : X) {
    if (pos < 1 || pos > n || out[pos - 1] != 0)
      throw std::invalid_argument("x_shuffle: bad selector");
    out[pos - 1] = u[ui++];
  }
  size_t vi = 0;
  for (int p = 0; p < n; ++p)
    if (out[p] == 0) out[p] = shift_letter(v[vi++], k);
  return out;
}

namespace detail {
// All k-subsets of [1, n], each sorted ascending.
inline void for_each_subset(int n, int k,
                            const std::function<void(const std::vector<int>&)>&
                                fn) {
  std::vector<int> sel(k);
  for (int i = 0; i < k; ++i) sel[i] = i + 1;
  if (k == 0) {
    fn(sel);
    return;
  }
  for (;;) {
    fn(sel);
    int i = k - 1;
    while (i >= 0 && sel[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
}
}  // namespace detail

inline PermVector shuffle(const SignedPermutation& s,
                          const SignedPermutation& t) {
  PermVector out;
  const SignedWord& u = s.window();
  const SignedWord& v = t.window();
  detail::for_each_subset(
      s.size() + t.size(), s.size(), [&](const std::vector<int>& X) {
        out.add(SignedPermutation(x_shuffle(u, v, X)), 1);
      });
  return out;
}

inline PermVector shuffle(const PermVector& a, const PermVector& b) {
  PermVector out;
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      PermVector st = shuffle(s, t);
      for (const auto& [w, c] : st.terms()) out.add(w, cs * ct * c);
    }
  return out;
}

// ---- convolution (the product dual to the coproduct) ----

// sigma * tau = sum over windows u of rank k+l whose standardized prefix of
// length k is w(sigma) and standardized suffix is w(tau). The prefix is
// determined by the choice of the k absolute values it uses.
inline PermVector convolution(const SignedPermutation& s,
                              const SignedPermutation& t) {
  PermVector out;
  const int k = s.size(), l = t.size(), n = k + l;
  detail::for_each_subset(n, k, [&](const std::vector<int>& S) {
    std::vector<bool> used(n + 1, false);
    for (int v : S) used[v] = true;
    std::vector<int> comp;
    for (int v = 1; v <= n; ++v)
      if (!used[v]) comp.push_back(v);
    SignedWord w(n);
    for (int j = 0; j < k; ++j) {
      int img = s.window()[j];
      w[j] = img > 0 ? S[img - 1] : -S[-img - 1];
    }
    for (int j = 0; j < l; ++j) {
      int img = t.window()[j];
      w[k + j] = img > 0 ? comp[img - 1] : -comp[-img - 1];
    }
    out.add(SignedPermutation(std::move(w)), 1);
  });
  return out;
}

inline PermVector convolution(const PermVector& a, const PermVector& b) {
  PermVector out;
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      PermVector st = convolution(s, t);
      for (const auto& [w, c] : st.terms()) out.add(w, cs * ct * c);
    }
  return out;
}

// ---- coproduct ----

struct TensorTerm {
  SignedPermutation left, right;
  Rational coeff;
};

// Delta(sigma) = sum_k std(prefix of length k) (x) std(suffix).
inline std::vector<TensorTerm> coproduct(const SignedPermutation& s) {
  std::vector<TensorTerm> out;
  const SignedWord& w = s.window();
  for (int k = 0; k <= s.size(); ++k) {
    SignedWord pre(w.begin(), w.begin() + k);
    SignedWord suf(w.begin() + k, w.end());
    out.push_back({perm_of_word(pre), perm_of_word(suf), Rational(1)});
  }
  return out;
}

// Duality pairing <sigma (x) tau, Delta(kappa)>.
inline Rational coproduct_pairing(const SignedPermutation& s,
                                  const SignedPermutation& t,
                                  const SignedPermutation& kappa) {
  Rational acc(0);
  for (const auto& term : coproduct(kappa))
    if (term.left == s && term.right == t) acc += term.coeff;
  acc.canonicalize();
  return acc;
}

inline PermVector iota(const PermVector& v) {
  PermVector out;
  for (const auto& [s, c] : v.terms()) out.add(s.inverse(), c);
  return out;
}

// ---- special vectors and Phi ----

// Basis of QS_n^{+-} in a per-rank cached canonical order (length, window),
// together with descent data; ranks here are tiny (n <= 7).
struct RankBasis {
  std::vector<SignedPermutation> elems;
  std::vector<uint32_t> des, des_inv;
};

inline const RankBasis& rank_basis(int n) {
  static std::map<int, RankBasis> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    RankBasis b;
    b.elems = all_signed_permutations(n);
    for (const auto& s : b.elems) {
      b.des.push_back(s.descent_set());
      b.des_inv.push_back(s.inverse().descent_set());
    }
    it = cache.emplace(n, std::move(b)).first;
  }
  return it->second;
}

inline PermVector vector_I(int n) {
  return PermVector::basis(SignedPermutation::identity(n));
}
// J_n = (-n, ..., -1)
inline PermVector vector_J(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = -(n - i);
  return PermVector::basis(SignedPermutation(std::move(w)));
}
inline PermVector vector_P(int n) {
  const RankBasis& b = rank_basis(n);
  PermVector v;
  for (size_t i = 0; i < b.elems.size(); ++i)
    if ((b.des_inv[i] & ~1u) == 0) v.add(b.elems[i], 1);
  return v;
}
inline PermVector vector_Q(int n) {
  const RankBasis& b = rank_basis(n);
  PermVector v;
  for (size_t i = 0; i < b.elems.size(); ++i)
    if ((b.des[i] & ~1u) == 0) v.add(b.elems[i], 1);
  return v;
}

// Phi-tilde: sum of all tau with Des(tau^-1) inside D.
inline PermVector phi_tilde(uint32_t D, int n) {
  const RankBasis& b = rank_basis(n);
  PermVector v;
  for (size_t i = 0; i < b.elems.size(); ++i)
    if ((b.des_inv[i] & ~D) == 0) v.add(b.elems[i], 1);
  return v;
}

inline PermVector phi(const PermVector& v) {
  PermVector out;
  if (v.is_zero()) return out;
  int n = v.rank();
  for (const auto& [s, c] : v.terms()) {
    PermVector img = phi_tilde(s.descent_set(), n);
    for (const auto& [t, ci] : img.terms()) out.add(t, c * ci);
  }
  return out;
}

// ---- the derivation ----

inline PermVector partial_i(const SignedPermutation& s, int i) {
  const SignedWord& w = s.window();
  int sg = sign_letter(w, i);
  PermVector out;
  if (sg == 0) return out;
  out.add(SignedPermutation(del_word(w, i)), Rational(sg));
  return out;
}

inline PermVector partial(const PermVector& v) {
  PermVector out;
  if (v.is_zero()) return out;
  int n = v.rank();
  if (n < 1) throw std::invalid_argument("partial: rank >= 1 required");
  for (const auto& [s, c] : v.terms())
    for (int i = 1; i <= n; ++i) {
      PermVector d = partial_i(s, i);
      for (const auto& [t, ci] : d.terms()) out.add(t, c * ci);
    }
  return out;
}

// Matrix of a linear map QS_n -> QS_m in the canonical bases (columns
// indexed by rank-n elements). Entries are rationals scaled to integers by
// the caller's knowledge that the maps here are integral.
inline IntMatrix map_matrix(int n, int m,
                            const std::function<PermVector(
                                const SignedPermutation&)>& f) {
  const RankBasis& cols = rank_basis(n);
  const RankBasis& rows = rank_basis(m);
  std::map<SignedPermutation, int> row_index;
  for (size_t i = 0; i < rows.elems.size(); ++i)
    row_index.emplace(rows.elems[i], static_cast<int>(i));
  IntMatrix M(static_cast<int>(rows.elems.size()),
              static_cast<int>(cols.elems.size()));
  for (size_t j = 0; j < cols.elems.size(); ++j) {
    PermVector img = f(cols.elems[j]);
    for (const auto& [t, c] : img.terms()) {
      Rational cc = c;
      cc.canonicalize();
      if (cc.get_den() != 1)
        throw std::logic_error("map_matrix: non-integral entry");
      M.at(row_index.at(t), static_cast<int>(j)) = cc.get_num();
    }
  }
  return M;
}

}  // namespace garside

#endif  // GARSIDE_BFQSYM_HPP

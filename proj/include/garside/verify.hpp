// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_VERIFY_HPP
#define GARSIDE_VERIFY_HPP

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "garside/bfqsym.hpp"
#include "garside/matrix.hpp"

namespace garside {

// Machine-checkable statements of the Hopf-algebra results, each reported
// with the first counterexample found (as a window) when it fails.

struct VerifyReport {
  std::string check;
  int rank = 0;
  bool pass = true;
  std::string detail;  // counterexample or summary
};

namespace detail {
inline SignedPermutation random_window(int n, std::mt19937_64& rng) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  for (int& v : w)
    if (rng() & 1) v = -v;
  return SignedPermutation(std::move(w));
}
}  // namespace detail

// Leibniz rule for the shuffle: d(s sh t) = ds sh t + s sh dt.
// Exhaustive over both bases for k + l <= 4, random pairs above.
inline VerifyReport verify_leibniz(int k, int l, int trials = 64,
                                   uint64_t seed = 20260824) {
  VerifyReport r{"leibniz", k + l, true, ""};
  auto check_one = [&](const SignedPermutation& s,
                       const SignedPermutation& t) {
    PermVector lhs = partial(shuffle(PermVector::basis(s),
                                     PermVector::basis(t)));
    PermVector rhs = shuffle(partial(PermVector::basis(s)),
                             PermVector::basis(t)) +
                     shuffle(PermVector::basis(s),
                             partial(PermVector::basis(t)));
    if (lhs != rhs) {
      r.pass = false;
      r.detail = "sigma=" + s.str() + " tau=" + t.str();
    }
  };
  if (k + l <= 4) {
    for (const auto& s : rank_basis(k).elems) {
      for (const auto& t : rank_basis(l).elems) {
        check_one(s, t);
        if (!r.pass) return r;
      }
    }
    r.detail = "exhaustive";
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
      check_one(detail::random_window(k, rng), detail::random_window(l, rng));
      if (!r.pass) return r;
    }
    r.detail = "sampled " + std::to_string(trials) + " pairs";
  }
  return r;
}

// Theorem: the derivation commutes with Phi; exhaustive over rank n.
inline VerifyReport verify_commutation(int n) {
  VerifyReport r{"commutation", n, true, "exhaustive"};
  for (const auto& s : rank_basis(n).elems) {
    PermVector b = PermVector::basis(s);
    if (partial(phi(b)) != phi(partial(b))) {
      r.pass = false;
      r.detail = "sigma=" + s.str();
      return r;
    }
  }
  return r;
}

// The derivation from rank n+1 onto rank n is surjective: its matrix has
// full row rank 2^n n!.
inline VerifyReport verify_surjectivity(int n) {
  VerifyReport r{"surjectivity", n + 1, true, ""};
  IntMatrix M = map_matrix(n + 1, n, [](const SignedPermutation& s) {
    return partial(PermVector::basis(s));
  });
  long want = M.rows();
  long got = matrix_rank_exact(M);
  r.pass = got == want;
  r.detail = "rank " + std::to_string(got) + " of " + std::to_string(want);
  return r;
}

namespace detail {
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  // parts chosen by the subset of cut points of [1, n-1]
  for (uint32_t mask = 0; mask < (n > 0 ? (1u << (n - 1)) : 1u); ++mask) {
    std::vector<int> c;
    int prev = 0;
    for (int p = 1; p < n; ++p)
      if (mask & (1u << (p - 1))) {
        c.push_back(p - prev);
        prev = p;
      }
    if (n > 0) c.push_back(n - prev);
    out.push_back(std::move(c));
  }
  return out;
}

// Sum of the basis elements of rank n whose descent data lies inside D;
// inverse_side selects Des(sigma^-1) instead of Des(sigma).
inline PermVector descent_subset_sum(int n, uint32_t D, bool inverse_side) {
  const RankBasis& b = rank_basis(n);
  PermVector v;
  for (size_t i = 0; i < b.elems.size(); ++i) {
    uint32_t d = inverse_side ? b.des_inv[i] : b.des[i];
    if ((d & ~D) == 0) v.add(b.elems[i], 1);
  }
  return v;
}
}  // namespace detail

// The four product identities, the J/I decomposition of P_n, and the
// shuffle factorization of Phi-tilde, over every composition of m <= n.
inline VerifyReport verify_product_lemmas(int n) {
  VerifyReport r{"product-lemmas", n, true, "exhaustive"};
  auto fail = [&](const std::string& what) {
    r.pass = false;
    r.detail = what;
  };
  for (int m = 1; m <= n && r.pass; ++m) {
    for (const auto& comp : detail::compositions(m)) {
      // inner descent positions k1, k1+k2, ...
      uint32_t D = 0;
      int acc = 0;
      for (size_t j = 0; j + 1 < comp.size(); ++j) {
        acc += comp[j];
        D |= 1u << acc;
      }
      PermVector conv_q = vector_Q(comp[0]);
      PermVector conv_iq = vector_I(comp[0]);
      PermVector shuf_p = vector_P(comp[0]);
      PermVector shuf_ip = vector_I(comp[0]);
      for (size_t j = 1; j < comp.size(); ++j) {
        conv_q = convolution(conv_q, vector_Q(comp[j]));
        conv_iq = convolution(conv_iq, vector_Q(comp[j]));
        shuf_p = shuffle(shuf_p, vector_P(comp[j]));
        shuf_ip = shuffle(shuf_ip, vector_P(comp[j]));
      }
      std::string cs;
      for (int kk : comp) cs += std::to_string(kk) + ".";
      if (conv_q != detail::descent_subset_sum(m, D | 1u, false))
        fail("Q-convolution at composition " + cs);
      else if (conv_iq != detail::descent_subset_sum(m, D, false))
        fail("IQ-convolution at composition " + cs);
      else if (shuf_p != detail::descent_subset_sum(m, D | 1u, true))
        fail("P-shuffle at composition " + cs);
      else if (shuf_ip != detail::descent_subset_sum(m, D, true))
        fail("IP-shuffle at composition " + cs);
      if (!r.pass) break;
    }
    if (!r.pass) break;
    // P_m = sum_k J_k sh I_{m-k}
    PermVector sum;
    for (int k = 0; k <= m; ++k)
      sum = sum + shuffle(vector_J(k), vector_I(m - k));
    if (sum != vector_P(m)) {
      fail("J/I decomposition of P at rank " + std::to_string(m));
      break;
    }
    // Phi-tilde factors as a shuffle product over the blocks of D
    for (uint32_t D = 0; D < (1u << m); ++D) {
      std::vector<int> ds;
      for (int p = 1; p < m; ++p)
        if (D & (1u << p)) ds.push_back(p);
      std::vector<int> blocks;
      int prev = 0;
      for (int d : ds) {
        blocks.push_back(d - prev);
        prev = d;
      }
      blocks.push_back(m - prev);
      PermVector prod = (D & 1u) ? vector_P(blocks[0]) : vector_I(blocks[0]);
      for (size_t j = 1; j < blocks.size(); ++j)
        prod = shuffle(prod, vector_P(blocks[j]));
      if (prod != phi_tilde(D, m)) {
        fail("Phi-tilde factorization at rank " + std::to_string(m) +
             " D=" + std::to_string(D));
        break;
      }
    }
  }
  return r;
}

// d(I_n) = (n-1) I_{n-1}, d(J_n) = (n-2) J_{n-1}, d(P_n) = (n-2) P_{n-1}.
inline VerifyReport verify_derivation_identities(int n) {
  VerifyReport r{"derivation-identities", n, true, "exhaustive"};
  for (int m = 1; m <= n; ++m) {
    if (partial(vector_I(m)) != Rational(m - 1) * vector_I(m - 1)) {
      r.pass = false;
      r.detail = "I at rank " + std::to_string(m);
      return r;
    }
    if (partial(vector_J(m)) != Rational(m - 2) * vector_J(m - 1)) {
      r.pass = false;
      r.detail = "J at rank " + std::to_string(m);
      return r;
    }
    if (partial(vector_P(m)) != Rational(m - 2) * vector_P(m - 1)) {
      r.pass = false;
      r.detail = "P at rank " + std::to_string(m);
      return r;
    }
  }
  return r;
}

inline std::vector<VerifyReport> run_hopf_suite(
    int max_rank, const std::vector<std::string>& checks) {
  auto wants = [&](const std::string& c) {
    if (checks.empty()) return true;
    for (const auto& x : checks)
      if (x == c) return true;
    return false;
  };
  std::vector<VerifyReport> out;
  if (wants("leibniz"))
    for (int k = 1; k < 2 * max_rank; ++k)
      for (int l = 1; k + l <= 2 * max_rank; ++l)
        out.push_back(verify_leibniz(k, l));
  if (wants("commutation"))
    for (int m = 1; m <= max_rank; ++m) out.push_back(verify_commutation(m));
  if (wants("surjectivity"))
    for (int m = 1; m <= max_rank; ++m) out.push_back(verify_surjectivity(m));
  if (wants("products")) out.push_back(verify_product_lemmas(max_rank));
  if (wants("derivation"))
    out.push_back(verify_derivation_identities(max_rank + 1));
  return out;
}

}  // namespace garside

#endif  // GARSIDE_VERIFY_HPP

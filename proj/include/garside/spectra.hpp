// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_SPECTRA_HPP
#define GARSIDE_SPECTRA_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "garside/groups.hpp"
#include "garside/matrix.hpp"
#include "garside/normal.hpp"
#include "garside/polynomial.hpp"
#include "garside/rational_function.hpp"

namespace garside {

inline constexpr long kFullMatrixCap = 10000;     // elements
inline constexpr long kEnumerationCap = 1000000;  // refuses E7/E8 by default

// Per-element descent data, all the spectra layer ever needs: the right
// descents of w and of w^-1, in the canonical enumeration order.
struct DescentProfile {
  uint32_t des = 0;
  uint32_t des_inv = 0;
};

struct GroupSummary {
  TypeTag tag;
  int rank = 0;
  Integer order = 0;
  std::vector<DescentProfile> profiles;
};

template <class Model>
std::vector<DescentProfile> descent_profiles(
    const Model& model, const std::vector<typename Model::Element>& elems) {
  std::vector<DescentProfile> out;
  out.reserve(elems.size());
  for (const auto& e : elems)
    out.push_back({model.descents(e), model.descents(model.inverse(e))});
  return out;
}

template <class Model>
GroupSummary summarize_model(const Model& model, const TypeTag& tag,
                             const Integer& cap) {
  GroupSummary s;
  s.tag = tag;
  s.rank = model.rank();
  s.order = group_order(tag);
  auto elems = enumerate_group(model, s.order, cap);
  if (Integer(static_cast<long>(elems.size())) != s.order)
    throw std::logic_error("enumeration size mismatch for " + tag.str());
  s.profiles = descent_profiles(model, elems);
  return s;
}

// Backend selection: windows for B, the abstract dihedral model for I
// (valid for every order m), the root engine for everything else.
inline GroupSummary group_summary(const TypeTag& tag,
                                  const Integer& cap = kEnumerationCap) {
  if (tag.letter == 'B')
    return summarize_model(WindowModel(tag.param), tag, cap);
  if (tag.letter == 'I')
    return summarize_model(DihedralModel(tag.param), tag, cap);
  return summarize_model(RootModel(CoxeterGraph(tag)), tag, cap);
}

// Full |W| x |W| adjacency: a_{sigma,tau} = 1 iff (sigma, tau) is a normal
// pair, i.e. Des(tau^-1) <= Des(sigma).
inline IntMatrix full_adjacency(const std::vector<DescentProfile>& p,
                                long cap = kFullMatrixCap) {
  long n = static_cast<long>(p.size());
  if (cap > 0 && n > cap)
    throw ResourceLimit("full adjacency needs " + std::to_string(n) +
                            " x " + std::to_string(n) +
                            " entries, above the cap of " +
                            std::to_string(cap) + " elements",
                        Integer(n));
  IntMatrix A(static_cast<int>(n), static_cast<int>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if ((p[j].des_inv & ~p[i].des) == 0)
        A.at(static_cast<int>(i), static_cast<int>(j)) = 1;
  return A;
}

// Descent-class compression: a'_{I,J} = #{w : Des(w^-1) = I, J <= Des(w)},
// subsets indexed by bitmask value.
inline IntMatrix descent_class_matrix(int rank,
                                      const std::vector<DescentProfile>& p) {
  const uint32_t m = 1u << rank;
  IntMatrix A(static_cast<int>(m), static_cast<int>(m));
  for (const auto& w : p) {
    // increment (Des(w^-1), J) for every subset J of Des(w)
    uint32_t d = w.des;
    uint32_t J = d;
    for (;;) {
      A.at(static_cast<int>(w.des_inv), static_cast<int>(J)) += 1;
      if (J == 0) break;
      J = (J - 1) & d;
    }
  }
  return A;
}

inline IntMatrix descent_class_matrix(const GroupSummary& s) {
  return descent_class_matrix(s.rank, s.profiles);
}

// chi_Gamma = x^(|W| - 2^rank) * charpoly(Adj'); the compression shares the
// nonzero spectrum with the full matrix. Cross-checked directly when the
// group is small enough for a full-matrix charpoly.
inline IntPolynomial charpoly_full(const GroupSummary& s) {
  IntMatrix adjp = descent_class_matrix(s);
  IntPolynomial chi_p = charpoly(adjp);
  Integer k = s.order - int_pow(Integer(2), s.rank);
  if (k < 0) throw std::logic_error("charpoly_full: |W| < 2^rank");
  IntPolynomial chi = chi_p.shifted(static_cast<int>(k.get_si()));
  if (s.order <= 64) {
    IntPolynomial direct = charpoly(full_adjacency(s.profiles));
    if (direct != chi)
      throw std::logic_error("compression cross-check failed for " +
                             s.tag.str());
  }
  return chi;
}

// Counting vectors of the transfer method: Y_I = [I nonempty],
// Z_I = (-1)^(|I|+1) [I nonempty].
inline std::vector<Integer> count_vector_y(int rank) {
  std::vector<Integer> y(size_t(1) << rank, Integer(1));
  y[0] = 0;
  return y;
}
inline std::vector<Integer> count_vector_z(int rank) {
  std::vector<Integer> z(size_t(1) << rank);
  for (uint32_t i = 1; i < (1u << rank); ++i)
    z[i] = (__builtin_popcount(i) % 2) ? 1 : -1;
  return z;
}

// Number of braids of Garside length d: tY (Adj')^d Z. The d = 0 case
// gives 1, the empty braid, with no special-casing needed.
inline Integer count_braids(const IntMatrix& adjp, int rank, long d) {
  if (d < 0) throw std::invalid_argument("count_braids: d >= 0 required");
  std::vector<Integer> v = count_vector_z(rank);
  for (long i = 0; i < d; ++i) v = adjp.apply(v);
  return dot(count_vector_y(rank), v);
}

inline Integer count_braids(const GroupSummary& s, long d) {
  return count_braids(descent_class_matrix(s), s.rank, d);
}

// Normal sequences of length d >= 1 from sigma to tau (indices into the
// canonical order): t_sigma Adj^(d-1) tau.
inline Integer count_braids_fixed_endpoints(const IntMatrix& adj, int sigma,
                                            int tau, long d) {
  if (d < 1) throw std::invalid_argument("fixed endpoints: d >= 1");
  if (sigma < 0 || sigma >= adj.rows() || tau < 0 || tau >= adj.cols())
    throw std::out_of_range("fixed endpoints: element index");
  std::vector<Integer> v(adj.cols(), Integer(0));
  v[tau] = 1;
  for (long i = 0; i + 1 < d; ++i) v = adj.apply(v);
  return v[sigma];
}

// F(t) = sum_d b(d) t^d = tY (I - t Adj')^-1 Z, reduced.
inline RationalFunction generating_series(const IntMatrix& adjp, int rank) {
  return solve_rational_series(adjp, count_vector_y(rank),
                               count_vector_z(rank));
}

inline RationalFunction generating_series(const GroupSummary& s) {
  return generating_series(descent_class_matrix(s), s.rank);
}

struct DivisibilityVerdict {
  bool divides = false;
  IntPolynomial quotient;   // when divides
  IntPolynomial base, next; // the two characteristic polynomials
};

// Does chi of (letter, n) divide chi of (letter, n+1)?
inline DivisibilityVerdict divisibility_verdict(char letter, int n,
                                                const Integer& cap =
                                                    kEnumerationCap) {
  DivisibilityVerdict v;
  TypeTag lo{letter, n}, hi{letter, n + 1};
  lo.check();
  hi.check();
  v.base = charpoly_full(group_summary(lo, cap));
  v.next = charpoly_full(group_summary(hi, cap));
  v.divides = poly_divides(v.base, v.next);
  if (v.divides) v.quotient = poly_divide_exact(v.next, v.base);
  return v;
}

// Closed form of Adj'_{I_m}: [[1,0,0,0],[m-1,b,a,0],[m-1,a,b,0],[1,1,1,1]]
// with a = floor((m-1)/2), b = floor(m/2). The bottom-left corner is 1, not
// m: the row-sum identity sum_I a'_{I,0} = |W| = 2m forces it.
inline IntMatrix dihedral_descent_class_closed_form(int m) {
  IntMatrix A(4, 4);
  long a = (m - 1) / 2, b = m / 2;
  A.at(0, 0) = 1;
  A.at(1, 0) = m - 1; A.at(1, 1) = b; A.at(1, 2) = a;
  A.at(2, 0) = m - 1; A.at(2, 1) = a; A.at(2, 2) = b;
  A.at(3, 0) = 1; A.at(3, 1) = 1; A.at(3, 2) = 1; A.at(3, 3) = 1;
  return A;
}

}  // namespace garside

#endif  // GARSIDE_SPECTRA_HPP

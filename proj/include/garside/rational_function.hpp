// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_RATIONAL_FUNCTION_HPP
#define GARSIDE_RATIONAL_FUNCTION_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "garside/integer.hpp"
#include "garside/matrix.hpp"
#include "garside/polynomial.hpp"

namespace garside {

// Rational function N(t)/D(t) over Z, kept in a canonical form: the
// polynomial gcd is cancelled, the coefficient contents share no common
// factor, and the leading coefficient of the denominator is positive.
struct RationalFunction {
  IntPolynomial num;
  IntPolynomial den = IntPolynomial::constant(1);

  RationalFunction() = default;
  RationalFunction(IntPolynomial n, IntPolynomial d)
      : num(std::move(n)), den(std::move(d)) {
    canonicalize();
  }

  void canonicalize() {
    if (den.is_zero())
      throw std::domain_error("RationalFunction: zero denominator");
    if (num.is_zero()) {
      den = IntPolynomial::constant(1);
      return;
    }
    IntPolynomial g = poly_gcd(num, den);
    if (g.degree() > 0 || g.leading() != 1) {
      num = poly_divide_exact(num, g);
      den = poly_divide_exact(den, g);
    }
    Integer c = int_gcd(num.content(), den.content());
    if (sgn(den.leading()) < 0) c = -c;
    if (c != 1) {
      std::vector<Integer> nn = num.coeffs(), dd = den.coeffs();
      for (auto& v : nn) v /= c;
      for (auto& v : dd) v /= c;
      num = IntPolynomial(std::move(nn));
      den = IntPolynomial(std::move(dd));
    }
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string str(const std::string& var = "t") const {
    return "(" + num.str(var) + ") / (" + den.str(var) + ")";
  }
};

// Taylor coefficients of f at 0, f.den(0) != 0 required.
inline std::vector<Rational> series_coeffs_q(const RationalFunction& f,
                                             int count) {
  Integer d0 = f.den.coeff(0);
  if (d0 == 0)
    throw std::domain_error("series_coeffs: pole at t = 0");
  std::vector<Rational> b(count);
  for (int k = 0; k < count; ++k) {
    Rational acc(f.num.coeff(k));
    for (int j = 1; j <= std::min(k, f.den.degree()); ++j)
      acc -= Rational(f.den.coeff(j)) * b[k - j];
    b[k] = acc / d0;
    b[k].canonicalize();
  }
  return b;
}

// Integer Taylor coefficients; throws if any coefficient is fractional.
inline std::vector<Integer> series_coeffs(const RationalFunction& f,
                                          int count) {
  auto q = series_coeffs_q(f, count);
  std::vector<Integer> r;
  r.reserve(q.size());
  for (auto& v : q) {
    if (v.get_den() != 1)
      throw std::domain_error("series_coeffs: non-integer coefficient");
    r.push_back(v.get_num());
  }
  return r;
}

// Closed form of F(t) = sum_d (Yt A^d Z) t^d as a reduced rational function.
// Denominator is det(I - tA), the reversed characteristic polynomial; the
// numerator is the truncation of F * D to degree < n.
inline RationalFunction solve_rational_series(const IntMatrix& A,
                                              const std::vector<Integer>& Y,
                                              const std::vector<Integer>& Z) {
  const int n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("solve_rational_series");
  IntPolynomial chi = charpoly(A);
  std::vector<Integer> dcoef(n + 1);
  for (int k = 0; k <= n; ++k) dcoef[n - k] = chi.coeff(k);
  IntPolynomial D{std::vector<Integer>(dcoef)};

  // b(d) = Yt A^d Z for d = 0 .. n-1
  std::vector<Integer> b(n == 0 ? 1 : n);
  std::vector<Integer> v = Z;
  for (int d = 0; d < std::max(n, 1); ++d) {
    b[d] = dot(Y, v);
    if (d + 1 < n) v = A.apply(v);
  }
  std::vector<Integer> ncoef(std::max(n, 1), Integer(0));
  for (int k = 0; k < std::max(n, 1); ++k)
    for (int j = 0; j <= std::min(k, D.degree()); ++j)
      ncoef[k] += D.coeff(j) * b[k - j];
  return RationalFunction(IntPolynomial(std::move(ncoef)), std::move(D));
}

// (f - f(0)) / t for f with f(0) = 1 and num(0) = den(0); used to compare a
// series against a table that starts at d = 1.
inline RationalFunction drop_constant_term(const RationalFunction& f) {
  IntPolynomial diff = f.num - f.den;
  if (diff.coeff(0) != 0)
    throw std::domain_error("drop_constant_term: f(0) != 1");
  std::vector<Integer> shifted(diff.coeffs().begin() +
                                   (diff.is_zero() ? 0 : 1),
                               diff.coeffs().end());
  return RationalFunction(IntPolynomial(std::move(shifted)), f.den);
}

}  // namespace garside

#endif  // GARSIDE_RATIONAL_FUNCTION_HPP

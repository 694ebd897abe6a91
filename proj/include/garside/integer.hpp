// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_INTEGER_HPP
#define GARSIDE_INTEGER_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace garside {

// Exact arbitrary-precision scalars. All counting data (adjacency entries,
// braid counts, polynomial coefficients) lives in Integer; Rational is used
// where the Hopf-algebra layer genuinely needs fractions.
using Integer = mpz_class;
using Rational = mpq_class;

inline int int_sign(const Integer& x) { return sgn(x); }

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Element of the golden ring Z[phi], phi^2 = phi + 1, stored as a + b*phi.
// This is the exact coefficient ring for the H-type root systems.
struct GoldenNumber {
  Integer a = 0;
  Integer b = 0;

  GoldenNumber() = default;
  GoldenNumber(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit GoldenNumber(long v) : a(v), b(0) {}

  static GoldenNumber phi() { return {0, 1}; }

  friend GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend GoldenNumber operator-(const GoldenNumber& x) { return {-x.a, -x.b}; }
  // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
  friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const GoldenNumber& x, const GoldenNumber& y) {
    return !(x == y);
  }

  bool is_zero() const { return a == 0 && b == 0; }

  // Exact sign of a + b*phi. With p = 2a + b, q = b the value is
  // (p + q*sqrt(5))/2; mixed-sign cases reduce to comparing p^2 with 5 q^2.
  int sign() const {
    Integer p = 2 * a + b;
    const Integer& q = b;
    int sp = sgn(p), sq = sgn(q);
    if (sp >= 0 && sq >= 0) return (sp == 0 && sq == 0) ? 0 : 1;
    if (sp <= 0 && sq <= 0) return (sp == 0 && sq == 0) ? 0 : -1;
    // p and q of strict opposite signs; sqrt(5) irrational, so never zero.
    Integer square_cmp = p * p - 5 * q * q;
    if (square_cmp == 0)
      throw std::logic_error("GoldenNumber::sign: impossible tie");
    return sgn(square_cmp) > 0 ? sp : sq;
  }

  std::string str() const {
    return a.get_str() + (sgn(b) >= 0 ? "+" : "") + b.get_str() + "phi";
  }
};

inline int ring_sign(const Integer& x) { return sgn(x); }
inline int ring_sign(const GoldenNumber& x) { return x.sign(); }
inline bool ring_is_zero(const Integer& x) { return x == 0; }
inline bool ring_is_zero(const GoldenNumber& x) { return x.is_zero(); }
inline std::string ring_str(const Integer& x) { return x.get_str(); }
inline std::string ring_str(const GoldenNumber& x) { return x.str(); }

}  // namespace garside

#endif  // GARSIDE_INTEGER_HPP

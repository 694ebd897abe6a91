// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_POLYNOMIAL_HPP
#define GARSIDE_POLYNOMIAL_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "garside/integer.hpp"

namespace garside {

// Dense univariate polynomial over Z, coefficients stored in ascending
// degree with trailing zeros trimmed. The zero polynomial has an empty
// coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs)
      : c_(std::move(coeffs)) {
    trim();
  }
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial constant(Integer v) {
    IntPolynomial p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }
  // x^k
  static IntPolynomial monomial(int k, Integer coeff = 1) {
    IntPolynomial p;
    if (coeff != 0) {
      p.c_.assign(k, Integer(0));
      p.c_.push_back(std::move(coeff));
    }
    return p;
  }

  const std::vector<Integer>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
  }
  const Integer& leading() const { return c_.back(); }

  friend IntPolynomial operator+(const IntPolynomial& p,
                                 const IntPolynomial& q) {
    std::vector<Integer> r(std::max(p.c_.size(), q.c_.size()), Integer(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& p,
                                 const IntPolynomial& q) {
    std::vector<Integer> r(std::max(p.c_.size(), q.c_.size()), Integer(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& p) {
    std::vector<Integer> r = p.c_;
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator*(const IntPolynomial& p,
                                 const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Integer> r(p.c_.size() + q.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator*(const Integer& s, const IntPolynomial& p) {
    if (s == 0) return {};
    std::vector<Integer> r = p.c_;
    for (auto& v : r) v *= s;
    return IntPolynomial(std::move(r));
  }
  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) {
    return p.c_ == q.c_;
  }
  friend bool operator!=(const IntPolynomial& p, const IntPolynomial& q) {
    return !(p == q);
  }

  IntPolynomial pow(unsigned e) const {
    IntPolynomial r = constant(1);
    IntPolynomial base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r = r * base;
      base = base * base;
    }
    return r;
  }

  // p(x) * x^k
  IntPolynomial shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Integer> r(c_.size() + k, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPolynomial(std::move(r));
  }

  Integer eval(const Integer& x) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const {
    Integer g = 0;
    for (const auto& v : c_) g = int_gcd(g, v);
    return g;
  }

  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (sgn(leading()) < 0) g = -g;
    std::vector<Integer> r = c_;
    for (auto& v : r) v /= g;
    return IntPolynomial(std::move(r));
  }

  // Human-readable form, descending powers: "x^4 - 85*x^3 + ... + 1260".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Integer& a = c_[k];
      if (a == 0) continue;
      Integer mag = abs(a);
      if (first) {
        if (sgn(a) < 0) out << "-";
        first = false;
      } else {
        out << (sgn(a) < 0 ? " - " : " + ");
      }
      bool unit = (mag == 1);
      if (k == 0) {
        out << mag.get_str();
      } else {
        if (!unit) out << mag.get_str() << "*";
        out << var;
        if (k > 1) out << "^" << k;
      }
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

// Polynomial over Q, used internally for exact division tests.
using QPolyCoeffs = std::vector<Rational>;

inline void qpoly_trim(QPolyCoeffs& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

inline QPolyCoeffs qpoly_from(const IntPolynomial& p) {
  QPolyCoeffs c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return c;
}

// Divides a by b over Q; returns {quotient, remainder}. b must be nonzero.
inline std::pair<QPolyCoeffs, QPolyCoeffs> qpoly_divmod(QPolyCoeffs a,
                                                        const QPolyCoeffs& b) {
  if (b.empty()) throw std::domain_error("qpoly_divmod: division by zero");
  QPolyCoeffs q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= f * b[i];
      a[shift + i].canonicalize();
    }
    qpoly_trim(a);  // leading term cancels exactly
  }
  return {std::move(q), std::move(a)};
}

// Whether p divides q in Q[x]; if so returns the quotient, scaled to be an
// integer polynomial when it is one (the caller checks the denominators).
inline bool poly_divides(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero()) return q.is_zero();
  if (q.is_zero()) return true;
  auto [quot, rem] = qpoly_divmod(qpoly_from(q), qpoly_from(p));
  (void)quot;
  return rem.empty();
}

// Exact quotient q / p in Z[x]; throws if the division is not exact over Z.
inline IntPolynomial poly_divide_exact(const IntPolynomial& q,
                                       const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("poly_divide_exact: zero divisor");
  if (q.is_zero()) return {};
  auto [quot, rem] = qpoly_divmod(qpoly_from(q), qpoly_from(p));
  if (!rem.empty())
    throw std::domain_error("poly_divide_exact: nonzero remainder");
  std::vector<Integer> out;
  out.reserve(quot.size());
  for (auto& v : quot) {
    v.canonicalize();
    if (v.get_den() != 1)
      throw std::domain_error("poly_divide_exact: non-integral quotient");
    out.push_back(v.get_num());
  }
  return IntPolynomial(std::move(out));
}

// gcd in Z[x], primitive with positive leading coefficient. Plain primitive
// remainder sequence; inputs here are small (series denominators).
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    // pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b stays in Z[x]
    int d = a.degree() - b.degree();
    if (d < 0) {
      std::swap(a, b);
      continue;
    }
    IntPolynomial r = int_pow(b.leading(), d + 1) * a;
    auto [quot, rem] = qpoly_divmod(qpoly_from(r), qpoly_from(b));
    (void)quot;
    std::vector<Integer> rc;
    rc.reserve(rem.size());
    for (auto& v : rem) {
      v.canonicalize();
      if (v.get_den() != 1)
        throw std::logic_error("poly_gcd: pseudo-remainder not integral");
      rc.push_back(v.get_num());
    }
    a = std::move(b);
    b = IntPolynomial(std::move(rc)).primitive_part();
  }
  return a.primitive_part();
}

}  // namespace garside

#endif  // GARSIDE_POLYNOMIAL_HPP

// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfmod/rational.hpp"

namespace hopfmod {

// Dense univariate polynomial, lowest degree first. T must provide
// zero_like/one_like/is_zero (and inverse for division).
template <class T>
class Poly {
 public:
  Poly() : zero_(zero_like(T{})) {}
  explicit Poly(std::vector<T> c) : c_(std::move(c)), zero_(proto()) { trim(); }
  Poly(std::vector<T> c, const T& like) : c_(std::move(c)), zero_(zero_like(like)) { trim(); }

  static Poly constant(const T& a) { return Poly(std::vector<T>{a}, a); }
  static Poly monomial(const T& a, size_t k) {
    std::vector<T> c(k + 1, zero_like(a));
    c[k] = a;
    return Poly(std::move(c), a);
  }
  // x - r
  static Poly linear_root(const T& r) { return Poly(std::vector<T>{-r, one_like(r)}, r); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& zero() const { return zero_; }
  T coeff(size_t k) const { return k < c_.size() ? c_[k] : zero_; }
  T lead() const { return c_.empty() ? zero_ : c_.back(); }

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), zero_);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(std::move(r), zero_);
  }
  Poly operator-() const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (auto& a : c_) r.push_back(-a);
    return Poly(std::move(r), zero_);
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly(std::vector<T>{}, zero_);
    std::vector<T> r(c_.size() + o.c_.size() - 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (detail::scalar_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(std::move(r), zero_);
  }
  Poly scale(const T& a) const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (auto& x : c_) r.push_back(x * a);
    return Poly(std::move(r), zero_);
  }
  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Euclidean division over a field of coefficients.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw MathError("polynomial division by zero");
    std::vector<T> r = c_;
    long dd = d.degree();
    if (degree() < dd) return {Poly(std::vector<T>{}, zero_), *this};
    std::vector<T> q(c_.size() - d.c_.size() + 1, zero_);
    T linv = inverse(d.lead());
    for (long k = degree(); k >= dd; --k) {
      T f = r[k] * linv;
      q[k - dd] = f;
      if (detail::scalar_zero(f)) continue;
      for (long i = 0; i <= dd; ++i) r[k - dd + i] = r[k - dd + i] - f * d.c_[i];
    }
    r.resize(dd);
    return {Poly(std::move(q), zero_), Poly(std::move(r), zero_)};
  }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }

  T eval(const T& x) const {
    T r = zero_like(x);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  // Evaluation at an element of a ring containing T (e.g. NFElement at α).
  template <class U, class Embed>
  U eval_in(const U& x, Embed embed) const {
    U r = zero_like(x);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + embed(c_[i]);
    return r;
  }
  Poly derivative() const {
    if (c_.size() <= 1) return Poly(std::vector<T>{}, zero_);
    std::vector<T> r;
    for (size_t i = 1; i < c_.size(); ++i) {
      T k = zero_;
      for (size_t j = 0; j < i; ++j) k = k + c_[i];
      r.push_back(k);
    }
    return Poly(std::move(r), zero_);
  }
  Poly monic() const {
    if (c_.empty()) return *this;
    return scale(inverse(lead()));
  }

 private:
  std::vector<T> c_;
  T zero_;

  T proto() const { return c_.empty() ? zero_like(T{}) : zero_like(c_.front()); }
  void trim() {
    while (!c_.empty() && detail::scalar_zero(c_.back())) c_.pop_back();
  }
};

using QPoly = Poly<Rational>;

QPoly qpoly(std::initializer_list<long> lowest_first);
QPoly qpoly_gcd(QPoly a, QPoly b);
// s*a + t*b = g (g monic).
void qpoly_xgcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t);
std::string to_string(const QPoly& f, const std::string& var = "x");
bool is_eisenstein(const QPoly& f, unsigned long p);
// Resultant via Sylvester determinant.
Rational resultant(const QPoly& f, const QPoly& g);
// Resultant via Euclidean remainder sequence (independent route).
Rational resultant_euclid(QPoly f, QPoly g);

}  // namespace hopfmod

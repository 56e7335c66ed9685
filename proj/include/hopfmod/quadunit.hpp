// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "hopfmod/rational.hpp"

namespace hopfmod {

// x + y t with the fixed relation t^2 = a. A default-constructed value is an
// unbound zero that adopts the relation of whatever it is combined with.
class QuadUnitScalar {
 public:
  QuadUnitScalar() = default;
  QuadUnitScalar(Rational x, Rational y, Rational a);
  static QuadUnitScalar rational(const Rational& x, const Rational& a) { return {x, 0, a}; }
  // t^k for any integer k (a must be nonzero for k < 0).
  static QuadUnitScalar t_power(long k, const Rational& a);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& a() const { return a_; }
  bool bound() const { return bound_; }

  QuadUnitScalar operator+(const QuadUnitScalar& o) const;
  QuadUnitScalar operator-(const QuadUnitScalar& o) const;
  QuadUnitScalar operator-() const;
  QuadUnitScalar operator*(const QuadUnitScalar& o) const;
  QuadUnitScalar operator*(const Rational& r) const;
  bool operator==(const QuadUnitScalar& o) const;

  QuadUnitScalar conj() const { return {x_, -y_, a_, bound_}; }
  Rational norm() const { return x_ * x_ - a_ * y_ * y_; }
  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }
  // Nonzero in at most one of the two components.
  bool is_homogeneous() const { return sgn(x_) == 0 || sgn(y_) == 0; }
  QuadUnitScalar inverse() const;
  // v_p of a homogeneous value, using v_p(t) = 0. Throws on mixed values;
  // those go through padic::quad_unit_valuation.
  long valuation(unsigned long p) const;
  std::string str() const;

 private:
  QuadUnitScalar(Rational x, Rational y, Rational a, bool bound)
      : x_(std::move(x)), y_(std::move(y)), a_(std::move(a)), bound_(bound) {}
  static Rational join(const QuadUnitScalar& u, const QuadUnitScalar& v, bool& bound);

  Rational x_, y_, a_;
  bool bound_ = false;
};

inline QuadUnitScalar zero_like(const QuadUnitScalar& q) {
  return q.bound() ? QuadUnitScalar(0, 0, q.a()) : QuadUnitScalar();
}
inline QuadUnitScalar one_like(const QuadUnitScalar& q) {
  return q.bound() ? QuadUnitScalar(1, 0, q.a()) : QuadUnitScalar(1, 0, 0);
}
inline bool is_zero(const QuadUnitScalar& q) { return q.is_zero(); }
inline QuadUnitScalar inverse(const QuadUnitScalar& q) { return q.inverse(); }

}  // namespace hopfmod

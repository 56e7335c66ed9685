// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopfmod/quadunit.hpp"

#include <sstream>

namespace hopfmod {

QuadUnitScalar::QuadUnitScalar(Rational x, Rational y, Rational a)
    : x_(std::move(x)), y_(std::move(y)), a_(std::move(a)), bound_(true) {}

QuadUnitScalar QuadUnitScalar::t_power(long k, const Rational& a) {
  if (k < 0) {
    if (sgn(a) == 0) throw MathError("negative power of t with t^2 = 0");
    return t_power(-k, a).inverse();
  }
  Rational c = rpow(a, k / 2);
  return k % 2 ? QuadUnitScalar(0, c, a) : QuadUnitScalar(c, 0, a);
}

Rational QuadUnitScalar::join(const QuadUnitScalar& u, const QuadUnitScalar& v, bool& bound) {
  bound = u.bound_ || v.bound_;
  if (u.bound_ && v.bound_ && u.a_ != v.a_) throw MathError("QuadUnitScalar relation mismatch");
  return u.bound_ ? u.a_ : v.a_;
}

QuadUnitScalar QuadUnitScalar::operator+(const QuadUnitScalar& o) const {
  bool b;
  Rational a = join(*this, o, b);
  return {x_ + o.x_, y_ + o.y_, a, b};
}

QuadUnitScalar QuadUnitScalar::operator-(const QuadUnitScalar& o) const {
  bool b;
  Rational a = join(*this, o, b);
  return {x_ - o.x_, y_ - o.y_, a, b};
}

QuadUnitScalar QuadUnitScalar::operator-() const { return {-x_, -y_, a_, bound_}; }

QuadUnitScalar QuadUnitScalar::operator*(const QuadUnitScalar& o) const {
  bool b;
  Rational a = join(*this, o, b);
  return {x_ * o.x_ + a * y_ * o.y_, x_ * o.y_ + y_ * o.x_, a, b};
}

QuadUnitScalar QuadUnitScalar::operator*(const Rational& r) const { return {x_ * r, y_ * r, a_, bound_}; }

bool QuadUnitScalar::operator==(const QuadUnitScalar& o) const {
  if (bound_ && o.bound_ && a_ != o.a_) return false;
  return x_ == o.x_ && y_ == o.y_;
}

QuadUnitScalar QuadUnitScalar::inverse() const {
  if (is_zero()) throw MathError("inverse of zero QuadUnitScalar");
  if (sgn(y_) == 0) return {Rational(1) / x_, 0, a_, bound_};
  if (sgn(x_) == 0) {
    if (sgn(a_) == 0) throw MathError("t is not invertible when t^2 = 0");
    return {0, Rational(1) / (a_ * y_), a_, bound_};
  }
  Rational n = norm();
  if (sgn(n) == 0) throw MathError("QuadUnitScalar with zero norm is a zero divisor");
  return {x_ / n, -y_ / n, a_, bound_};
}

long QuadUnitScalar::valuation(unsigned long p) const {
  if (sgn(y_) == 0) return vp(x_, p);
  if (sgn(x_) == 0) return vp(y_, p);
  throw MathError("valuation of a mixed QuadUnitScalar needs a p-adic value of t");
}

std::string QuadUnitScalar::str() const {
  if (sgn(y_) == 0) return x_.get_str();
  std::ostringstream os;
  if (sgn(x_) != 0) os << x_.get_str() << (sgn(y_) > 0 ? "+" : "");
  if (y_ == 1)
    os << "t";
  else if (y_ == -1)
    os << "-t";
  else
    os << y_.get_str() << "*t";
  return os.str();
}

}  // namespace hopfmod

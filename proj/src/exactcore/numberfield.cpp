// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopfmod/numberfield.hpp"

#include <sstream>

namespace hopfmod {

NumberField::NumberField(QPoly f) : f_(std::move(f)) {
  if (f_.degree() < 1) throw MathError("number field modulus must have positive degree");
  if (f_.lead() != 1) throw MathError("number field modulus must be monic");
  n_ = static_cast<size_t>(f_.degree());
  pow_.assign(2 * n_ - 1, std::vector<Rational>(n_));
  for (size_t k = 0; k < n_; ++k) pow_[k][k] = 1;
  for (size_t k = n_; k < 2 * n_ - 1; ++k) {
    // alpha^k = alpha * alpha^{k-1}
    const auto& prev = pow_[k - 1];
    std::vector<Rational> cur(n_);
    for (size_t i = 0; i + 1 < n_; ++i) cur[i + 1] = prev[i];
    const Rational& top = prev[n_ - 1];
    if (sgn(top) != 0)
      for (size_t i = 0; i < n_; ++i) cur[i] -= top * f_.coeff(i);
    pow_[k] = std::move(cur);
  }
}

FieldPtr make_field(const QPoly& f) { return std::make_shared<const NumberField>(f); }

NFElement::NFElement(FieldPtr k, std::vector<Rational> coords) : k_(std::move(k)), c_(std::move(coords)) {
  if (!k_) throw MathError("NFElement needs a field");
  if (c_.size() > k_->degree()) {
    // Reduce a longer coefficient vector modulo f.
    std::vector<Rational> r(k_->degree());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      if (i < k_->degree()) {
        r[i] += c_[i];
      } else if (i < 2 * k_->degree() - 1) {
        const auto& pw = k_->power(i);
        for (size_t j = 0; j < r.size(); ++j) r[j] += c_[i] * pw[j];
      } else {
        QPoly rem = QPoly(c_) % k_->modulus();
        r.assign(k_->degree(), Rational(0));
        for (size_t j = 0; j < r.size(); ++j) r[j] = rem.coeff(j);
        break;
      }
    }
    c_ = std::move(r);
  }
  c_.resize(k_->degree());
}

NFElement NFElement::from_rational(FieldPtr k, const Rational& q) {
  std::vector<Rational> c(k->degree());
  c[0] = q;
  return NFElement(std::move(k), std::move(c));
}

NFElement NFElement::from_poly(FieldPtr k, const QPoly& g) {
  QPoly r = g % k->modulus();
  std::vector<Rational> c(k->degree());
  for (size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(i);
  return NFElement(std::move(k), std::move(c));
}

NFElement NFElement::alpha(FieldPtr k) {
  if (k->degree() == 1) return from_rational(k, -k->modulus().coeff(0));
  std::vector<Rational> c(k->degree());
  c[1] = 1;
  return NFElement(std::move(k), std::move(c));
}

const FieldPtr& NFElement::join(const NFElement& u, const NFElement& v) {
  if (u.k_ && v.k_ && u.k_ != v.k_ && u.k_->modulus() != v.k_->modulus())
    throw MathError("NFElement modulus mismatch");
  return u.k_ ? u.k_ : v.k_;
}

NFElement NFElement::operator+(const NFElement& o) const {
  const FieldPtr& k = join(*this, o);
  if (!k) return NFElement();
  if (!k_) return o;
  if (!o.k_) return *this;
  std::vector<Rational> c(k->degree());
  for (size_t i = 0; i < c.size(); ++i) c[i] = c_[i] + o.c_[i];
  return NFElement(k, std::move(c));
}

NFElement NFElement::operator-() const {
  if (!k_) return *this;
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
  return NFElement(k_, std::move(c));
}

NFElement NFElement::operator-(const NFElement& o) const { return *this + (-o); }

NFElement NFElement::operator*(const NFElement& o) const {
  const FieldPtr& k = join(*this, o);
  if (!k_ || !o.k_) return k ? from_rational(k, 0) : NFElement();
  size_t n = k->degree();
  std::vector<Rational> conv(2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < n; ++j)
      if (sgn(o.c_[j]) != 0) conv[i + j] += c_[i] * o.c_[j];
  }
  std::vector<Rational> r(conv.begin(), conv.begin() + n);
  for (size_t m = n; m < conv.size(); ++m) {
    if (sgn(conv[m]) == 0) continue;
    const auto& pw = k->power(m);
    for (size_t j = 0; j < n; ++j) r[j] += conv[m] * pw[j];
  }
  return NFElement(k, std::move(r));
}

NFElement NFElement::operator*(const Rational& q) const {
  if (!k_) return *this;
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * q;
  return NFElement(k_, std::move(c));
}

bool NFElement::operator==(const NFElement& o) const {
  join(*this, o);
  for (size_t i = 0; i < std::max(c_.size(), o.c_.size()); ++i)
    if (coord(i) != o.coord(i)) return false;
  return true;
}

bool NFElement::is_zero() const {
  for (auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

NFElement NFElement::inverse() const {
  if (!k_ || is_zero()) throw MathError("inverse of zero NFElement");
  QPoly g, s, t;
  qpoly_xgcd(as_poly(), k_->modulus(), g, s, t);
  if (g.degree() != 0) throw MathError("element not invertible: modulus is reducible");
  return from_poly(k_, s);
}

NFElement NFElement::pow(unsigned long e) const {
  NFElement r = one_like(*this), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

QMatrix NFElement::mult_matrix() const {
  size_t n = k_->degree();
  QMatrix m(n, n);
  NFElement col = *this;
  NFElement a = alpha(k_);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) m(i, j) = col.coord(i);
    col = col * a;
  }
  return m;
}

std::string NFElement::str(const std::string& var) const { return to_string(as_poly(), var); }

LElement::LElement(NFElement u, NFElement v, Rational zsq)
    : u_(std::move(u)), v_(std::move(v)), zsq_(std::move(zsq)), bound_(true) {
  if (!u_.bound() && v_.bound()) u_ = zero_like(v_);
  if (!v_.bound() && u_.bound()) v_ = zero_like(u_);
}

LElement LElement::embed(const NFElement& u, const Rational& zsq) { return LElement(u, zero_like(u), zsq); }

void LElement::check(const LElement& o) const {
  if (bound_ && o.bound_ && zsq_ != o.zsq_) throw MathError("LElement z^2 mismatch");
}

LElement LElement::operator+(const LElement& o) const {
  check(o);
  if (!bound_) return o;
  if (!o.bound_) return *this;
  return LElement(u_ + o.u_, v_ + o.v_, zsq_);
}

LElement LElement::operator-() const {
  if (!bound_) return *this;
  return LElement(-u_, -v_, zsq_);
}

LElement LElement::operator-(const LElement& o) const { return *this + (-o); }

LElement LElement::operator*(const LElement& o) const {
  check(o);
  if (!bound_) return o.bound_ ? zero_like(o) : LElement();
  if (!o.bound_) return zero_like(*this);
  return LElement(u_ * o.u_ + v_ * o.v_ * zsq_, u_ * o.v_ + v_ * o.u_, zsq_);
}

LElement LElement::operator*(const Rational& q) const {
  if (!bound_) return *this;
  return LElement(u_ * q, v_ * q, zsq_);
}

bool LElement::operator==(const LElement& o) const {
  if (bound_ && o.bound_ && zsq_ != o.zsq_) return false;
  return u_ == o.u_ && v_ == o.v_;
}

LElement LElement::conj() const { return bound_ ? LElement(u_, -v_, zsq_) : *this; }

LElement LElement::inverse() const {
  if (!bound_ || is_zero()) throw MathError("inverse of zero LElement");
  NFElement n = u_ * u_ - v_ * v_ * zsq_;
  NFElement ni = n.inverse();
  return LElement(u_ * ni, -(v_ * ni), zsq_);
}

std::vector<Rational> LElement::coords(size_t n) const {
  std::vector<Rational> c(2 * n);
  for (size_t k = 0; k < n; ++k) {
    c[2 * k] = u_.coord(k);
    c[2 * k + 1] = v_.coord(k);
  }
  return c;
}

LElement LElement::from_coords(const FieldPtr& k, const Rational& zsq, const std::vector<Rational>& c) {
  size_t n = k->degree();
  if (c.size() != 2 * n) throw MathError("LElement coordinate length mismatch");
  std::vector<Rational> u(n), v(n);
  for (size_t i = 0; i < n; ++i) {
    u[i] = c[2 * i];
    v[i] = c[2 * i + 1];
  }
  return LElement(NFElement(k, u), NFElement(k, v), zsq);
}

std::string LElement::str() const {
  if (!bound_) return "0";
  if (v_.is_zero()) return u_.str();
  std::string vs = v_.str();
  std::string zs = "(" + vs + ")*z";
  if (u_.is_zero()) return zs;
  return u_.str() + " + " + zs;
}

}  // namespace hopfmod

// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfmod/matrix.hpp"
#include "hopfmod/poly.hpp"
#include "hopfmod/rational.hpp"

namespace hopfmod {

// E = Q[x]/(f) for a monic f; elements use the power basis of a root alpha.
class NumberField {
 public:
  explicit NumberField(QPoly f);
  const QPoly& modulus() const { return f_; }
  size_t degree() const { return n_; }
  // Coordinates of alpha^k for k < 2n - 1.
  const std::vector<Rational>& power(size_t k) const { return pow_[k]; }

 private:
  QPoly f_;
  size_t n_;
  std::vector<std::vector<Rational>> pow_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const QPoly& f);

class NFElement {
 public:
  NFElement() = default;  // unbound zero
  NFElement(FieldPtr k, std::vector<Rational> coords);
  static NFElement from_rational(FieldPtr k, const Rational& q);
  static NFElement from_poly(FieldPtr k, const QPoly& g);  // g(alpha)
  static NFElement alpha(FieldPtr k);

  const FieldPtr& field() const { return k_; }
  bool bound() const { return k_ != nullptr; }
  const std::vector<Rational>& coords() const { return c_; }
  Rational coord(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  QPoly as_poly() const { return QPoly(c_); }

  NFElement operator+(const NFElement& o) const;
  NFElement operator-(const NFElement& o) const;
  NFElement operator-() const;
  NFElement operator*(const NFElement& o) const;
  NFElement operator*(const Rational& q) const;
  bool operator==(const NFElement& o) const;
  bool operator!=(const NFElement& o) const { return !(*this == o); }

  bool is_zero() const;
  NFElement inverse() const;
  NFElement pow(unsigned long e) const;
  // Matrix of y -> x*y in the power basis (column j = coords of x*alpha^j).
  QMatrix mult_matrix() const;
  std::string str(const std::string& var = "a") const;

 private:
  FieldPtr k_;
  std::vector<Rational> c_;
  static const FieldPtr& join(const NFElement& u, const NFElement& v);
};

inline NFElement zero_like(const NFElement& x) {
  return x.bound() ? NFElement::from_rational(x.field(), 0) : NFElement();
}
inline NFElement one_like(const NFElement& x) {
  if (!x.bound()) throw MathError("one_like on an unbound NFElement");
  return NFElement::from_rational(x.field(), 1);
}
inline bool is_zero(const NFElement& x) { return x.is_zero(); }
inline NFElement inverse(const NFElement& x) { return x.inverse(); }

// L = E(z) with z^2 = zsq rational; value u + v z.
class LElement {
 public:
  LElement() = default;  // unbound zero
  LElement(NFElement u, NFElement v, Rational zsq);
  static LElement embed(const NFElement& u, const Rational& zsq);

  const NFElement& u() const { return u_; }
  const NFElement& v() const { return v_; }
  const Rational& zsq() const { return zsq_; }
  bool bound() const { return bound_; }

  LElement operator+(const LElement& o) const;
  LElement operator-(const LElement& o) const;
  LElement operator-() const;
  LElement operator*(const LElement& o) const;
  LElement operator*(const Rational& q) const;
  bool operator==(const LElement& o) const;
  bool operator!=(const LElement& o) const { return !(*this == o); }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  LElement conj() const;
  LElement inverse() const;
  // Interleaved tensor-basis coordinates (1, z, a, a z, a^2, a^2 z, ...).
  std::vector<Rational> coords(size_t n) const;
  static LElement from_coords(const FieldPtr& k, const Rational& zsq, const std::vector<Rational>& c);
  std::string str() const;

 private:
  NFElement u_, v_;
  Rational zsq_;
  bool bound_ = false;
  void check(const LElement& o) const;
};

inline LElement zero_like(const LElement& x) { return x.bound() ? LElement::embed(zero_like(x.u()), x.zsq()) : LElement(); }
inline LElement one_like(const LElement& x) { return LElement::embed(one_like(x.u()), x.zsq()); }
inline bool is_zero(const LElement& x) { return x.is_zero(); }
inline LElement inverse(const LElement& x) { return x.inverse(); }

}  // namespace hopfmod

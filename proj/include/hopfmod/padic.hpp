// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopfmod/numberfield.hpp"
#include "hopfmod/poly.hpp"
#include "hopfmod/quadunit.hpp"
#include "hopfmod/rational.hpp"

namespace hopfmod::padic {

// Raised when a lift does not reconstruct at the requested precision.
class PrecisionError : public MathError {
 public:
  PrecisionError(const std::string& what, long reached) : MathError(what), reached_(reached) {}
  long reached() const { return reached_; }

 private:
  long reached_;
};

// An element of Z_p known modulo p^N, stored as 0 <= value < p^N.
class PadicInt {
 public:
  PadicInt() = default;
  PadicInt(unsigned long p, long N, const Integer& v);
  static PadicInt from_rational(const Rational& q, unsigned long p, long N);

  unsigned long prime() const { return p_; }
  long precision() const { return N_; }
  const Integer& value() const { return v_; }
  Integer modulus() const { return ipow(p_, N_); }

  PadicInt operator+(const PadicInt& o) const;
  PadicInt operator-(const PadicInt& o) const;
  PadicInt operator-() const;
  PadicInt operator*(const PadicInt& o) const;
  bool operator==(const PadicInt& o) const;

  bool is_zero() const { return sgn(v_) == 0; }
  // v_p of the value, or N when the value is zero at this precision.
  long valuation() const;
  PadicInt unit_inverse() const;
  PadicInt with_precision(long N) const;

 private:
  unsigned long p_ = 0;
  long N_ = 0;
  Integer v_;
  void check(const PadicInt& o) const;
};

// Square root of a unit; the returned root reduces mod p into {1, ..., (p-1)/2}.
PadicInt hensel_sqrt_unit(const PadicInt& c);

// The rational n/d with |n|, |d| <= bound and p not dividing d such that
// n/d = x mod p^N. Throws PrecisionError when none exists.
Rational rational_reconstruct(const PadicInt& x, const Integer& bound);
// Default bound floor(sqrt(p^N / 2)).
Rational rational_reconstruct(const PadicInt& x);

// v_p(x + y t) with t the canonical Hensel root of a (see hensel_sqrt_unit).
long quad_unit_valuation(const QuadUnitScalar& q, unsigned long p, long N = 64);

// Element of O_E = Z_p[alpha], alpha a root of an Eisenstein polynomial f, in
// the power basis of alpha. Every coordinate is known modulo p^N.
class EisensteinElement {
 public:
  EisensteinElement() = default;
  EisensteinElement(const QPoly& f, unsigned long p, long N, std::vector<Integer> coords);
  static EisensteinElement from_nf(const NFElement& x, unsigned long p, long N);
  static EisensteinElement constant(const QPoly& f, unsigned long p, long N, const Integer& c);

  unsigned long prime() const { return p_; }
  long precision() const { return N_; }
  size_t degree() const { return c_.size(); }
  const std::vector<Integer>& coords() const { return c_; }
  const QPoly& modulus() const { return f_; }

  EisensteinElement operator+(const EisensteinElement& o) const;
  EisensteinElement operator-(const EisensteinElement& o) const;
  EisensteinElement operator-() const;
  EisensteinElement operator*(const EisensteinElement& o) const;
  EisensteinElement times_alpha() const;
  // Exact division by alpha; requires v_E >= 1 and costs one digit of precision.
  EisensteinElement div_alpha() const;
  EisensteinElement with_precision(long N) const;

  bool is_zero() const;
  // v_E = min_i (deg f * v_p(c_i) + i); deg f * N when zero at this precision.
  long valuation() const;
  // Residue in F_p of a unit (or any element: the constant coordinate mod p).
  unsigned long residue() const;
  EisensteinElement unit_inverse() const;
  // Square root of a unit whose residue is a square mod p.
  EisensteinElement unit_sqrt() const;
  // Coordinate-wise rational reconstruction (no verification).
  NFElement reconstruct(const FieldPtr& k) const;

 private:
  QPoly f_;
  unsigned long p_ = 0;
  long N_ = 0;
  std::vector<Integer> c_;
  std::vector<Integer> red_;  // integer coefficients of f below the top
  void normalize();
  void check(const EisensteinElement& o) const;
};

// Roots in O_E of a polynomial with O_E coefficients (lowest degree first),
// found by residue-digit descent followed by Newton lifting.
std::vector<EisensteinElement> roots_in_ring(const std::vector<EisensteinElement>& F, int max_depth = 12);

struct SqrtOptions {
  long start_precision = 20;
  long max_precision = 320;
};

// Exact square root in E = Q(alpha) through a Hensel lift in E_p. The sign is
// taken from `pin` when s = -pin, otherwise the first nonzero coordinate is made
// positive.
NFElement nf_sqrt(const NFElement& c, unsigned long p, const NFElement* pin = nullptr, const SqrtOptions& opt = {});

// Parameters (A_i, B_i) of x^2 - A_i x + B_i.
struct QuadraticFactor {
  NFElement A, B;
};

// Factor g(x) = (x - alpha) prod_i (x^2 - A_i x + B_i) over E = Q[x]/(g) for
// deg g in {3, 5}. The result is verified by exact multiplication. `order_pins`
// are reference values of sqrt(d_i) z (z^2 = zsq); when present the factors are
// ordered to match them.
std::vector<QuadraticFactor> lift_quadratic_factors(const QPoly& g, unsigned long p, const Rational& zsq,
                                                    const std::vector<NFElement>& order_pins = {},
                                                    const SqrtOptions& opt = {});

}  // namespace hopfmod::padic

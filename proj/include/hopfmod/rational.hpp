// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfmod {

using Integer = mpz_class;
using Rational = mpq_class;

// Valuation of zero.
inline constexpr long kValInf = std::numeric_limits<long>::max();

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long vp(const Integer& x, unsigned long p);
long vp(const Rational& x, unsigned long p);

// True iff v_p(x) >= 0.
bool p_integral(const Rational& x, unsigned long p);

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational rpow(const Rational& x, long e);
Integer ipow(unsigned long base, unsigned long e);

// Ring interface shared by every scalar kind used in Poly/Matrix.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inverse(const Rational& x) {
  if (sgn(x) == 0) throw MathError("division by zero");
  return Rational(1) / x;
}

namespace detail {
// Unqualified call so that argument-dependent lookup reaches every scalar kind.
template <class T>
bool scalar_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

}  // namespace hopfmod

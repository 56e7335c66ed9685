// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfmod/rational.hpp"

namespace hopfmod {

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;  // the zero polynomial in 0 variables; adapts on use
  explicit MultiPoly(size_t nvars) : n_(nvars) {}
  static MultiPoly constant(size_t nvars, const Rational& c);
  static MultiPoly variable(size_t nvars, size_t i);

  size_t nvars() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  long total_degree() const;
  Rational coeff(const Exponents& e) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Rational eval(const std::vector<Rational>& x) const;
  MultiPoly pow(unsigned e) const;
  // Variables are named prefix1, prefix2, ...
  std::string str(const std::string& prefix = "b") const;

 private:
  size_t n_ = 0;
  std::map<Exponents, Rational> t_;
  void add_term(const Exponents& e, const Rational& c);
  static size_t join(const MultiPoly& a, const MultiPoly& b);
  Exponents widen(const Exponents& e, size_t n) const;
};

inline MultiPoly zero_like(const MultiPoly& x) { return MultiPoly(x.nvars()); }
inline MultiPoly one_like(const MultiPoly& x) { return MultiPoly::constant(x.nvars(), 1); }
inline bool is_zero(const MultiPoly& x) { return x.is_zero(); }

}  // namespace hopfmod

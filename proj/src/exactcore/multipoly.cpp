// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopfmod/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace hopfmod {

MultiPoly MultiPoly::constant(size_t nvars, const Rational& c) {
  MultiPoly m(nvars);
  m.add_term(Exponents(nvars, 0), c);
  return m;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t i) {
  if (i >= nvars) throw MathError("variable index out of range");
  MultiPoly m(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  m.add_term(e, 1);
  return m;
}

long MultiPoly::total_degree() const {
  long d = -1;
  for (auto& [e, c] : t_) {
    long s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = t_.find(widen(e, n_));
  return it == t_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

size_t MultiPoly::join(const MultiPoly& a, const MultiPoly& b) {
  // A polynomial with no variables (a constant) combines with anything.
  if (a.n_ && b.n_ && a.n_ != b.n_) throw MathError("MultiPoly variable count mismatch");
  return std::max(a.n_, b.n_);
}

MultiPoly::Exponents MultiPoly::widen(const Exponents& e, size_t n) const {
  Exponents r = e;
  r.resize(n, 0);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  size_t n = join(*this, o);
  MultiPoly r(n);
  for (auto& [e, c] : t_) r.add_term(widen(e, n), c);
  for (auto& [e, c] : o.t_) r.add_term(widen(e, n), c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(n_);
  for (auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  size_t n = join(*this, o);
  MultiPoly r(n);
  for (auto& [e1, c1] : t_)
    for (auto& [e2, c2] : o.t_) {
      Exponents e = widen(e1, n);
      for (size_t k = 0; k < e2.size(); ++k) e[k] += e2[k];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(n_);
  if (sgn(c) == 0) return r;
  for (auto& [e, v] : t_) r.t_.emplace(e, v * c);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  size_t n = std::max(n_, o.n_);
  if (t_.size() != o.t_.size()) return false;
  for (auto& [e, c] : t_)
    if (o.coeff(widen(e, n)) != c) return false;
  return true;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
  if (x.size() < n_) throw MathError("MultiPoly evaluation point too short");
  Rational s = 0;
  for (auto& [e, c] : t_) {
    Rational m = c;
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k]) m *= rpow(x[k], e[k]);
    s += m;
  }
  return s;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(n_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string MultiPoly::str(const std::string& prefix) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then lexicographically descending exponents.
  std::vector<std::pair<Exponents, Rational>> v(t_.rbegin(), t_.rend());
  std::stable_sort(v.begin(), v.end(), [](auto& a, auto& b) {
    long da = 0, db = 0;
    for (int k : a.first) da += k;
    for (int k : b.first) db += k;
    return da > db;
  });
  for (auto& [e, c] : v) {
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool mono = false;
    for (int k : e) mono |= k > 0;
    bool star = false;
    if (!mono || a != 1) {
      os << a.get_str();
      star = mono;
    }
    for (size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (star) os << "*";
      os << prefix << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
      star = true;
    }
  }
  return os.str();
}

}  // namespace hopfmod

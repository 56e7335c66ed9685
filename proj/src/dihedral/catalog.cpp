// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "hopfmod/dihedral.hpp"

namespace hopfmod::dihedral {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

QPoly xpow(unsigned long k, const Rational& c = 1) { return QPoly::monomial(c, k); }

std::vector<Rational> rv(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Polynomial in alpha from coefficients lowest first, divided by den.
QPoly apoly(std::initializer_list<long> lowest_first, long den = 1) {
  return qpoly(lowest_first).scale(Rational(1, den));
}

std::vector<ExtensionCase> catalog3() {
  std::vector<ExtensionCase> out;
  for (long a : {1, 4, 7}) {
    ExtensionCase c;
    c.id = "radical-a" + std::to_string(a);
    c.p = 3;
    c.f = xpow(3) + QPoly::constant(3 * a);
    c.g = c.f;
    c.family = Family::Radical;
    c.a = a;
    c.zsq = -3;
    c.tsq = Rational(a);
    c.w = xpow(2, Rational(-1, 3 * a));
    c.sqrt_pins = {apoly({0, -3})};
    c.eps_candidates = {rv({1, 1, 1})};
    c.beta_candidates = {rv({1, 1, 1, 1, 1, 1})};
    c.has_fixtures = true;
    out.push_back(c);
  }
  struct Mid {
    long a;
    Rational zsq, tsq;
    QPoly pin;
  };
  for (const Mid& m : {Mid{1, -39, Rational(1, 13), apoly({-12, 9, -6})},
                       Mid{2, -123, Rational(-1, 41), apoly({-48, 9, -12})}}) {
    ExtensionCase c;
    c.id = "middle-a" + std::to_string(m.a);
    c.p = 3;
    c.f = xpow(3) + xpow(1, 3 * m.a) + QPoly::constant(3);
    c.g = c.f;
    c.family = Family::Middle;
    c.a = m.a;
    c.zsq = m.zsq;
    c.tsq = m.tsq;
    c.w = (xpow(2) + QPoly::constant(3 * m.a)).scale(Rational(-1, 3));
    c.sqrt_pins = {m.pin};
    c.eps_candidates = {rv({1, 1, 0})};
    c.beta_candidates = {rv({0, 1, 0, 0, 1, 0})};
    c.has_fixtures = true;
    out.push_back(c);
  }
  ExtensionCase s;
  s.id = "singular";
  s.p = 3;
  s.f = xpow(3) + xpow(2, 3) + QPoly::constant(3);
  s.g = s.f;
  s.family = Family::Singular;
  s.zsq = -7;
  s.sqrt_pins = {apoly({3, 9, 2})};
  s.eps_candidates = {rv({2, -1, 0})};
  s.has_fixtures = true;
  out.push_back(s);
  return out;
}

std::vector<ExtensionCase> catalog5() {
  std::vector<ExtensionCase> out;
  ExtensionCase c1;
  c1.id = "case1";
  c1.p = 5;
  c1.f = xpow(5) + xpow(2, 15) + QPoly::constant(5);
  c1.g = qpoly({30, 75, -10, -15, 0, 1});
  c1.label = "5.1.23765625.1";
  c1.family = Family::Middle;
  c1.a = 3;
  c1.zsq = Rational(-65, 3);
  c1.tsq = Rational(-3, 13);
  c1.w = apoly({395, -20, -75, -2, 5}, 5);
  c1.sqrt_pins = {apoly({-30, -110, -25, 15, 3}, 6), apoly({-30, -270, -75, 25, 11}, 6)};
  out.push_back(c1);

  ExtensionCase c2;
  c2.id = "case2";
  c2.p = 5;
  c2.f = xpow(5) + xpow(2, 10) + QPoly::constant(5);
  c2.g = qpoly({20, 50, -35, 0, 0, 1});
  c2.label = "5.1.34515625.1";
  c2.family = Family::Middle;
  c2.a = 2;
  // The printed square roots only square to d_i z^2 with z^2 = -235.
  c2.zsq = -235;
  c2.tsq = Rational(-2, 47);
  c2.w = apoly({320, -175, 0, -2, 5}, 5);
  c2.sqrt_pins = {apoly({-170, 35, 20, 10, 1}, 2), apoly({-190, -2195, 260, 110, 53}, 42)};
  out.push_back(c2);

  ExtensionCase c3;
  c3.id = "case3";
  c3.p = 5;
  c3.f = xpow(5) + xpow(4, 5) + QPoly::constant(5);
  c3.g = qpoly({60, 150, 125, 50, 10, 1});
  c3.label = "5.1.3515625.1";
  c3.family = Family::TopCoeff;
  c3.zsq = -3;
  c3.sqrt_pins = {apoly({720, 895, 402, 86, 9}, 22), apoly({120, 415, 254, 62, 7}, 22)};
  out.push_back(c3);

  for (auto& c : out) {
    c.eps_candidates = {std::vector<Rational>(5, Rational(1))};
    c.beta_candidates = {std::vector<Rational>(10, Rational(1))};
    c.has_fixtures = true;
  }
  return out;
}

std::vector<ExtensionCase> catalog_generic(unsigned long p) {
  std::vector<ExtensionCase> out;
  long lp = static_cast<long>(p);
  ExtensionCase t;
  t.id = "topcoeff";
  t.p = p;
  t.f = xpow(p) + xpow(p - 1, lp) + QPoly::constant(lp);
  t.family = Family::TopCoeff;
  out.push_back(t);
  for (long a : {2L, lp - 2}) {
    ExtensionCase m;
    m.id = "middle-a" + std::to_string(a);
    m.p = p;
    m.f = xpow(p) + xpow((p - 1) / 2, a * lp) + QPoly::constant(lp);
    m.family = Family::Middle;
    m.a = a;
    out.push_back(m);
  }
  for (auto& c : out) c.g = c.f;
  return out;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Radical:
      return "radical";
    case Family::Middle:
      return "middle";
    case Family::TopCoeff:
      return "topcoeff";
    case Family::Singular:
      return "singular";
  }
  return "?";
}

std::vector<ExtensionCase> catalog(unsigned long p) {
  if (p == 2 || !is_prime(p)) throw MathError("catalog needs an odd prime, got " + std::to_string(p));
  if (p == 3) return catalog3();
  if (p == 5) return catalog5();
  return catalog_generic(p);
}

ExtensionCase find_case(unsigned long p, const std::string& key) {
  auto cs = catalog(p);
  for (auto& c : cs)
    if (c.id == key) return c;
  bool numeric = !key.empty() && std::all_of(key.begin(), key.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  if (numeric) {
    size_t i = std::stoul(key);
    if (i >= 1 && i <= cs.size()) return cs[i - 1];
  }
  throw MathError("unknown case '" + key + "' for p = " + std::to_string(p));
}

std::optional<ExtensionCase> case_for_poly(unsigned long p, const QPoly& f) {
  for (auto& c : catalog(p))
    if (c.f == f || c.g == f) return c;
  return std::nullopt;
}

OreData ore_disc_valuation(const QPoly& f, unsigned long p) {
  long n = f.degree();
  if (!is_eisenstein(f, p)) throw MathError("Ore data needs an Eisenstein polynomial");
  if (n != static_cast<long>(p)) throw MathError("Ore data needs degree p");
  OreData o;
  o.j0 = n;
  for (long i = 1; i < n; ++i) {
    if (sgn(f.coeff(i)) != 0 && vp(f.coeff(i), p) == 1) {
      o.j0 = i;
      break;
    }
  }
  o.val = n + o.j0 - 1;
  QPoly df = f.derivative();
  o.res_sylvester = vp(resultant(f, df), p);
  o.res_euclid = vp(resultant_euclid(f, df), p);
  return o;
}

bool RamificationChain::identity_holds() const {
  long s = 0;
  for (long g : orders) s += g - 1;
  return residue_degree * s == discL_val;
}

RamificationChain ramification_chain(const ExtensionCase& c) {
  RamificationChain r;
  long p = static_cast<long>(c.p);
  std::string dih = c.p == 3 ? "S3" : "D" + std::to_string(2 * p);
  std::string cyc = "C" + std::to_string(p);
  r.discE_val = ore_disc_valuation(c.f, c.p).val;
  switch (c.family) {
    case Family::Radical:
      r.groups = {dih, cyc, cyc, cyc, "1"};
      r.orders = {2 * p, p, p, p, 1};
      r.discL_val = 11;
      r.weakly_ramified = false;
      if (r.discL_val != 2 * r.discE_val + 1) throw MathError("radical chain inconsistent with discriminant of E");
      break;
    case Family::Middle:
      r.groups = {dih, cyc, "1"};
      r.orders = {2 * p, p, 1};
      r.discL_val = 3 * p - 2;
      r.weakly_ramified = true;
      if (r.discL_val != 2 * r.discE_val + 1) throw MathError("middle chain inconsistent with discriminant of E");
      break;
    case Family::TopCoeff:
    case Family::Singular:
      r.groups = {cyc, cyc, "1"};
      r.orders = {p, p, 1};
      r.residue_degree = 2;
      r.discL_val = 4 * (p - 1);
      r.weakly_ramified = true;
      if (r.discL_val != 2 * r.discE_val) throw MathError("top-coefficient chain inconsistent with discriminant of E");
      break;
  }
  return r;
}

}  // namespace hopfmod::dihedral

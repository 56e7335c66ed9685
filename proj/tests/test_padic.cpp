// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <doctest.h>

#include "hopfmod/padic.hpp"
#include "test_util.hpp"

using namespace hopfmod;
using namespace hopfmod::padic;

namespace {

NFElement nf(const FieldPtr& k, std::initializer_list<long> lowest_first, long den = 1) {
  return NFElement::from_poly(k, qpoly(lowest_first)) * Rational(1, den);
}

// (x - alpha) prod (x^2 - A_i x + B_i) over E.
Poly<NFElement> expand(const FieldPtr& k, const std::vector<QuadraticFactor>& fs) {
  NFElement one = NFElement::from_rational(k, 1);
  Poly<NFElement> r = Poly<NFElement>::linear_root(NFElement::alpha(k));
  for (auto& q : fs) r = r * Poly<NFElement>(std::vector<NFElement>{q.B, -q.A, one}, one);
  return r;
}

Poly<NFElement> embed(const FieldPtr& k, const QPoly& g) {
  std::vector<NFElement> c;
  for (auto& x : g.coeffs()) c.push_back(NFElement::from_rational(k, x));
  return Poly<NFElement>(c, NFElement::from_rational(k, 0));
}

}  // namespace

TEST_CASE("hensel_sqrt_unit") {
  CHECK(hensel_sqrt_unit(PadicInt(3, 8, 1)).value() == 1);
  CHECK(hensel_sqrt_unit(PadicInt(5, 8, 4)).value() == 2);
  // Brute-force oracle: the unique r mod 3^5 with r = 1 mod 3 and r^2 = 7.
  long brute = -1;
  for (long r = 0; r < 243; ++r)
    if (r % 3 == 1 && (r * r - 7) % 243 == 0) brute = r;
  REQUIRE(brute >= 0);
  CHECK(hensel_sqrt_unit(PadicInt(3, 5, 7)).value() == brute);
  CHECK_THROWS_AS(hensel_sqrt_unit(PadicInt(3, 5, 2)), MathError);
  CHECK_THROWS_AS(hensel_sqrt_unit(PadicInt(3, 5, 9)), MathError);
}

TEST_CASE("hensel_sqrt_unit squares back for every residue and precision") {
  for (unsigned long p : {3UL, 5UL, 7UL, 11UL})
    for (long N : {1L, 4L, 20L, 64L})
      for (unsigned long c = 1; c < 4 * p; ++c) {
        if (c % p == 0) continue;
        bool residue = false;
        for (unsigned long r = 1; r < p; ++r) residue |= (r * r) % p == c % p;
        PadicInt x(p, N, Integer(c));
        if (!residue) {
          CHECK_THROWS_AS(hensel_sqrt_unit(x), MathError);
          continue;
        }
        PadicInt s = hensel_sqrt_unit(x);
        CHECK(s * s == x);
        unsigned long r0 = mpz_fdiv_ui(s.value().get_mpz_t(), p);
        CHECK((r0 >= 1 && r0 <= (p - 1) / 2));
      }
}

TEST_CASE("rational_reconstruct") {
  CHECK(rational_reconstruct(PadicInt(5, 20, 1)) == 1);
  // 6^{-1} * (-30) mod 5^20.
  Integer m = ipow(5, 20);
  Integer inv6;
  mpz_invert(inv6.get_mpz_t(), Integer(6).get_mpz_t(), m.get_mpz_t());
  Integer x = (inv6 * -30) % m;
  if (x < 0) x += m;
  CHECK(rational_reconstruct(PadicInt(5, 20, x)) == -5);
  Integer inv42;
  mpz_invert(inv42.get_mpz_t(), Integer(42).get_mpz_t(), m.get_mpz_t());
  CHECK(rational_reconstruct(PadicInt(5, 20, inv42), Integer(10000)) == Rational(1, 42));
  // p^N <= 2 bound^2 is refused.
  CHECK_THROWS(rational_reconstruct(PadicInt(5, 4, 3), Integer(100)));
}

TEST_CASE("rational_reconstruct round-trips (randomized)") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-99999, 99999), den(1, 99999);
  for (unsigned long p : {3UL, 5UL}) {
    int tried = 0;
    while (tried < 200) {
      Rational q = testutil::frac(num(rng), den(rng));
      if (!p_integral(q, p)) continue;
      ++tried;
      PadicInt x = PadicInt::from_rational(q, p, 40);
      CHECK(rational_reconstruct(x, Integer(100000)) == q);
    }
  }
}

TEST_CASE("nf_sqrt on case data") {
  // d z^2 for x^3+3 with d = -3 alpha^2, z^2 = -3: the square root is +-3 alpha.
  FieldPtr k = make_field(qpoly({3, 0, 0, 1}));
  NFElement c = nf(k, {0, 0, -3}) * Rational(-3);
  NFElement s = nf_sqrt(c, 3);
  CHECK(s * s == c);
  CHECK((s == nf(k, {0, 3}) || s == nf(k, {0, -3})));
  NFElement pin = nf(k, {0, -3});
  CHECK(nf_sqrt(c, 3, &pin) == pin);

  // x^3+3x+3, z^2 = -39: d = -3 alpha^2 - 12, sqrt(d) z = +-(-6 alpha^2 + 9 alpha - 12).
  FieldPtr km = make_field(qpoly({3, 3, 0, 1}));
  NFElement cm = nf(km, {-12, 0, -3}) * Rational(-39);
  NFElement sm = nf_sqrt(cm, 3);
  NFElement expect = nf(km, {-12, 9, -6});
  CHECK((sm == expect || sm == -expect));
  // A non-square unit residue is refused.
  CHECK_THROWS_AS(nf_sqrt(NFElement::from_rational(km, 2), 3), MathError);
}

TEST_CASE("nf_sqrt round-trips on random units") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> d(-20, 20);
  for (auto [f, p] : {std::pair{qpoly({3, 3, 0, 1}), 3UL}, std::pair{qpoly({5, 0, 15, 0, 0, 1}), 5UL}}) {
    FieldPtr k = make_field(f);
    for (int it = 0; it < 50; ++it) {
      std::vector<Rational> co;
      for (size_t i = 0; i < k->degree(); ++i) co.push_back(d(rng));
      if (vp(co[0], p) > 0) co[0] += 1;
      NFElement u(k, co);
      NFElement s = nf_sqrt(u * u, p);
      CHECK((s == u || s == -u));
    }
  }
}

TEST_CASE("lift_quadratic_factors, p = 3") {
  for (long a : {1, 4, 7}) {
    QPoly g = qpoly({3 * a, 0, 0, 1});
    FieldPtr k = make_field(g);
    auto fs = lift_quadratic_factors(g, 3, -3);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].A == nf(k, {0, -1}));
    CHECK(fs[0].B == nf(k, {0, 0, 1}));
    CHECK(expand(k, fs) == embed(k, g));
  }
  QPoly gs = qpoly({3, 0, 3, 1});
  FieldPtr ks = make_field(gs);
  auto fs = lift_quadratic_factors(gs, 3, -7);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].A == nf(ks, {-3, -1}));
  CHECK(fs[0].B == nf(ks, {0, 3, 1}));
}

TEST_CASE("lift_quadratic_factors, p = 5") {
  QPoly g = qpoly({30, 75, -10, -15, 0, 1});
  FieldPtr k = make_field(g);
  Rational zsq(-65, 3);
  auto fs = lift_quadratic_factors(g, 5, zsq);
  REQUIRE(fs.size() == 2);
  CHECK(expand(k, fs) == embed(k, g));
  std::vector<NFElement> printed = {nf(k, {-30, -110, -25, 15, 3}, 6), nf(k, {-30, -270, -75, 25, 11}, 6)};
  for (auto& q : fs) {
    NFElement dz2 = (q.A * q.A - q.B * Rational(4)) * zsq;
    bool found = false;
    for (auto& s : printed) found |= s * s == dz2;
    CHECK(found);
  }
}

TEST_CASE("EisensteinElement arithmetic") {
  QPoly f = qpoly({3, 0, 0, 1});
  FieldPtr k = make_field(f);
  auto a = EisensteinElement::from_nf(NFElement::alpha(k), 3, 20);
  CHECK(a.valuation() == 1);
  CHECK((a * a * a).valuation() == 3);
  auto u = EisensteinElement::from_nf(nf(k, {1, 1}), 3, 20);
  CHECK(u.valuation() == 0);
  CHECK((u * u.unit_inverse()).reconstruct(k) == NFElement::from_rational(k, 1));
  CHECK_THROWS(EisensteinElement(qpoly({2, 0, 0, 1}), 3, 10, {1, 0, 0}));
}

// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <doctest.h>

#include "hopfmod/matrix.hpp"
#include "hopfmod/multipoly.hpp"
#include "hopfmod/numberfield.hpp"
#include "hopfmod/quadunit.hpp"
#include "test_util.hpp"

using namespace hopfmod;

namespace {

// Exponent of p in n by repeated division.
long trial_vp(long n, long p) {
  long k = 0;
  for (n = n < 0 ? -n : n; n % p == 0; n /= p) ++k;
  return k;
}

}  // namespace

TEST_CASE("vp on integers and rationals") {
  CHECK(vp(Rational(2592), 3) == 4);
  CHECK(vp(Rational(1), 5) == 0);
  CHECK(vp(Rational(-288, 7), 3) == trial_vp(288, 3));
  CHECK(vp(Rational(-288, 7), 3) == 2);
  CHECK(vp(Rational(7, 75), 5) == -2);
  CHECK(vp(Rational(0), 3) == kValInf);
  CHECK(p_integral(Rational(1, 42), 5));
  CHECK_FALSE(p_integral(Rational(1, 15), 5));
}

TEST_CASE("vp is a valuation (randomized)") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-5000, 5000);
  for (unsigned long p : {3UL, 5UL, 7UL}) {
    for (int it = 0; it < 300; ++it) {
      long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
      if (a == 0 || b == 0 || c == 0 || e == 0) continue;
      Rational x = testutil::frac(a, b), y = testutil::frac(c, e);
      CHECK(vp(x * y, p) == vp(x, p) + vp(y, p));
      if (sgn(x + y) != 0) {
        CHECK(vp(x + y, p) >= std::min(vp(x, p), vp(y, p)));
        if (vp(x, p) != vp(y, p)) CHECK(vp(x + y, p) == std::min(vp(x, p), vp(y, p)));
      }
    }
  }
}

TEST_CASE("rationals stay in lowest terms") {
  Rational q = parse_rational("-12/18");
  CHECK(q.get_num() == -2);
  CHECK(q.get_den() == 3);
  CHECK(to_string(q) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), MathError);
  CHECK(rpow(Rational(-2, 3), -3) == Rational(-27, 8));
}

TEST_CASE("polynomial arithmetic") {
  QPoly f = qpoly({3, 0, 0, 1});
  CHECK(f.degree() == 3);
  CHECK(to_string(f) == "x^3 + 3");
  auto [q, r] = f.divmod(qpoly({1, 1}));
  CHECK(q * qpoly({1, 1}) + r == f);
  CHECK(r == QPoly::constant(Rational(2)));
  CHECK(qpoly_gcd(qpoly({-1, 0, 1}), qpoly({1, 1})) == qpoly({1, 1}));
  CHECK(is_eisenstein(f, 3));
  CHECK_FALSE(is_eisenstein(qpoly({3, 3, 1, 1}), 3));
  // Res(f, f') = -27 * 27 for x^3 + 3; both routes agree.
  CHECK(resultant(f, f.derivative()) == resultant_euclid(f, f.derivative()));
  CHECK(resultant(f, f.derivative()) == Rational(243));
}

TEST_CASE("nf_mul and nf_inverse") {
  FieldPtr k = make_field(qpoly({3, 0, 0, 1}));
  NFElement a = NFElement::alpha(k);
  CHECK(a * a.pow(2) == NFElement::from_rational(k, -3));
  NFElement one = NFElement::from_rational(k, 1);
  CHECK(a * one == a);
  // alpha * (-alpha^2/3) = -alpha^3/3 = 1.
  CHECK(a.inverse() == a.pow(2) * Rational(-1, 3));
  CHECK(one.inverse() == one);
  CHECK_THROWS_AS(NFElement::from_rational(k, 0).inverse(), MathError);

  FieldPtr ks = make_field(qpoly({3, 0, 3, 1}));
  NFElement x = NFElement::from_rational(ks, 2) - NFElement::alpha(ks);
  CHECK(x * x.inverse() == NFElement::from_rational(ks, 1));

  FieldPtr k5 = make_field(qpoly({5, 0, 15, 0, 0, 1}));
  NFElement a5 = NFElement::alpha(k5);
  CHECK(a5.inverse() == (a5.pow(4) + a5 * Rational(15)) * Rational(-1, 5));

  FieldPtr other = make_field(qpoly({6, 0, 0, 1}));
  CHECK_THROWS_AS(a * NFElement::alpha(other), MathError);
}

TEST_CASE("NFElement ring axioms (randomized)") {
  std::mt19937_64 rng(7);
  for (const QPoly& f : {qpoly({3, 0, 0, 1}), qpoly({3, 3, 0, 1}), qpoly({5, 0, 15, 0, 0, 1})}) {
    FieldPtr k = make_field(f);
    for (int it = 0; it < 60; ++it) {
      NFElement x = testutil::random_nf(rng, k), y = testutil::random_nf(rng, k), z = testutil::random_nf(rng, k);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(x + y == y + x);
      CHECK(x - x == NFElement::from_rational(k, 0));
      if (!x.is_zero()) CHECK(x * x.inverse() == NFElement::from_rational(k, 1));
    }
  }
}

TEST_CASE("l_mul") {
  FieldPtr k = make_field(qpoly({3, 0, 0, 1}));
  Rational zsq = -3;
  NFElement zero = NFElement::from_rational(k, 0), one = NFElement::from_rational(k, 1);
  LElement z(zero, one, zsq);
  CHECK(z * z == LElement::embed(NFElement::from_rational(k, zsq), zsq));
  CHECK_THROWS_AS(z * LElement(zero, one, Rational(-7)), MathError);

  // Radical family: gamma = t w with w = -alpha^2 z/(3a) and t^2 = a. Then
  // gamma^3 = a t w^3 must equal t z, so w^3 = z/a; gamma^6 = a^3 w^6 = -3a.
  for (long a : {1, 4, 7}) {
    FieldPtr ka = make_field(qpoly({3 * a, 0, 0, 1}));
    NFElement al = NFElement::alpha(ka);
    NFElement za = NFElement::from_rational(ka, 0);
    LElement w(za, al.pow(2) * Rational(-1, 3 * a), zsq);
    LElement w3 = w * w * w;
    CHECK(w3.u().is_zero());
    CHECK(w3 == LElement(za, NFElement::from_rational(ka, Rational(1, a)), zsq));
    LElement w6 = w3 * w3;
    CHECK(w6 * Rational(a * a * a) == LElement::embed(NFElement::from_rational(ka, -3 * a), zsq));
  }
}

TEST_CASE("LElement ring axioms and conjugation (randomized)") {
  std::mt19937_64 rng(13);
  for (auto [f, zsq] : {std::pair{qpoly({3, 3, 0, 1}), Rational(-39)}, std::pair{qpoly({3, 0, 3, 1}), Rational(-7)}}) {
    FieldPtr k = make_field(f);
    for (int it = 0; it < 60; ++it) {
      LElement x(testutil::random_nf(rng, k), testutil::random_nf(rng, k), zsq);
      LElement y(testutil::random_nf(rng, k), testutil::random_nf(rng, k), zsq);
      LElement w(testutil::random_nf(rng, k), testutil::random_nf(rng, k), zsq);
      CHECK((x * y) * w == x * (y * w));
      CHECK(x * (y + w) == x * y + x * w);
      CHECK(x * y == y * x);
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK(x.conj().conj() == x);
      CHECK((x.conj() == x) == x.v().is_zero());
      if (!x.is_zero()) CHECK(x * x.inverse() == LElement::embed(NFElement::from_rational(k, 1), zsq));
    }
  }
}

TEST_CASE("QuadUnitScalar norm form and ring laws (randomized)") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    Rational a = testutil::random_rational(rng, 20);
    if (sgn(a) == 0) continue;
    QuadUnitScalar u(testutil::random_rational(rng, 50), testutil::random_rational(rng, 50), a);
    QuadUnitScalar v(testutil::random_rational(rng, 50), testutil::random_rational(rng, 50), a);
    QuadUnitScalar n = u * u.conj();
    CHECK(n.is_rational());
    CHECK(n.x() == u.x() * u.x() - a * u.y() * u.y());
    CHECK((u * v).conj() == u.conj() * v.conj());
    if (!u.is_zero() && sgn(u.norm()) != 0) CHECK(u * u.inverse() == QuadUnitScalar(1, 0, a));
  }
  QuadUnitScalar t = QuadUnitScalar::t_power(1, 4);
  CHECK(t * t == QuadUnitScalar(4, 0, 4));
  CHECK(QuadUnitScalar::t_power(-1, 4) * t == QuadUnitScalar(1, 0, 4));
  CHECK(QuadUnitScalar::t_power(-3, Rational(1, 13)).valuation(3) == 0);
}

TEST_CASE("determinants") {
  CHECK(det_bareiss(QMatrix::identity(5, Rational(0))) == 1);
  CHECK(det_bareiss(qmatrix({{1, 0, -1}, {0, 3, 0}, {0, 0, 3}})) == 9);
  // ((d1, d1), (d2, -d2)) -> -2 d1 d2.
  MultiPoly d1 = MultiPoly::variable(2, 0), d2 = MultiPoly::variable(2, 1);
  Matrix<MultiPoly> m = Matrix<MultiPoly>::from_rows({{d1, d1}, {d2, -d2}}, MultiPoly(2));
  CHECK(det_expansion(m) == d1 * d2 * Rational(-2));
  CHECK_THROWS_AS(det_bareiss(QMatrix(2, 3, Rational(0))), MathError);
}

TEST_CASE("Bareiss and cofactor expansion agree; inverse (randomized)") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 100; ++it) {
    size_t n = 1 + it % 6;
    QMatrix m = testutil::random_qmatrix(rng, n, n, 9);
    CHECK(det_bareiss(m) == det_expansion(m));
    if (sgn(det_bareiss(m)) != 0) CHECK(m * inverse(m) == QMatrix::identity(n, Rational(0)));
  }
}

TEST_CASE("kronecker products") {
  QMatrix a = qmatrix({{1, 2}, {3, 4}});
  CHECK(kron(a, qmatrix({{1}})) == a);
  CHECK(kron(QMatrix::identity(2, Rational(0)), QMatrix::identity(3, Rational(0))) == QMatrix::identity(6, Rational(0)));
  QMatrix k = kron(a, qmatrix({{0, 1}, {1, 0}}));
  CHECK(k(0, 1) == 1);
  CHECK(k(3, 2) == 4);
  CHECK(k(2, 1) == 3);
}

TEST_CASE("charpoly") {
  QMatrix c = qmatrix({{0, 0, -3}, {1, 0, 0}, {0, 1, 0}});
  CHECK(charpoly(c) == qpoly({3, 0, 0, 1}));
}

TEST_CASE("MultiPoly") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  MultiPoly p = (x + y).pow(3);
  CHECK(p.coeff({2, 1}) == 3);
  CHECK(p.total_degree() == 3);
  CHECK(p.eval({Rational(1), Rational(2)}) == 27);
  CHECK((p - p).is_zero());
  CHECK((x * y).str("e") == "e1*e2");
}

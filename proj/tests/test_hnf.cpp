// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <doctest.h>

#include "hopfmod/hnf.hpp"
#include "test_util.hpp"

using namespace hopfmod;
using namespace hopfmod::hnf;

namespace {

// Entries in Z_(p): numerators in [-h, h], denominators prime to p.
QMatrix random_local(std::mt19937_64& rng, size_t r, size_t c, unsigned long p) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  QMatrix m(r, c, Rational(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) {
      long d = den(rng);
      while (d % static_cast<long>(p) == 0) ++d;
      m(i, j) = testutil::frac(num(rng), d);
    }
  return m;
}

// Random product of elementary row operations invertible over Z_(p).
QMatrix random_unimodular(std::mt19937_64& rng, size_t n, unsigned long p) {
  QMatrix u = QMatrix::identity(n, Rational(0));
  std::uniform_int_distribution<size_t> row(0, n - 1);
  std::uniform_int_distribution<long> c(-9, 9), op(0, 2);
  for (int k = 0; k < 3 * static_cast<int>(n); ++k) {
    size_t i = row(rng), j = row(rng);
    QMatrix e = QMatrix::identity(n, Rational(0));
    switch (op(rng)) {
      case 0:
        if (i != j) e(i, j) = c(rng);
        break;
      case 1: {
        long s = c(rng);
        if (s == 0 || s % static_cast<long>(p) == 0) s = 1;
        e(i, i) = s;
        break;
      }
      default:
        e(i, i) = 0;
        e(j, j) = 0;
        e(i, j) = 1;
        e(j, i) = 1;
        if (i == j) e(i, i) = 1;
    }
    u = e * u;
  }
  return u;
}

QMatrix stack_zero(const QMatrix& d, size_t extra) {
  QMatrix m(d.rows() + extra, d.cols(), Rational(0));
  for (size_t i = 0; i < d.rows(); ++i)
    for (size_t j = 0; j < d.cols(); ++j) m(i, j) = d(i, j);
  return m;
}

// The defining shape of a reduced matrix: upper triangular, diagonal p^k,
// entries above a pivot p^k balanced in (-p^k/2, p^k/2].
void check_shape(const HNFResult& r, unsigned long p) {
  const QMatrix& d = r.D;
  long idx = 0;
  for (size_t j = 0; j < d.cols(); ++j) {
    Rational piv = d(j, j);
    REQUIRE(piv.get_den() == 1);
    Integer pk = ipow(p, r.pivots.at(j));
    CHECK(piv == Rational(pk));
    idx += r.pivots[j];
    for (size_t i = 0; i < d.rows(); ++i) {
      if (i > j) CHECK(sgn(d(i, j)) == 0);
      if (i < j) {
        CHECK(d(i, j).get_den() == 1);
        CHECK(2 * d(i, j) > -Rational(pk));
        CHECK(2 * d(i, j) <= Rational(pk));
      }
    }
  }
  CHECK(idx == r.index);
  CHECK(r.index == vp(det_bareiss(d), p));
}

}  // namespace

TEST_CASE("hnf_reduce on the degree-3 radical action matrix") {
  QMatrix m = qmatrix({{1, 0, 2}, {0, 0, 0}, {0, 0, 0}, {0, -3, 0}, {1, 3, -1}, {0, 0, 0},
                       {0, 0, -6}, {0, 0, 0}, {1, -3, -1}});
  HNFResult r = hnf_reduce(m, 3);
  CHECK(r.D == qmatrix({{1, 0, -1}, {0, 3, 0}, {0, 0, 3}}));
  CHECK(r.index == 2);
  CHECK(check_certificate(m, r, 3));
  check_shape(r, 3);
}

TEST_CASE("hnf_reduce on trivial input and errors") {
  HNFResult r = hnf_reduce(stack_zero(QMatrix::identity(4, Rational(0)), 12), 5);
  CHECK(r.D == QMatrix::identity(4, Rational(0)));
  CHECK(r.index == 0);
  CHECK_THROWS_AS(hnf_reduce(qmatrix({{1, 2}, {2, 4}, {3, 6}}), 3), MathError);
}

TEST_CASE("hnf_reduce factors out powers of p") {
  QMatrix m = qmatrix({{1, 0}, {0, 1}}).scale(Rational(1, 25));
  HNFResult r = hnf_reduce(m, 5);
  CHECK(r.scale == Rational(1, 25));
  CHECK(r.D == QMatrix::identity(2, Rational(0)));
  CHECK(check_certificate(m, r, 5));
}

TEST_CASE("lattice_equal and index_of") {
  QMatrix d = qmatrix({{1, 0, -1}, {0, 3, 0}, {0, 0, 3}});
  QMatrix d2 = d;
  d2(1, 1) = 6;  // row times the 3-unit 2
  CHECK(lattice_equal(d, d2, 3));
  CHECK(lattice_equal(qmatrix({{1, 2}, {0, 3}}), qmatrix({{1, -1}, {0, 3}}), 3));
  CHECK_FALSE(lattice_equal(qmatrix({{1, 0}, {0, 3}}), qmatrix({{1, 0}, {0, 1}}), 3));
  CHECK_THROWS_AS(lattice_equal(qmatrix({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), d, 3), MathError);
  CHECK_FALSE(lattice_equal(qmatrix({{1, 0}, {0, 1}}), d, 3));
  CHECK(index_of(qmatrix({{1, 0, 0}, {0, 3, 0}, {0, 0, 3}}), 3) == 2);
  CHECK(index_of(QMatrix::identity(6, Rational(0)), 3) == 0);
  CHECK(index_of(qmatrix({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 3, 0, 0, 0}, {0, 0, 0, 3, 0, 0},
                          {0, 0, 0, 0, 3, 0}, {0, 0, 0, 0, 0, 3}}),
                 3) == 4);
}

TEST_CASE("integer mode reproduces the quadratic reduced matrix") {
  // Action of {Id, eta} on {1, z}: blocks (1 1 / 0 0) and (0 0 / 1 -1).
  QMatrix m = qmatrix({{1, 1}, {0, 0}, {0, 0}, {1, -1}});
  CHECK(hnf_reduce_integer(m).D == qmatrix({{1, 1}, {0, 2}}));
  // Over Z_(3) the same lattice is everything.
  CHECK(hnf_reduce(m, 3).D == QMatrix::identity(2, Rational(0)));
}

TEST_CASE("hnf properties on 500 random Z_(p) matrices") {
  std::mt19937_64 rng(31);
  int done = 0, attempts = 0;
  while (done < 500) {
    REQUIRE(++attempts < 2000);
    unsigned long p = attempts % 2 ? 3 : 5;
    size_t n = 1 + static_cast<size_t>(attempts % 6);
    size_t rows = n + static_cast<size_t>(rng() % (n * n - n + 1));
    QMatrix m = random_local(rng, rows, n, p);
    // Mix in p-multiples so that nontrivial pivots appear.
    for (size_t i = 0; i < rows; i += 2)
      for (size_t j = 0; j < n; ++j) m(i, j) *= Rational(static_cast<long>(p));
    if (attempts % 7 == 0) m = m.scale(Rational(1, static_cast<long>(p)));
    HNFResult r;
    try {
      r = hnf_reduce(m, p);
    } catch (const MathError&) {
      continue;  // rank deficient draw
    }
    ++done;
    check_shape(r, p);
    CHECK(check_certificate(m, r, p));

    // Idempotence.
    HNFResult again = hnf_reduce(stack_zero(r.D, rows - n), p);
    CHECK(again.D == r.D);

    // Left invariance.
    QMatrix u = random_unimodular(rng, rows, p);
    HNFResult left = hnf_reduce(u * m, p);
    CHECK(left.D == r.D);
    CHECK(left.scale == r.scale);

    // A different valid reduced matrix: same lattice, same index, and the
    // determinants differ by a p-unit.
    HNFResult nn = hnf_reduce(m, p, Residues::NonNegative);
    CHECK(lattice_equal(nn.D, r.D, p));
    CHECK(nn.index == r.index);
    CHECK(vp(det_bareiss(nn.D) / det_bareiss(r.D), p) == 0);
  }
}

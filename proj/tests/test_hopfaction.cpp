// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <doctest.h>

#include "hopfmod/dihedral.hpp"
#include "hopfmod/hopfaction.hpp"
#include "test_util.hpp"

using namespace hopfmod;
using namespace hopfmod::hopfaction;

namespace {

NFElement nf(const FieldPtr& k, std::initializer_list<long> lowest_first) {
  return NFElement::from_poly(k, qpoly(lowest_first));
}

// Gram matrix of x^3 + 12 with the Hopf basis w1, w2, w3.
Matrix<NFElement> radical_a4_gram() {
  FieldPtr k = make_field(qpoly({12, 0, 0, 1}));
  return Matrix<NFElement>::from_rows({{nf(k, {1}), nf(k, {0, 1}), nf(k, {0, 0, 1})},
                                       {nf(k, {0}), nf(k, {0, -3}), nf(k, {0, 0, 3})},
                                       {nf(k, {2}), nf(k, {0, -1}), nf(k, {0, 0, -1})}},
                                      nf(k, {0}));
}

QMatrix radical_a4_action() {
  return qmatrix({{1, 0, 2}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, -3, -1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0},
                  {1, 3, -1}});
}

// Leibniz formula, used as an oracle for Bareiss and the symbolic route.
Rational leibniz(const QMatrix& m) {
  size_t n = m.rows();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    int inv = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    Rational term = inv % 2 ? -1 : 1;
    for (size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

QMatrix random_gl(std::mt19937_64& rng, size_t n, unsigned long p) {
  while (true) {
    QMatrix u = testutil::random_qmatrix(rng, n, n, 4);
    Rational d = det_bareiss(u);
    if (sgn(d) != 0 && vp(d, p) == 0) return u;
  }
}

}  // namespace

TEST_CASE("gram_to_action on the x^3 + 12 Gram matrix") {
  ActionMatrix a = gram_to_action(radical_a4_gram());
  CHECK(a.n() == 3);
  CHECK(a.stacked() == radical_a4_action());
  CHECK(ActionMatrix::from_stacked(a.stacked()).stacked() == a.stacked());
  CHECK_THROWS_AS(ActionMatrix::from_stacked(qmatrix({{1, 0}, {0, 1}})), MathError);
  CHECK_THROWS_AS(gram_to_action(std::vector<std::vector<std::vector<Rational>>>{{{1, 0}}, {{0, 1}}}), MathError);
}

TEST_CASE("beta_matrix and the generator test") {
  ActionMatrix a = ActionMatrix::from_stacked(radical_a4_action());
  std::vector<Rational> ones(3, Rational(1));
  // Block sum: one nonzero row from each block.
  CHECK(beta_matrix(a, ones) == qmatrix({{1, 0, 2}, {1, -3, -1}, {1, 3, -1}}));
  CHECK(beta_matrix(a, {Rational(1), Rational(0), Rational(0)}) == a.blocks[0]);
  CHECK_THROWS_AS(beta_matrix(a, {Rational(1), Rational(1)}), MathError);

  GeneratorCheck g = is_free_generator(a, ones, 2, 3);
  CHECK(g.det == leibniz(beta_matrix(a, ones)));
  CHECK(g.det == 18);
  CHECK(g.free);
  CHECK(g.valuation == 2);
  GeneratorCheck zero = is_free_generator(a, std::vector<Rational>(3, Rational(0)), 2, 3);
  CHECK_FALSE(zero.free);
  CHECK(sgn(zero.det) == 0);
}

TEST_CASE("1 + alpha generates for x^3 + 3x + 3") {
  auto c = dihedral::find_case(3, "middle-a1");
  auto r = dihedral::degree_p_pipeline(c);
  GeneratorCheck g = is_free_generator(r.action, {Rational(1), Rational(1), Rational(0)}, r.basis.hnf.index, 3);
  CHECK(g.free);
  CHECK(g.valuation == r.basis.hnf.index);
}

TEST_CASE("find_generator sources") {
  ActionMatrix a = ActionMatrix::from_stacked(radical_a4_action());
  GeneratorSearch s = find_generator(a, 2, 3, 10);
  REQUIRE(s.generator);
  CHECK(s.source == "all-ones");
  CHECK(s.tried == 1);
  CHECK(s.valuation == 2);

  // With an index that all-ones misses, a supplied candidate is tried next.
  GeneratorSearch c = find_generator(a, 3, 3, 10, {{Rational(1), Rational(1), Rational(1)}});
  CHECK(c.tried >= 2);
  if (c.generator) CHECK(is_free_generator(a, *c.generator, 3, 3).free);

  // Nothing has valuation 100; the budget bounds the work.
  GeneratorSearch none = find_generator(a, 100, 3, 25);
  CHECK_FALSE(none.generator);
  CHECK(none.tried == 25);
  CHECK_THROWS_AS(find_generator(a, 2, 3, 0), MathError);
}

TEST_CASE("symbolic_determinant") {
  ActionMatrix a = ActionMatrix::from_stacked(radical_a4_action());
  MultiPoly d = symbolic_determinant(a);
  MultiPoly e1 = MultiPoly::variable(3, 0), e2 = MultiPoly::variable(3, 1), e3 = MultiPoly::variable(3, 2);
  CHECK(d == e1 * e2 * e3 * Rational(18));

  ActionMatrix z = ActionMatrix::from_stacked(QMatrix(4, 2));
  CHECK(symbolic_determinant(z).is_zero());

  ActionMatrix big = ActionMatrix::from_stacked(QMatrix(49, 7));
  CHECK_THROWS_AS(symbolic_determinant(big), MathError);
}

TEST_CASE("symbolic and numeric determinants agree at random beta") {
  std::mt19937_64 rng(37);
  for (auto [id, p] : {std::pair{"radical-a1", 3UL}, std::pair{"middle-a2", 3UL}, std::pair{"singular", 3UL},
                       std::pair{"case1", 5UL}}) {
    auto r = dihedral::degree_p_pipeline(dihedral::find_case(p, id));
    MultiPoly d = symbolic_determinant(r.action);
    for (int it = 0; it < 50; ++it) {
      std::vector<Rational> beta;
      for (size_t i = 0; i < r.action.n(); ++i) beta.push_back(testutil::random_rational(rng, 30));
      QMatrix s = beta_matrix(r.action, beta);
      CHECK(d.eval(beta) == det_bareiss(s));
      if (s.rows() <= 5) CHECK(det_bareiss(s) == leibniz(s));
    }
  }
}

TEST_CASE("a Z_(p)-unimodular change of field basis keeps the order and its index") {
  std::mt19937_64 rng(41);
  for (auto [id, p] : {std::pair{"radical-a4", 3UL}, std::pair{"middle-a1", 3UL}, std::pair{"case2", 5UL}}) {
    auto r = dihedral::degree_p_pipeline(dihedral::find_case(p, id));
    for (int it = 0; it < 10; ++it) {
      QMatrix P = random_gl(rng, r.action.n(), p);
      ActionMatrix moved = change_basis_right(r.action, P);
      AssocOrderBasis b = assoc_order_basis(moved, p);
      CHECK(b.hnf.index == r.basis.hnf.index);
      CHECK(hnf::lattice_equal(b.hnf.D, r.basis.hnf.D, p));
      CHECK(b.integral);
    }
  }
}

TEST_CASE("the associated order is integral and maximal") {
  for (auto [id, p] : {std::pair{"radical-a1", 3UL}, std::pair{"middle-a2", 3UL}, std::pair{"singular", 3UL},
                       std::pair{"case1", 5UL}, std::pair{"case3", 5UL}}) {
    auto r = dihedral::degree_p_pipeline(dihedral::find_case(p, id));
    const QMatrix& C = r.basis.coeffs;
    CHECK(action_integral(r.action, C, p));
    // Dividing any basis vector by p leaves the order.
    for (size_t i = 0; i < C.cols(); ++i) {
      QMatrix bigger = C;
      for (size_t k = 0; k < C.rows(); ++k) bigger(k, i) /= Rational(static_cast<long>(p));
      CHECK_FALSE(action_integral(r.action, bigger, p));
    }
  }
}

TEST_CASE("render_combination") {
  HopfBasis w = HopfBasis::numbered("w", 3);
  CHECK(render_combination({Rational(1), Rational(0), Rational(0)}, w) == "w1");
  CHECK(render_combination({Rational(0), Rational(1, 3), Rational(0)}, w) == "w2/3");
  CHECK(render_combination({Rational(1, 3), Rational(0), Rational(1, 3)}, w) == "(w1 + w3)/3");
  CHECK(render_combination({Rational(-2, 3), Rational(0), Rational(0)}, w) == "(-2w1)/3");
  CHECK(render_combination({Rational(0), Rational(0), Rational(0)}, w) == "0");
  HopfBasis pr = HopfBasis::product(HopfBasis::numbered("w", 2), HopfBasis::numbered("eta", 2));
  CHECK(pr.labels == std::vector<std::string>{"w1*eta1", "w1*eta2", "w2*eta1", "w2*eta2"});
}

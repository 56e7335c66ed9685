// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopfmod/hopfaction.hpp"

#include <sstream>

namespace hopfmod::hopfaction {

HopfBasis HopfBasis::numbered(const std::string& stem, size_t n) {
  HopfBasis b;
  for (size_t i = 1; i <= n; ++i) b.labels.push_back(stem + std::to_string(i));
  return b;
}

HopfBasis HopfBasis::product(const HopfBasis& a, const HopfBasis& b) {
  HopfBasis r;
  for (auto& x : a.labels)
    for (auto& y : b.labels) r.labels.push_back(x + "*" + y);
  return r;
}

QMatrix ActionMatrix::stacked() const {
  size_t n = blocks.size();
  QMatrix m(n * n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i) m(n * j + k, i) = blocks[j](k, i);
  return m;
}

ActionMatrix ActionMatrix::from_stacked(const QMatrix& M) {
  size_t n = M.cols();
  if (M.rows() != n * n) throw MathError("stacked action matrix must be n^2 x n");
  ActionMatrix a;
  for (size_t j = 0; j < n; ++j) a.blocks.push_back(M.block(n * j, 0, n, n));
  return a;
}

ActionMatrix gram_to_action(const std::vector<std::vector<std::vector<Rational>>>& coords) {
  size_t n = coords.size();
  ActionMatrix a;
  a.blocks.assign(n, QMatrix(n, n));
  for (size_t i = 0; i < n; ++i) {
    if (coords[i].size() != n) throw MathError("Gram matrix is not square");
    for (size_t j = 0; j < n; ++j) {
      if (coords[i][j].size() != n) throw MathError("Gram entry is not in the span of the field basis");
      for (size_t k = 0; k < n; ++k) a.blocks[j](k, i) = coords[i][j][k];
    }
  }
  return a;
}

ActionMatrix gram_to_action(const Matrix<NFElement>& G) {
  size_t n = G.rows();
  std::vector<std::vector<std::vector<Rational>>> c(n, std::vector<std::vector<Rational>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const NFElement& e = G(i, j);
      if (e.bound() && e.field()->degree() != n) throw MathError("Gram entry field degree mismatch");
      for (size_t k = 0; k < n; ++k) c[i][j].push_back(e.coord(k));
    }
  return gram_to_action(c);
}

ActionMatrix gram_to_action(const Matrix<LElement>& G) {
  size_t n = G.rows();
  if (n % 2) throw MathError("tensor-basis Gram matrix must have even size");
  std::vector<std::vector<std::vector<Rational>>> c(n, std::vector<std::vector<Rational>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const LElement& e = G(i, j);
      if (!e.bound()) {
        c[i][j].assign(n, Rational(0));
        continue;
      }
      if (e.u().field()->degree() * 2 != n) throw MathError("Gram entry field degree mismatch");
      c[i][j] = e.coords(n / 2);
    }
  return gram_to_action(c);
}

ActionMatrix change_basis_right(const ActionMatrix& M, const QMatrix& P) {
  size_t n = M.n();
  if (P.rows() != n || P.cols() != n) throw MathError("change of basis has the wrong size");
  QMatrix Pinv = inverse(P);
  ActionMatrix out;
  for (size_t j = 0; j < n; ++j) {
    QMatrix S(n, n);
    for (size_t k = 0; k < n; ++k)
      if (sgn(P(k, j)) != 0) S = S + M.blocks[k].scale(P(k, j));
    out.blocks.push_back(Pinv * S);
  }
  return out;
}

ActionMatrix change_basis_right(const ActionMatrix& M, const Matrix<QuadUnitScalar>& P,
                                const Matrix<QuadUnitScalar>& Pinv) {
  size_t n = M.n();
  if (P.rows() != n || P.cols() != n || Pinv.rows() != n) throw MathError("change of basis has the wrong size");
  QuadUnitScalar like = P(0, 0);
  if (!(P * Pinv == Matrix<QuadUnitScalar>::identity(n, like))) throw MathError("supplied inverse is not an inverse");
  std::vector<Matrix<QuadUnitScalar>> lifted;
  for (auto& b : M.blocks)
    lifted.push_back(b.map([&](const Rational& x) { return QuadUnitScalar::rational(x, like.a()); }, like));
  ActionMatrix out;
  for (size_t j = 0; j < n; ++j) {
    Matrix<QuadUnitScalar> S(n, n, like);
    for (size_t k = 0; k < n; ++k)
      if (!P(k, j).is_zero()) S = S + lifted[k].scale(P(k, j));
    Matrix<QuadUnitScalar> T = Pinv * S;
    QMatrix B(n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        if (!T(r, c).is_rational())
          throw MathError("action matrix is not t-free at block " + std::to_string(j + 1));
        B(r, c) = T(r, c).x();
      }
    out.blocks.push_back(std::move(B));
  }
  return out;
}

Matrix<LElement> change_basis_right(const Matrix<LElement>& G, const Matrix<LElement>& P) { return G * P; }

bool action_integral(const ActionMatrix& M, const QMatrix& C, unsigned long p) {
  for (auto& b : M.blocks)
    if (!all_p_integral(b * C, p)) return false;
  return true;
}

AssocOrderBasis assoc_order_basis(const ActionMatrix& M, unsigned long p) {
  AssocOrderBasis out;
  out.hnf = hnf::hnf_reduce(M.stacked(), p);
  out.coeffs = inverse(out.hnf.D.scale(out.hnf.scale));
  out.integral = action_integral(M, out.coeffs, p);
  return out;
}

std::string render_combination(const std::vector<Rational>& v, const HopfBasis& w) {
  Integer den = 1;
  for (auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::ostringstream os;
  int terms = 0;
  for (size_t l = 0; l < v.size(); ++l) {
    if (sgn(v[l]) == 0) continue;
    Rational c = v[l] * den;
    Integer a = abs(c.get_num());
    if (terms == 0)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    if (a != 1) os << a.get_str();
    os << w.labels.at(l);
    ++terms;
  }
  if (terms == 0) return "0";
  if (den == 1) return os.str();
  std::string body = os.str();
  if (terms > 1 || body[0] == '-') body = "(" + body + ")";
  return body + "/" + den.get_str();
}

std::vector<std::string> AssocOrderBasis::render(const HopfBasis& w) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < coeffs.cols(); ++i) out.push_back(render_combination(coeffs.column(i), w));
  return out;
}

QMatrix beta_matrix(const ActionMatrix& M, const std::vector<Rational>& beta) {
  size_t n = M.n();
  if (beta.size() != n) throw MathError("beta has the wrong length");
  QMatrix S(n, n);
  for (size_t j = 0; j < n; ++j)
    if (sgn(beta[j]) != 0) S = S + M.blocks[j].scale(beta[j]);
  return S;
}

GeneratorCheck is_free_generator(const ActionMatrix& M, const std::vector<Rational>& beta, long index,
                                 unsigned long p) {
  GeneratorCheck g;
  g.det = det_bareiss(beta_matrix(M, beta));
  if (sgn(g.det) == 0) return g;
  g.valuation = vp(g.det, p);
  g.free = g.valuation == index;
  return g;
}

GeneratorSearch find_generator(const ActionMatrix& M, long index, unsigned long p, long budget,
                               const std::vector<std::vector<Rational>>& candidates) {
  if (budget < 1) throw MathError("find_generator needs a positive budget");
  size_t n = M.n();
  GeneratorSearch s;
  auto attempt = [&](const std::vector<Rational>& b, const char* src) {
    if (s.tried >= budget) return false;
    ++s.tried;
    GeneratorCheck g = is_free_generator(M, b, index, p);
    if (!g.free) return false;
    s.generator = b;
    s.source = src;
    s.valuation = g.valuation;
    return true;
  };
  if (attempt(std::vector<Rational>(n, Rational(1)), "all-ones")) return s;
  for (auto& c : candidates)
    if (c.size() == n && attempt(c, "candidate")) return s;
  // Odometer over {-2, ..., 2}^n starting from the zero vector.
  std::vector<int> d(n, 0);
  static const int kDigits[5] = {0, 1, -1, 2, -2};
  while (s.tried < budget) {
    size_t i = 0;
    while (i < n && d[i] == 4) d[i++] = 0;
    if (i == n) break;
    ++d[i];
    std::vector<Rational> b;
    for (int x : d) b.emplace_back(kDigits[x]);
    if (attempt(b, "search")) return s;
  }
  return s;
}

MultiPoly symbolic_determinant(const ActionMatrix& M) {
  size_t n = M.n();
  if (n > kSymbolicLimit) throw MathError("symbolic determinant refused above size 6; evaluate instead");
  Matrix<MultiPoly> S(n, n, MultiPoly(n));
  for (size_t j = 0; j < n; ++j) {
    MultiPoly b = MultiPoly::variable(n, j);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c)
        if (sgn(M.blocks[j](r, c)) != 0) S(r, c) = S(r, c) + b * M.blocks[j](r, c);
  }
  return det_expansion(S);
}

}  // namespace hopfmod::hopfaction

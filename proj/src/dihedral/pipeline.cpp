// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopfmod/dihedral.hpp"

namespace hopfmod::dihedral {

using hopfaction::ActionMatrix;
using hopfaction::HopfBasis;

namespace {

void require_lifting(const ExtensionCase& c) {
  if (!c.has_fixtures || c.sqrt_pins.empty())
    throw MathError("unavailable: quadratic-factor data exists only for p in {3, 5}");
}

void require_ramified(const ExtensionCase& c) {
  if (!c.totally_ramified() || !c.w) throw MathError("case " + c.id + " has an unramified quadratic part");
}

NFElement in_field(const FieldPtr& k, const QPoly& a) { return NFElement::from_poly(k, a); }

// A_i, B_i from d_i = (sqrt(d_i) z)^2 / z^2 by solving the Vieta system of
// f_1 = P_1 P_2 linearly: A_1 (d_1 - d_2) = c_3 (A_1 A_2 - d_1) - 4 c_1 with
// A_1 A_2 = (4 c_2 - c_3^2 + d_1 + d_2) / 2.
std::vector<padic::QuadraticFactor> factors_from_roots(const Poly<NFElement>& f1, const std::vector<NFElement>& d) {
  NFElement c3 = f1.coeff(3), c2 = f1.coeff(2), c1 = f1.coeff(1);
  NFElement prod = (c2 * Rational(4) - c3 * c3 + d[0] + d[1]) * Rational(1, 2);
  NFElement A1 = (c3 * (prod - d[0]) - c1 * Rational(4)) * (d[0] - d[1]).inverse();
  NFElement A2 = -c3 - A1;
  NFElement B1 = (A1 * A1 - d[0]) * Rational(1, 4), B2 = (A2 * A2 - d[1]) * Rational(1, 4);
  return {{A1, B1}, {A2, B2}};
}

Matrix<LElement> embed_gram(const Matrix<NFElement>& G, const Rational& zsq) {
  LElement like = LElement::embed(G(0, 0), zsq);
  return G.map([&](const NFElement& x) { return LElement::embed(x, zsq); }, like);
}

// The basis element alpha^{m/2} z^{m%2} of the interleaved tensor basis.
LElement tensor_basis(const FieldPtr& k, const Rational& zsq, size_t m) {
  NFElement a = NFElement::alpha(k).pow(m / 2);
  return m % 2 ? LElement(zero_like(a), a, zsq) : LElement::embed(a, zsq);
}

struct DegreePCore {
  DegreePData data;
  Matrix<NFElement> gram;
  ActionMatrix action;
  hopfaction::AssocOrderBasis basis;
};

DegreePCore degree_p_core(const ExtensionCase& c, LiftMode mode, const padic::SqrtOptions& opt) {
  DegreePCore r;
  r.data = degree_p_data(c, mode, opt);
  r.gram = gram_degree_p(c, r.data);
  r.action = hopfaction::gram_to_action(r.gram);
  r.basis = hopfaction::assoc_order_basis(r.action, c.p);
  return r;
}

}  // namespace

std::pair<NFElement, NFElement> lucas(const NFElement& A, const NFElement& B, long j) {
  if (j < 0) throw MathError("Lucas index must be non-negative");
  NFElement U0 = zero_like(A), U1 = one_like(A);
  NFElement V0 = one_like(A) * Rational(2), V1 = A;
  if (j == 0) return {U0, V0};
  for (long i = 1; i < j; ++i) {
    NFElement U2 = A * U1 - B * U0, V2 = A * V1 - B * V0;
    U0 = U1;
    U1 = U2;
    V0 = V1;
    V1 = V2;
  }
  return {U1, V1};
}

DegreePData degree_p_data(const ExtensionCase& c, LiftMode mode, const padic::SqrtOptions& opt) {
  require_lifting(c);
  DegreePData d;
  d.field = make_field(c.g);
  std::vector<NFElement> pins;
  for (auto& q : c.sqrt_pins) pins.push_back(in_field(d.field, q));
  if (mode == LiftMode::Generic) {
    d.factors = padic::lift_quadratic_factors(c.g, c.p, c.zsq, pins, opt);
    for (size_t i = 0; i < d.factors.size(); ++i) {
      const auto& q = d.factors[i];
      NFElement disc = q.A * q.A - q.B * Rational(4);
      d.sqrt_dz.push_back(padic::nf_sqrt(disc * c.zsq, c.p, &pins[i], opt));
    }
  } else {
    NFElement a = NFElement::alpha(d.field);
    std::vector<NFElement> gc;
    for (long i = 0; i <= c.g.degree(); ++i) gc.push_back(NFElement::from_rational(d.field, c.g.coeff(i)));
    Poly<NFElement> f1 = Poly<NFElement>(gc, a) / Poly<NFElement>::linear_root(a);
    if (c.p == 3) {
      d.factors = {{-f1.coeff(1), f1.coeff(0)}};
    } else {
      std::vector<NFElement> dd;
      for (auto& s : pins) dd.push_back(s * s * inverse(c.zsq));
      d.factors = factors_from_roots(f1, dd);
    }
    d.sqrt_dz = pins;
    Poly<NFElement> prod = Poly<NFElement>::linear_root(a);
    NFElement one = one_like(a);
    for (auto& q : d.factors) prod = prod * Poly<NFElement>(std::vector<NFElement>{q.B, -q.A, one}, a);
    if (prod != Poly<NFElement>(gc, a)) throw MathError("fixture square roots do not factor g");
  }
  for (size_t i = 0; i < d.factors.size(); ++i) {
    const auto& q = d.factors[i];
    NFElement disc = q.A * q.A - q.B * Rational(4);
    if (d.sqrt_dz[i] * d.sqrt_dz[i] != disc * c.zsq) throw MathError("sqrt(d) z does not square to d z^2");
  }
  return d;
}

Matrix<NFElement> gram_degree_p(const ExtensionCase& c, const DegreePData& d) {
  size_t p = c.p, m = (p - 1) / 2;
  if (d.factors.size() != m || d.sqrt_dz.size() != m) throw MathError("degree-p data has the wrong number of factors");
  NFElement a = NFElement::alpha(d.field);
  Matrix<NFElement> G(p, p, a);
  for (size_t j = 0; j < p; ++j) {
    G(0, j) = a.pow(j);
    for (size_t i = 0; i < m; ++i) {
      auto [U, V] = lucas(d.factors[i].A, d.factors[i].B, static_cast<long>(j));
      G(1 + i, j) = U * d.sqrt_dz[i];
      G(1 + m + i, j) = V;
    }
  }
  return G;
}

HopfBasis degree_p_basis(unsigned long p) { return HopfBasis::numbered("w", p); }

DegreePResult degree_p_pipeline(const ExtensionCase& c, long budget, LiftMode mode, const padic::SqrtOptions& opt) {
  DegreePCore core = degree_p_core(c, mode, opt);
  DegreePResult r;
  r.gram = core.gram;
  r.action = core.action;
  r.basis = core.basis;
  r.basis_labels = r.basis.render(degree_p_basis(c.p));
  if (c.p <= hopfaction::kSymbolicLimit) r.d_eps = hopfaction::symbolic_determinant(r.action);
  r.generator = hopfaction::find_generator(r.action, r.basis.hnf.index, c.p, budget, c.eps_candidates);
  return r;
}

bool QuadraticStructure::predicate(const Rational& d1, const Rational& d2) const {
  Rational pr = d1 * d2;
  return sgn(pr) != 0 && vp(pr, p) == 0;
}

QuadraticStructure quadratic_structure(const Rational& zsq, unsigned long p) {
  if (p == 2) throw MathError("quadratic structure needs an odd prime");
  QuadraticStructure q;
  q.p = p;
  FieldPtr k = make_field(qpoly({0, 1}));
  NFElement one = NFElement::from_rational(k, 1), zero = NFElement::from_rational(k, 0);
  LElement l1 = LElement::embed(one, zsq), z(zero, one, zsq);
  q.gram = Matrix<LElement>::from_rows({{l1, z}, {l1, -z}}, l1);
  q.action = hopfaction::gram_to_action(q.gram);
  q.basis = hopfaction::assoc_order_basis(q.action, p);
  q.integer_hnf = hnf::hnf_reduce_integer(q.action.stacked());
  q.basis_labels = q.basis.render(HopfBasis::numbered("eta", 2));
  return q;
}

GammaPowers gamma_powers_matrix(const ExtensionCase& c) {
  require_ramified(c);
  FieldPtr k = make_field(c.g);
  size_t p = c.p, n = 2 * p;
  NFElement w = in_field(k, *c.w);
  LElement wz(zero_like(w), w, c.zsq);
  GammaPowers g;
  g.a = *c.tsq;
  g.R = QMatrix(n, n);
  LElement x = one_like(wz);
  for (size_t j = 0; j < n; ++j) {
    auto col = x.coords(p);
    for (size_t i = 0; i < n; ++i) g.R(i, j) = col[i];
    x = x * wz;
  }
  if (sgn(det_bareiss(g.R)) == 0) throw MathError("gamma is not primitive: its powers are dependent");
  QMatrix Ri = inverse(g.R);
  QuadUnitScalar like = QuadUnitScalar::rational(0, g.a);
  g.P = Matrix<QuadUnitScalar>(n, n, like);
  g.Pinv = Matrix<QuadUnitScalar>(n, n, like);
  for (size_t k2 = 0; k2 < n; ++k2) {
    QuadUnitScalar tk = QuadUnitScalar::t_power(static_cast<long>(k2), g.a);
    QuadUnitScalar tinv = QuadUnitScalar::t_power(-static_cast<long>(k2), g.a);
    for (size_t i = 0; i < n; ++i) {
      g.P(i, k2) = tk * g.R(i, k2);
      g.Pinv(k2, i) = tinv * Ri(k2, i);
    }
  }
  return g;
}

MinPolyGamma min_poly_gamma(const ExtensionCase& c) {
  require_ramified(c);
  FieldPtr k = make_field(c.g);
  size_t p = c.p, n = 2 * p;
  Rational a = *c.tsq;
  NFElement w = in_field(k, *c.w);
  LElement wz(zero_like(w), w, c.zsq);
  QMatrix mult(n, n);
  for (size_t m = 0; m < n; ++m) {
    auto col = (wz * tensor_basis(k, c.zsq, m)).coords(p);
    for (size_t i = 0; i < n; ++i) mult(i, m) = col[i];
  }
  QPoly chi = charpoly(mult);
  std::vector<Rational> coef(n + 1);
  for (size_t e = 0; e <= n; ++e) {
    if (e % 2) {
      if (sgn(chi.coeff(e)) != 0) throw MathError("characteristic polynomial of w z is not even");
      continue;
    }
    coef[e] = chi.coeff(e) * rpow(a, static_cast<long>((n - e) / 2));
  }
  MinPolyGamma out;
  out.poly = QPoly(coef);
  out.squarefree = qpoly_gcd(out.poly, out.poly.derivative()).degree() == 0;
  // gamma^e = a^{e/2} (w z)^e for even e; only even powers occur.
  LElement acc = zero_like(wz), pw = one_like(wz), wz2 = wz * wz;
  for (size_t e = 0; e <= n; e += 2) {
    acc = acc + pw * (out.poly.coeff(e) * rpow(a, static_cast<long>(e / 2)));
    pw = pw * wz2;
  }
  out.annihilates = acc.is_zero();
  out.eisenstein = is_eisenstein(out.poly, c.p);
  // Dual route: coordinates of gamma^{2p} in the gamma-power basis are the
  // negated lower coefficients.
  GammaPowers g = gamma_powers_matrix(c);
  LElement top = one_like(wz);
  for (size_t e = 0; e < n; ++e) top = top * wz;
  auto tb = top.coords(p);
  bool ok = true;
  for (size_t r = 0; r < n && ok; ++r) {
    QuadUnitScalar s = QuadUnitScalar::rational(0, a);
    for (size_t m = 0; m < n; ++m) s = s + g.Pinv(r, m) * (tb[m] * rpow(a, static_cast<long>(p)));
    ok = s.is_rational() && s.x() == -out.poly.coeff(r);
  }
  out.dual_route = ok;
  if (!out.squarefree) throw MathError("minimal polynomial of gamma is not squarefree");
  return out;
}

InducedResult induced_pipeline(const ExtensionCase& c, long budget, LiftMode mode, const padic::SqrtOptions& opt) {
  DegreePCore core = degree_p_core(c, mode, opt);
  size_t p = c.p, n = 2 * p;
  InducedResult r;
  r.degree_p_D = core.basis.hnf.D;
  FieldPtr k = core.data.field;
  Matrix<LElement> G1 = embed_gram(core.gram, c.zsq);
  LElement one = LElement::embed(NFElement::from_rational(k, 1), c.zsq);
  LElement z(NFElement::from_rational(k, 0), NFElement::from_rational(k, 1), c.zsq);
  Matrix<LElement> G2 = Matrix<LElement>::from_rows({{one, z}, {one, -z}}, one);
  r.gram_tensor = kron(G1, G2);
  ActionMatrix MB = hopfaction::gram_to_action(r.gram_tensor);
  if (c.totally_ramified()) {
    GammaPowers g = gamma_powers_matrix(c);
    r.action = hopfaction::change_basis_right(MB, g.P, g.Pinv);
  } else {
    r.action = MB;
  }
  r.gram_gamma.assign(n, std::vector<QPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<Rational> cf(n);
      for (size_t m = 0; m < n; ++m) cf[m] = r.action.blocks[j](m, i);
      r.gram_gamma[i][j] = QPoly(cf);
    }
  r.basis = hopfaction::assoc_order_basis(r.action, p);
  HopfBasis W = HopfBasis::product(degree_p_basis(p), HopfBasis::numbered("eta", 2));
  r.basis_labels = r.basis.render(W);
  QMatrix tensorD = kron(r.degree_p_D, QMatrix::identity(2, Rational(0)));
  r.tensor_equal = hnf::lattice_equal(r.basis.hnf.D, tensorD, p);
  if (n <= hopfaction::kSymbolicLimit) r.d_beta = hopfaction::symbolic_determinant(r.action);
  r.generator = hopfaction::find_generator(r.action, r.basis.hnf.index, p, budget, c.beta_candidates);
  return r;
}

std::vector<QuadUnitScalar> beta_prime_coords(const ExtensionCase& c, const std::vector<Rational>& eps,
                                              const std::vector<Rational>& delta) {
  size_t p = c.p, n = 2 * p;
  if (eps.size() != p || delta.size() != 2) throw MathError("product check needs |eps| = p and |delta| = 2");
  FieldPtr k = make_field(c.g);
  NFElement e = NFElement(k, eps);
  LElement bp(e * delta[0], e * delta[1], c.zsq);
  auto cb = bp.coords(p);
  Rational a = c.totally_ramified() ? *c.tsq : Rational(1);
  std::vector<QuadUnitScalar> out;
  if (!c.totally_ramified()) {
    for (auto& x : cb) out.push_back(QuadUnitScalar::rational(x, a));
    return out;
  }
  GammaPowers g = gamma_powers_matrix(c);
  for (size_t kk = 0; kk < n; ++kk) {
    QuadUnitScalar s = QuadUnitScalar::rational(0, a);
    for (size_t m = 0; m < n; ++m) s = s + g.Pinv(kk, m) * cb[m];
    out.push_back(s);
  }
  return out;
}

ProductCheck product_generator_check(const ExtensionCase& c, const InducedResult& r, const std::vector<Rational>& eps,
                                     const std::vector<Rational>& delta) {
  size_t n = 2 * c.p;
  Rational a = c.totally_ramified() ? *c.tsq : Rational(1);
  ProductCheck out;
  out.index = r.basis.hnf.index;
  out.beta_prime = beta_prime_coords(c, eps, delta);
  QuadUnitScalar like = QuadUnitScalar::rational(0, a);
  Matrix<QuadUnitScalar> S(n, n, like);
  for (size_t kk = 0; kk < n; ++kk) {
    if (out.beta_prime[kk].is_zero()) continue;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (sgn(r.action.blocks[kk](i, j)) != 0) S(i, j) = S(i, j) + out.beta_prime[kk] * r.action.blocks[kk](i, j);
  }
  out.det = det_expansion(S);
  out.valuation = out.det.is_zero() ? kValInf : padic::quad_unit_valuation(out.det, c.p);
  out.generator = out.valuation == out.index;
  return out;
}

}  // namespace hopfmod::dihedral

// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopfmod/hnf.hpp"

namespace hopfmod::hnf {

namespace {

void swap_rows(QMatrix& a, size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void scale_row(QMatrix& a, size_t i, const Rational& s) {
  for (size_t c = 0; c < a.cols(); ++c) a(i, c) *= s;
}

// row_i -= q * row_j
void axpy_row(QMatrix& a, size_t i, size_t j, const Rational& q) {
  if (sgn(q) == 0) return;
  for (size_t c = 0; c < a.cols(); ++c)
    if (sgn(a(j, c)) != 0) a(i, c) -= q * a(j, c);
}

// Representative of x modulo m = p^k (x p-integral).
Integer residue(const Rational& x, const Integer& m, Residues res) {
  Integer inv, r;
  if (!mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), m.get_mpz_t())) throw MathError("residue of a non-integral entry");
  r = x.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  if (res == Residues::Balanced && 2 * r > m) r -= m;
  return r;
}

}  // namespace

HNFResult hnf_reduce(const QMatrix& M, unsigned long p, Residues res) {
  size_t R = M.rows(), n = M.cols();
  if (R < n) throw MathError("hnf_reduce needs at least as many rows as columns");
  HNFResult out;
  long mv = min_valuation(M, p);
  if (mv == kValInf) throw MathError("hnf_reduce: rank deficiency (zero matrix)");
  out.scale = mv < 0 ? rpow(Rational(p), mv) : Rational(1);
  QMatrix A = M.scale(inverse(out.scale));
  QMatrix U = QMatrix::identity(R, Rational(0));
  for (size_t c = 0; c < n; ++c) {
    size_t best = R;
    long bv = kValInf;
    for (size_t r = c; r < R; ++r) {
      if (sgn(A(r, c)) == 0) continue;
      long v = vp(A(r, c), p);
      if (v < bv) {
        bv = v;
        best = r;
      }
    }
    if (best == R) throw MathError("hnf_reduce: rank deficiency in column " + std::to_string(c + 1));
    swap_rows(A, c, best);
    swap_rows(U, c, best);
    Rational pk = rpow(Rational(p), bv);
    Rational unit_inv = pk / A(c, c);
    scale_row(A, c, unit_inv);
    scale_row(U, c, unit_inv);
    out.pivots.push_back(bv);
    for (size_t r = c + 1; r < R; ++r) {
      if (sgn(A(r, c)) == 0) continue;
      Rational q = A(r, c) / A(c, c);
      axpy_row(A, r, c, q);
      axpy_row(U, r, c, q);
    }
  }
  for (size_t c = 0; c < n; ++c) {
    Integer m = ipow(p, static_cast<unsigned long>(out.pivots[c]));
    for (size_t r = 0; r < c; ++r) {
      const Rational e = A(r, c);
      Rational target = m == 1 ? Rational(0) : Rational(residue(e, m, res));
      Rational q = (e - target) / Rational(m);
      axpy_row(A, r, c, q);
      axpy_row(U, r, c, q);
    }
  }
  out.D = A.block(0, 0, n, n);
  out.U = std::move(U);
  for (long k : out.pivots) out.index += k;
  return out;
}

HNFResult hnf_reduce_integer(const QMatrix& M) {
  size_t R = M.rows(), n = M.cols();
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < n; ++j)
      if (M(i, j).get_den() != 1) throw MathError("integer HNF needs integer entries");
  HNFResult out;
  QMatrix A = M;
  QMatrix U = QMatrix::identity(R, Rational(0));
  for (size_t c = 0; c < n; ++c) {
    for (size_t r = c + 1; r < R; ++r) {
      if (sgn(A(r, c)) == 0) continue;
      if (sgn(A(c, c)) == 0) {
        swap_rows(A, c, r);
        swap_rows(U, c, r);
        continue;
      }
      Integer a = A(c, c).get_num(), b = A(r, c).get_num(), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Rational ag(Integer(a / g)), bg(Integer(b / g));
      for (QMatrix* X : {&A, &U}) {
        for (size_t k = 0; k < X->cols(); ++k) {
          Rational x = (*X)(c, k), y = (*X)(r, k);
          (*X)(c, k) = Rational(s) * x + Rational(t) * y;
          (*X)(r, k) = -bg * x + ag * y;
        }
      }
    }
    if (sgn(A(c, c)) == 0) throw MathError("hnf_reduce_integer: rank deficiency");
    if (sgn(A(c, c)) < 0) {
      scale_row(A, c, -1);
      scale_row(U, c, -1);
    }
    out.pivots.push_back(0);
  }
  for (size_t c = 0; c < n; ++c) {
    Integer m = A(c, c).get_num();
    for (size_t r = 0; r < c; ++r) {
      Integer e = A(r, c).get_num(), q;
      mpz_fdiv_q(q.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
      axpy_row(A, r, c, Rational(q));
      axpy_row(U, r, c, Rational(q));
    }
  }
  out.D = A.block(0, 0, n, n);
  out.U = std::move(U);
  return out;
}

bool check_certificate(const QMatrix& M, const HNFResult& r, unsigned long p) {
  QMatrix lhs = r.U * M.scale(inverse(r.scale));
  size_t n = r.D.rows();
  for (size_t i = 0; i < lhs.rows(); ++i)
    for (size_t j = 0; j < lhs.cols(); ++j) {
      Rational want = i < n ? r.D(i, j) : Rational(0);
      if (lhs(i, j) != want) return false;
    }
  if (!all_p_integral(r.U, p)) return false;
  return vp(det_bareiss(r.U), p) == 0;
}

bool lattice_equal(const QMatrix& D1, const QMatrix& D2, unsigned long p) {
  if (D1.rows() != D2.rows() || D1.cols() != D2.cols()) return false;
  if (sgn(det_bareiss(D1)) == 0 || sgn(det_bareiss(D2)) == 0) throw MathError("lattice_equal: singular matrix");
  return all_p_integral(D1 * inverse(D2), p) && all_p_integral(D2 * inverse(D1), p);
}

long index_of(const QMatrix& D, unsigned long p) {
  Rational d = det_bareiss(D);
  if (sgn(d) == 0) throw MathError("index_of: singular matrix");
  return vp(d, p);
}

}  // namespace hopfmod::hnf

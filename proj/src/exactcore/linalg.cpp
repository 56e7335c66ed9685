// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "hopfmod/matrix.hpp"
#include "hopfmod/poly.hpp"

namespace hopfmod {

QPoly qpoly(std::initializer_list<long> lowest_first) {
  std::vector<Rational> c;
  for (long v : lowest_first) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

void qpoly_xgcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) throw MathError("xgcd of two zero polynomials");
  Rational l = inverse(r0.lead());
  g = r0.scale(l);
  s = s0.scale(l);
  t = t0.scale(l);
}

std::string to_string(const QPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = f.degree(); k >= 0; --k) {
    Rational c = f.coeff(k);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1;
    if (k == 0 || !unit) {
      os << a.get_str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

bool is_eisenstein(const QPoly& f, unsigned long p) {
  if (f.degree() < 1 || f.lead() != 1) return false;
  for (long i = 0; i < f.degree(); ++i) {
    if (!p_integral(f.coeff(i), p)) return false;
    long v = vp(f.coeff(i), p);
    if (v < 1) return false;
    if (i == 0 && v != 1) return false;
  }
  return true;
}

Rational resultant(const QPoly& f, const QPoly& g) {
  long m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  size_t N = static_cast<size_t>(m + n);
  QMatrix s(N, N);
  for (long i = 0; i < n; ++i)
    for (long k = 0; k <= m; ++k) s(i, i + k) = f.coeff(m - k);
  for (long i = 0; i < m; ++i)
    for (long k = 0; k <= n; ++k) s(n + i, i + k) = g.coeff(n - k);
  return det_bareiss(s);
}

Rational resultant_euclid(QPoly f, QPoly g) {
  // res(f,g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r) with r = f mod g.
  Rational acc = 1;
  while (true) {
    long m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (n == 0) return acc * rpow(g.lead(), m);
    QPoly r = f % g;
    if (r.is_zero()) return 0;
    long dr = r.degree();
    if ((m * n) % 2) acc = -acc;
    acc *= rpow(g.lead(), m - dr);
    f = std::move(g);
    g = std::move(r);
  }
}

QMatrix qmatrix(const std::vector<std::vector<long>>& rows) {
  size_t c = rows.empty() ? 0 : rows[0].size();
  QMatrix m(rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw MathError("ragged matrix rows");
    for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix qmatrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  size_t c = rows.empty() ? 0 : rows[0].size();
  QMatrix m(rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw MathError("ragged matrix rows");
    for (size_t j = 0; j < c; ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::string>> to_strings(const QMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

Rational det_bareiss(const QMatrix& m) {
  size_t n = m.rows();
  if (n != m.cols()) throw MathError("determinant of non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale /= l;
    for (size_t j = 0; j < n; ++j) {
      Rational v = m(i, j) * l;
      a[i][j] = v.get_num();
    }
  }
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      size_t r = k + 1;
      while (r < n && sgn(a[r][k]) == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1]);
  return d * scale * sign;
}

QMatrix inverse(const QMatrix& m) {
  size_t n = m.rows();
  if (n != m.cols()) throw MathError("inverse of non-square matrix");
  QMatrix a = m, inv = QMatrix::identity(n, Rational(0));
  for (size_t c = 0; c < n; ++c) {
    size_t r = c;
    while (r < n && sgn(a(r, c)) == 0) ++r;
    if (r == n) throw MathError("singular matrix");
    if (r != c)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a(r, j), a(c, j));
        std::swap(inv(r, j), inv(c, j));
      }
    Rational piv = inverse(a(c, c));
    for (size_t j = 0; j < n; ++j) {
      a(c, j) *= piv;
      inv(c, j) *= piv;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

QPoly charpoly(const QMatrix& a) {
  size_t n = a.rows();
  if (n != a.cols()) throw MathError("charpoly of non-square matrix");
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);  // M_0 = 0
  QMatrix id = QMatrix::identity(n, Rational(0));
  for (size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k)/k
    mk = a * mk + id.scale(c[n - k + 1]);
    QMatrix am = a * mk;
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return QPoly(std::move(c));
}

bool all_p_integral(const QMatrix& m, unsigned long p) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!p_integral(m(i, j), p)) return false;
  return true;
}

long min_valuation(const QMatrix& m, unsigned long p) {
  long v = kValInf;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v = std::min(v, vp(m(i, j), p));
  return v;
}

}  // namespace hopfmod

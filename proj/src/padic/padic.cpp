// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopfmod/padic.hpp"

#include <algorithm>
#include <sstream>

namespace hopfmod::padic {

namespace {

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer invert_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw MathError("not a unit modulo p^N");
  return r;
}

Integer rational_mod(const Rational& q, unsigned long p, const Integer& m) {
  if (mpz_divisible_ui_p(q.get_den_mpz_t(), p)) throw MathError("rational is not p-integral: " + q.get_str());
  return mod_pos(q.get_num() * invert_mod(q.get_den(), m), m);
}

}  // namespace

// ---- PadicInt ----

PadicInt::PadicInt(unsigned long p, long N, const Integer& v) : p_(p), N_(N) {
  if (p < 2 || N < 0) throw MathError("bad p-adic parameters");
  v_ = mod_pos(v, modulus());
}

PadicInt PadicInt::from_rational(const Rational& q, unsigned long p, long N) {
  PadicInt r(p, N, 0);
  r.v_ = rational_mod(q, p, r.modulus());
  return r;
}

void PadicInt::check(const PadicInt& o) const {
  if (p_ != o.p_) throw MathError("p-adic prime mismatch");
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
  check(o);
  return PadicInt(p_, std::min(N_, o.N_), v_ + o.v_);
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
  check(o);
  return PadicInt(p_, std::min(N_, o.N_), v_ - o.v_);
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, N_, -v_); }

PadicInt PadicInt::operator*(const PadicInt& o) const {
  check(o);
  return PadicInt(p_, std::min(N_, o.N_), v_ * o.v_);
}

bool PadicInt::operator==(const PadicInt& o) const {
  check(o);
  long N = std::min(N_, o.N_);
  return with_precision(N).v_ == o.with_precision(N).v_;
}

long PadicInt::valuation() const { return is_zero() ? N_ : std::min(vp(v_, p_), N_); }

PadicInt PadicInt::unit_inverse() const {
  if (N_ == 0) return *this;
  return PadicInt(p_, N_, invert_mod(v_, modulus()));
}

PadicInt PadicInt::with_precision(long N) const {
  if (N > N_) throw MathError("cannot raise p-adic precision");
  return PadicInt(p_, N, v_);
}

PadicInt hensel_sqrt_unit(const PadicInt& c) {
  unsigned long p = c.prime();
  if (p == 2) throw MathError("hensel_sqrt_unit needs an odd prime");
  if (c.precision() == 0) return c;
  if (c.valuation() != 0) throw MathError("hensel_sqrt_unit needs a unit");
  if (p > (1ul << 24)) throw MathError("residue search limited to small primes");
  unsigned long r = mpz_fdiv_ui(c.value().get_mpz_t(), p);
  unsigned long s0 = 0;
  for (unsigned long s = 1; s <= (p - 1) / 2; ++s)
    if ((s * s) % p == r) {
      s0 = s;
      break;
    }
  if (!s0) throw MathError("not a square modulo p");
  Integer m = c.modulus();
  Integer s = s0;
  for (int it = 0; it < 200; ++it) {
    Integer e = mod_pos(s * s - c.value(), m);
    if (sgn(e) == 0) return PadicInt(p, c.precision(), s);
    s = mod_pos(s - e * invert_mod(2 * s, m), m);
  }
  throw MathError("Hensel iteration did not converge");
}

Rational rational_reconstruct(const PadicInt& x, const Integer& bound) {
  Integer m = x.modulus();
  if (m <= 2 * bound * bound) throw PrecisionError("modulus too small for the height bound", x.precision());
  Integer r0 = m, r1 = x.value(), t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (sgn(t1) == 0 || abs(t1) > bound || mpz_divisible_ui_p(t1.get_mpz_t(), x.prime()))
    throw PrecisionError("no rational within the height bound", x.precision());
  Rational q{r1, t1};
  q.canonicalize();
  return q;
}

Rational rational_reconstruct(const PadicInt& x) {
  Integer b = x.modulus() / 2;
  mpz_sqrt(b.get_mpz_t(), b.get_mpz_t());
  return rational_reconstruct(x, b);
}

long quad_unit_valuation(const QuadUnitScalar& q, unsigned long p, long N) {
  if (q.is_zero()) return kValInf;
  if (q.is_homogeneous()) return q.valuation(p);
  long m = std::min(vp(q.x(), p), vp(q.y(), p));
  Rational s = rpow(Rational(p), -m);
  PadicInt t = hensel_sqrt_unit(PadicInt::from_rational(q.a(), p, N));
  PadicInt v = PadicInt::from_rational(q.x() * s, p, N) + PadicInt::from_rational(q.y() * s, p, N) * t;
  if (v.is_zero()) throw PrecisionError("value vanishes at working precision", N);
  return m + v.valuation();
}

// ---- EisensteinElement ----

EisensteinElement::EisensteinElement(const QPoly& f, unsigned long p, long N, std::vector<Integer> coords)
    : f_(f), p_(p), N_(N), c_(std::move(coords)) {
  size_t n = static_cast<size_t>(f_.degree());
  if (!is_eisenstein(f_, p)) throw MathError("modulus is not Eisenstein at p");
  for (size_t i = 0; i < n; ++i) {
    if (f_.coeff(i).get_den() != 1) throw MathError("Eisenstein modulus must have integer coefficients");
    red_.push_back(f_.coeff(i).get_num());
  }
  c_.resize(n);
  normalize();
}

EisensteinElement EisensteinElement::from_nf(const NFElement& x, unsigned long p, long N) {
  const QPoly& f = x.field()->modulus();
  Integer m = ipow(p, N);
  std::vector<Integer> c;
  for (auto& q : x.coords()) c.push_back(rational_mod(q, p, m));
  return EisensteinElement(f, p, N, std::move(c));
}

EisensteinElement EisensteinElement::constant(const QPoly& f, unsigned long p, long N, const Integer& c) {
  return EisensteinElement(f, p, N, {c});
}

void EisensteinElement::normalize() {
  Integer m = ipow(p_, N_);
  for (auto& a : c_) a = mod_pos(a, m);
}

void EisensteinElement::check(const EisensteinElement& o) const {
  if (p_ != o.p_ || f_ != o.f_) throw MathError("Eisenstein element mismatch");
}

EisensteinElement EisensteinElement::with_precision(long N) const {
  if (N > N_) throw MathError("cannot raise p-adic precision");
  EisensteinElement r = *this;
  r.N_ = N;
  r.normalize();
  return r;
}

EisensteinElement EisensteinElement::operator+(const EisensteinElement& o) const {
  check(o);
  EisensteinElement r = *this;
  r.N_ = std::min(N_, o.N_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  r.normalize();
  return r;
}

EisensteinElement EisensteinElement::operator-() const {
  EisensteinElement r = *this;
  for (auto& a : r.c_) a = -a;
  r.normalize();
  return r;
}

EisensteinElement EisensteinElement::operator-(const EisensteinElement& o) const { return *this + (-o); }

EisensteinElement EisensteinElement::operator*(const EisensteinElement& o) const {
  check(o);
  size_t n = c_.size();
  std::vector<Integer> conv(2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < n; ++j) conv[i + j] += c_[i] * o.c_[j];
  }
  for (size_t k = conv.size(); k-- > n;) {
    if (sgn(conv[k]) == 0) continue;
    for (size_t i = 0; i < n; ++i) conv[k - n + i] -= conv[k] * red_[i];
    conv[k] = 0;
  }
  conv.resize(n);
  EisensteinElement r = *this;
  r.N_ = std::min(N_, o.N_);
  r.c_ = std::move(conv);
  r.normalize();
  return r;
}

EisensteinElement EisensteinElement::times_alpha() const {
  size_t n = c_.size();
  std::vector<Integer> c(n);
  for (size_t i = 0; i + 1 < n; ++i) c[i + 1] = c_[i];
  for (size_t i = 0; i < n; ++i) c[i] -= c_[n - 1] * red_[i];
  EisensteinElement r = *this;
  r.c_ = std::move(c);
  r.normalize();
  return r;
}

EisensteinElement EisensteinElement::div_alpha() const {
  if (N_ < 1) throw PrecisionError("no precision left to divide by alpha", 0);
  if (!mpz_divisible_ui_p(c_[0].get_mpz_t(), p_)) throw MathError("element is not divisible by alpha");
  size_t n = c_.size();
  // alpha^{-1} = -(alpha^{n-1} + f_{n-1} alpha^{n-2} + ... + f_1) / f_0
  long N = N_ - 1;
  Integer m = ipow(p_, N);
  Integer q = mod_pos((c_[0] / p_) * invert_mod(red_[0] / p_, m), m);
  std::vector<Integer> c(n);
  for (size_t i = 0; i + 1 < n; ++i) c[i] = c_[i + 1] - q * red_[i + 1];
  c[n - 1] = -q;
  EisensteinElement r = *this;
  r.N_ = N;
  r.c_ = std::move(c);
  r.normalize();
  return r;
}

bool EisensteinElement::is_zero() const {
  for (auto& a : c_)
    if (sgn(a) != 0) return false;
  return true;
}

long EisensteinElement::valuation() const {
  long n = static_cast<long>(c_.size());
  long v = n * N_;
  for (long i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    v = std::min(v, n * vp(c_[i], p_) + i);
  }
  return v;
}

unsigned long EisensteinElement::residue() const { return mpz_fdiv_ui(c_[0].get_mpz_t(), p_); }

EisensteinElement EisensteinElement::unit_inverse() const {
  unsigned long r = residue();
  if (r == 0) throw MathError("inverse of a non-unit");
  EisensteinElement one = constant(f_, p_, N_, 1);
  EisensteinElement w = constant(f_, p_, N_, invert_mod(r, ipow(p_, N_)));
  EisensteinElement two = constant(f_, p_, N_, 2);
  for (int it = 0; it < 200; ++it) {
    EisensteinElement e = *this * w;
    if ((e - one).is_zero()) return w;
    w = w * (two - e);
  }
  throw MathError("unit inverse iteration did not converge");
}

EisensteinElement EisensteinElement::unit_sqrt() const {
  unsigned long r = residue();
  if (r == 0) throw MathError("square root of a non-unit");
  PadicInt s0 = hensel_sqrt_unit(PadicInt(p_, 1, r));
  EisensteinElement s = constant(f_, p_, N_, s0.value());
  EisensteinElement half = constant(f_, p_, N_, invert_mod(2, ipow(p_, N_)));
  for (int it = 0; it < 200; ++it) {
    if ((s * s - *this).is_zero()) return s;
    s = (s + *this * s.unit_inverse()) * half;
  }
  throw MathError("square root iteration did not converge");
}

NFElement EisensteinElement::reconstruct(const FieldPtr& k) const {
  std::vector<Rational> c;
  for (auto& a : c_) c.push_back(rational_reconstruct(PadicInt(p_, N_, a)));
  return NFElement(k, std::move(c));
}

// ---- roots ----

namespace {

using EPoly = std::vector<EisensteinElement>;

EisensteinElement horner(const EPoly& F, const EisensteinElement& y) {
  EisensteinElement r = F.back();
  for (size_t i = F.size() - 1; i-- > 0;) r = r * y + F[i];
  return r;
}

EPoly derivative(const EPoly& F) {
  EPoly d;
  for (size_t i = 1; i < F.size(); ++i) {
    const auto& c = F[i];
    d.push_back(c * EisensteinElement::constant(c.modulus(), c.prime(), c.precision(), static_cast<long>(i)));
  }
  return d;
}

EPoly mul(const EPoly& a, const EPoly& b) {
  EisensteinElement z = a[0] - a[0];
  EPoly r(a.size() + b.size() - 1, z);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

// F(c + alpha y)
EPoly shift(const EPoly& F, const EisensteinElement& c) {
  EisensteinElement one = EisensteinElement::constant(c.modulus(), c.prime(), c.precision(), 1);
  EisensteinElement z = one - one;
  EPoly lin{c, one.times_alpha()};
  EPoly pw{one};
  EPoly r(F.size(), z);
  for (size_t i = 0; i < F.size(); ++i) {
    for (size_t k = 0; k < pw.size(); ++k) r[k] = r[k] + F[i] * pw[k];
    pw = mul(pw, lin);
  }
  return r;
}

void descend(EPoly F, int depth, int max_depth, std::vector<EisensteinElement>& out) {
  long s = kValInf;
  for (auto& c : F) s = std::min(s, c.valuation());
  long cap = static_cast<long>(F[0].degree()) * F[0].precision();
  if (s >= cap) return;  // precision exhausted
  for (auto& c : F)
    for (long k = 0; k < s; ++k) c = c.div_alpha();
  EPoly dF = derivative(F);
  const auto& any = F[0];
  for (unsigned long d = 0; d < any.prime(); ++d) {
    EisensteinElement c = EisensteinElement::constant(any.modulus(), any.prime(), any.precision(), d);
    if (horner(F, c).valuation() < 1) continue;
    EisensteinElement tail;
    bool have = false;
    if (horner(dF, c).valuation() == 0) {
      EisensteinElement y = c;
      for (int it = 0; it < 200; ++it) {
        EisensteinElement v = horner(F, y);
        if (v.is_zero()) {
          have = true;
          break;
        }
        y = y - v * horner(dF, y).unit_inverse();
      }
      if (!have) throw MathError("Newton iteration did not converge");
      tail = y;
    } else if (depth < max_depth) {
      std::vector<EisensteinElement> sub;
      descend(shift(F, c), depth + 1, max_depth, sub);
      for (auto& y : sub) {
        EisensteinElement cc = EisensteinElement::constant(y.modulus(), y.prime(), y.precision(), d);
        out.push_back(cc + y.times_alpha());
      }
      continue;
    }
    if (have) out.push_back(tail);
  }
}

}  // namespace

std::vector<EisensteinElement> roots_in_ring(const std::vector<EisensteinElement>& F, int max_depth) {
  if (F.size() < 2) throw MathError("root search needs a nonconstant polynomial");
  std::vector<EisensteinElement> out;
  descend(F, 0, max_depth, out);
  return out;
}

// ---- exact square roots and factors ----

namespace {

long nf_valuation(const NFElement& x, unsigned long p) {
  long n = static_cast<long>(x.field()->degree());
  long v = kValInf;
  for (long i = 0; i < n; ++i) {
    const Rational& c = x.coords()[static_cast<size_t>(i)];
    if (sgn(c) == 0) continue;
    v = std::min(v, n * vp(c, p) + i);
  }
  return v;
}

NFElement alpha_power(const FieldPtr& k, long e) {
  NFElement a = NFElement::alpha(k);
  if (e < 0) a = a.inverse();
  return a.pow(static_cast<unsigned long>(e < 0 ? -e : e));
}

NFElement canonical_sign(NFElement s) {
  for (auto& c : s.coords())
    if (sgn(c) != 0) return sgn(c) < 0 ? -s : s;
  return s;
}

}  // namespace

NFElement nf_sqrt(const NFElement& c, unsigned long p, const NFElement* pin, const SqrtOptions& opt) {
  if (!c.bound() || c.is_zero()) throw MathError("nf_sqrt of zero");
  const FieldPtr& k = c.field();
  long v = nf_valuation(c, p);
  if (v % 2) throw MathError("nf_sqrt: odd valuation " + std::to_string(v));
  NFElement u = c * alpha_power(k, -v);
  long reached = 0;
  for (long N = opt.start_precision; N <= opt.max_precision; N *= 2) {
    reached = N;
    EisensteinElement U = EisensteinElement::from_nf(u, p, N);
    EisensteinElement s = U.unit_sqrt();
    NFElement r;
    try {
      r = s.reconstruct(k);
    } catch (const PrecisionError&) {
      continue;
    }
    if (r * r != u) continue;
    NFElement out = r * alpha_power(k, v / 2);
    if (pin && out == -*pin) return -out;
    if (pin && out == *pin) return out;
    return canonical_sign(out);
  }
  throw PrecisionError("nf_sqrt: reconstruction failed", reached);
}

std::vector<QuadraticFactor> lift_quadratic_factors(const QPoly& g, unsigned long p, const Rational& zsq,
                                                    const std::vector<NFElement>& order_pins,
                                                    const SqrtOptions& opt) {
  long deg = g.degree();
  if (deg != 3 && deg != 5) throw MathError("quadratic-factor lifting is available for degree 3 and 5 only");
  FieldPtr k = make_field(g);
  NFElement a = NFElement::alpha(k);
  NFElement one = one_like(a);
  auto embed = [&](const Rational& q) { return NFElement::from_rational(k, q); };
  std::vector<NFElement> gc;
  for (long i = 0; i <= deg; ++i) gc.push_back(embed(g.coeff(i)));
  Poly<NFElement> G(gc, a);
  Poly<NFElement> f1 = G / Poly<NFElement>::linear_root(a);
  if (G % Poly<NFElement>::linear_root(a) != Poly<NFElement>(std::vector<NFElement>{}, a))
    throw MathError("alpha is not a root of g");

  auto quad = [&](const NFElement& A, const NFElement& B) {
    return Poly<NFElement>(std::vector<NFElement>{B, -A, one}, a);
  };
  std::vector<QuadraticFactor> out;
  if (deg == 3) {
    out.push_back({-f1.coeff(1), f1.coeff(0)});
  } else {
    NFElement c3 = f1.coeff(3), c2 = f1.coeff(2), c1 = f1.coeff(1), c0 = f1.coeff(0);
    NFElement four = embed(4);
    // Resolvent cubic for sigma = B1 + B2.
    std::vector<NFElement> R{-(c3 * c3 * c0 - four * c2 * c0 + c1 * c1), c1 * c3 - four * c0, -c2, one};
    std::vector<std::vector<QuadraticFactor>> found;
    long reached = 0;
    for (long N = opt.start_precision; N <= opt.max_precision && found.empty(); N *= 2) {
      reached = N;
      std::vector<EisensteinElement> Rp;
      for (auto& r : R) Rp.push_back(EisensteinElement::from_nf(r, p, N));
      for (auto& root : roots_in_ring(Rp)) {
        NFElement sigma;
        try {
          sigma = root.reconstruct(k);
        } catch (const PrecisionError&) {
          continue;
        }
        if (!Poly<NFElement>(R, a).eval(sigma).is_zero()) continue;
        NFElement disc = c3 * c3 - four * (c2 - sigma);
        if (disc.is_zero()) continue;
        NFElement s;
        try {
          s = nf_sqrt(disc, p, nullptr, opt);
        } catch (const MathError&) {
          continue;
        }
        NFElement half = embed(Rational(1, 2));
        NFElement A1 = (s - c3) * half, A2 = (-s - c3) * half;
        NFElement B1 = (-c1 - A1 * sigma) * (A2 - A1).inverse();
        NFElement B2 = sigma - B1;
        if (quad(A1, B1) * quad(A2, B2) != f1) continue;
        found.push_back({{A1, B1}, {A2, B2}});
      }
    }
    if (found.empty()) throw PrecisionError("no quadratic factorization reconstructed", reached);
    out = found.front();
    if (!order_pins.empty()) {
      bool ok = false;
      for (auto& cand : found) {
        for (int swap = 0; swap < 2 && !ok; ++swap) {
          std::vector<QuadraticFactor> c = cand;
          if (swap) std::swap(c[0], c[1]);
          bool all = order_pins.size() == c.size();
          for (size_t i = 0; all && i < c.size(); ++i) {
            NFElement d = c[i].A * c[i].A - four * c[i].B;
            all = order_pins[i] * order_pins[i] == d * zsq;
          }
          if (all) {
            out = c;
            ok = true;
          }
        }
      }
      if (!ok) throw MathError("reference square roots do not match any factor ordering");
    }
  }
  // Exact verification g = (x - alpha) prod P_i.
  Poly<NFElement> prod = Poly<NFElement>::linear_root(a);
  for (auto& q : out) prod = prod * quad(q.A, q.B);
  if (prod != G) throw MathError("quadratic factors do not multiply back to g");
  return out;
}

}  // namespace hopfmod::padic

// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopfmod/rational.hpp"

#include <cctype>

namespace hopfmod {

long vp(const Integer& x, unsigned long p) {
  if (sgn(x) == 0) return kValInf;
  Integer r = x;
  long v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long vp(const Rational& x, unsigned long p) {
  if (sgn(x) == 0) return kValInf;
  return vp(Integer(x.get_num()), p) - vp(Integer(x.get_den()), p);
}

bool p_integral(const Rational& x, unsigned long p) {
  return !mpz_divisible_ui_p(x.get_den_mpz_t(), p);
}

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw MathError("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  auto slash = t.find('/');
  auto digits_ok = [](const std::string& u) {
    size_t i = (!u.empty() && u[0] == '-') ? 1 : 0;
    if (i >= u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-')
    throw MathError("malformed rational '" + std::string(s) + "'");
  Rational q{Integer(num), Integer(den)};
  if (sgn(q.get_den()) == 0) throw MathError("zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational rpow(const Rational& x, long e) {
  if (e < 0) return rpow(inverse(x), -e);
  Rational r = 1, b = x;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Integer ipow(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace hopfmod

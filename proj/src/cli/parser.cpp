// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>

#include "hopfmod/cli.hpp"

namespace hopfmod::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars, std::optional<unsigned long> p)
      : s_(s), vars_(vars), p_(p) {
    names_ = vars;
    if (p_) names_.push_back("p");
    // Longest match first so that "eta1" wins over "e".
    std::sort(names_.begin(), names_.end(), [](auto& a, auto& b) { return a.size() > b.size(); });
  }

  MultiPoly parse() {
    MultiPoly r = expr();
    skip();
    if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return r;
  }

 private:
  std::string_view s_;
  std::vector<std::string> vars_, names_;
  std::optional<unsigned long> p_;
  size_t i_ = 0;

  size_t n() const { return vars_.size(); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  MultiPoly expr() {
    MultiPoly r(n());
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        return r;
      }
      MultiPoly t = term();
      r = sign > 0 ? r + t : r - t;
      first = false;
    }
  }

  bool starts_primary(char c) const { return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '{'; }

  MultiPoly term() {
    MultiPoly r = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++i_;
        r = r * factor();
      } else if (c == '/') {
        size_t at = ++i_;
        MultiPoly d = factor();
        if (d.total_degree() > 0) throw ParseError("division by a non-constant", at);
        Rational q = d.coeff(MultiPoly::Exponents(n(), 0));
        if (sgn(q) == 0) throw ParseError("division by zero", at);
        r = r * (Rational(1) / q);
      } else if (starts_primary(c)) {
        r = r * factor();
      } else {
        return r;
      }
    }
  }

  MultiPoly factor() {
    char c = peek();
    if (c == '-') {
      ++i_;
      return -factor();
    }
    if (c == '+') {
      ++i_;
      return factor();
    }
    MultiPoly b = primary();
    if (peek() == '^') {
      size_t at = ++i_;
      long e = exponent(at);
      return b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  long exponent(size_t at) {
    MultiPoly e;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e = MultiPoly::constant(n(), number());
    } else if (c == '(' || c == '{' || c == 'p' || c == '-') {
      e = factor_no_power();
    } else {
      throw ParseError("expected an exponent", at);
    }
    if (e.total_degree() > 0) throw ParseError("exponent is not a constant", at);
    Rational q = e.coeff(MultiPoly::Exponents(n(), 0));
    if (q.get_den() != 1 || sgn(q) < 0 || q > 10000) throw ParseError("exponent must be a small non-negative integer", at);
    return q.get_num().get_si();
  }

  MultiPoly factor_no_power() {
    if (peek() == '-') {
      ++i_;
      return -factor_no_power();
    }
    return primary();
  }

  Rational number() {
    size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) throw ParseError("expected a number", b);
    return Rational(Integer(std::string(s_.substr(b, i_ - b))));
  }

  MultiPoly primary() {
    char c = peek();
    size_t at = i_;
    if (c == '(' || c == '{') {
      char close = c == '(' ? ')' : '}';
      ++i_;
      MultiPoly r = expr();
      if (peek() != close) throw ParseError(std::string("expected '") + close + "'", i_);
      ++i_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(n(), number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      for (auto& nm : names_) {
        if (s_.substr(i_, nm.size()) != nm) continue;
        // A trailing digit would extend the name (w1 vs w12).
        size_t end = i_ + nm.size();
        if (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end])) &&
            std::isdigit(static_cast<unsigned char>(nm.back())))
          continue;
        i_ = end;
        if (p_ && nm == "p" && std::find(vars_.begin(), vars_.end(), "p") == vars_.end())
          return MultiPoly::constant(n(), Rational(static_cast<long>(*p_)));
        size_t k = std::find(vars_.begin(), vars_.end(), nm) - vars_.begin();
        return MultiPoly::variable(n(), k);
      }
      size_t e = i_;
      while (e < s_.size() && std::isalnum(static_cast<unsigned char>(s_[e]))) ++e;
      std::string id(s_.substr(i_, e - i_));
      if (id == "p" || (id.size() > 1 && id[0] == 'p' && !p_))
        throw ParseError("identifier 'p' needs substitution", at);
      throw ParseError("unknown identifier '" + id + "'", at);
    }
    if (c == '\0') throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text, const std::vector<std::string>& vars,
                          std::optional<unsigned long> p) {
  if (text.find_first_not_of(" \t\n") == std::string_view::npos) throw ParseError("empty input", 0);
  return Parser(text, vars, p).parse();
}

QPoly parse_poly(std::string_view text, std::optional<unsigned long> p, const std::string& var) {
  MultiPoly m;
  try {
    m = parse_multipoly(text, {var}, p);
  } catch (const ParseError& e) {
    std::string w = e.what();
    if (w.find("unknown identifier") != std::string::npos)
      throw ParseError("input is not univariate in " + var + " (" + w.substr(0, w.find(" at position")) + ")",
                       e.position());
    throw;
  }
  std::vector<Rational> c;
  for (auto& [e, q] : m.terms()) {
    size_t k = static_cast<size_t>(e.empty() ? 0 : e[0]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] = q;
  }
  return QPoly(c);
}

Rational parse_constant(std::string_view text) {
  MultiPoly m = parse_multipoly(text, {});
  if (m.total_degree() > 0) throw ParseError("expected a constant", 0);
  return m.coeff({});
}

}  // namespace hopfmod::cli

// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hopfmod/cli.hpp"
#include "hopfmod/dihedral.hpp"

#ifndef HOPFMOD_FIXTURE_DIR
#define HOPFMOD_FIXTURE_DIR "fixtures"
#endif

namespace hopfmod::cli {

using nlohmann::json;
using namespace hopfmod::dihedral;
namespace ha = hopfmod::hopfaction;

std::string default_fixtures_dir() {
  if (const char* e = std::getenv("HOPFMOD_FIXTURES"); e && *e) return e;
  return HOPFMOD_FIXTURE_DIR;
}

namespace {

struct Check {
  bool ok = true;
  std::string msg;
};

Check pass() { return {}; }
Check fail(std::string m) { return {false, std::move(m)}; }
Check expect(bool c, const std::string& m) { return c ? pass() : fail(m); }

std::vector<std::string> numbered(const std::string& stem, size_t n) {
  std::vector<std::string> v;
  for (size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

std::vector<Rational> rationals(const json& j) {
  std::vector<Rational> v;
  for (auto& s : j) v.push_back(parse_constant(s.get<std::string>()));
  return v;
}

// Lazily computed pipeline stages of one case.
class CaseContext {
 public:
  explicit CaseContext(ExtensionCase c) : c_(std::move(c)) {}
  const ExtensionCase& c() const { return c_; }
  FieldPtr field() {
    if (!k_) k_ = make_field(c_.g);
    return k_;
  }
  const DegreePData& data() {
    if (!data_) data_ = degree_p_data(c_, LiftMode::Generic);
    return *data_;
  }
  const DegreePResult& degree_p() {
    if (!dp_) dp_ = degree_p_pipeline(c_);
    return *dp_;
  }
  const InducedResult& induced() {
    if (!ind_) ind_ = induced_pipeline(c_);
    return *ind_;
  }
  const MinPolyGamma& minpoly() {
    if (!mp_) mp_ = min_poly_gamma(c_);
    return *mp_;
  }
  NFElement nf(const std::string& text) { return NFElement::from_poly(field(), parse_poly(text, std::nullopt, "alpha")); }
  std::vector<Rational> eps_generator() {
    const auto& g = degree_p().generator.generator;
    if (!g) throw MathError("no degree-p generator found");
    return *g;
  }

 private:
  ExtensionCase c_;
  FieldPtr k_;
  std::optional<DegreePData> data_;
  std::optional<DegreePResult> dp_;
  std::optional<InducedResult> ind_;
  std::optional<MinPolyGamma> mp_;
};

Check compare_matrix(const QMatrix& ours, const QMatrix& theirs) {
  if (ours.rows() != theirs.rows() || ours.cols() != theirs.cols())
    return fail("shape " + std::to_string(ours.rows()) + "x" + std::to_string(ours.cols()) + " vs " +
                std::to_string(theirs.rows()) + "x" + std::to_string(theirs.cols()));
  for (size_t i = 0; i < ours.rows(); ++i)
    for (size_t j = 0; j < ours.cols(); ++j)
      if (ours(i, j) != theirs(i, j))
        return fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): computed " +
                    to_string(ours(i, j)) + ", fixture " + to_string(theirs(i, j)));
  return pass();
}

// Columns of coordinates of each labelled combination. Product labels
// w_i*eta_j map to index 2(i-1)+(j-1).
QMatrix combinations(const json& labels, size_t p, bool product) {
  std::vector<std::string> vars = numbered("w", p);
  if (product) {
    vars.push_back("eta1");
    vars.push_back("eta2");
  }
  size_t n = product ? 2 * p : p;
  QMatrix C(n, labels.size());
  for (size_t col = 0; col < labels.size(); ++col) {
    MultiPoly m = parse_multipoly(labels[col].get<std::string>(), vars);
    for (auto& [e, q] : m.terms()) {
      long idx = -1;
      if (!product) {
        for (size_t i = 0; i < p; ++i)
          if (e[i] == 1 && m.total_degree() == 1) idx = static_cast<long>(i);
      } else {
        long wi = -1, ej = -1;
        for (size_t i = 0; i < p; ++i)
          if (e[i] == 1) wi = static_cast<long>(i);
        for (size_t j = 0; j < 2; ++j)
          if (e[p + j] == 1) ej = static_cast<long>(j);
        long deg = 0;
        for (int x : e) deg += x;
        if (wi >= 0 && ej >= 0 && deg == 2) idx = 2 * wi + ej;
      }
      if (idx < 0) throw MathError("label '" + labels[col].get<std::string>() + "' is not a basis combination");
      C(static_cast<size_t>(idx), col) = q;
    }
  }
  return C;
}

QuadUnitScalar t_scalar(const std::string& text, const Rational& a) {
  MultiPoly m = parse_multipoly(text, {"t"});
  if (m.total_degree() > 1) throw MathError("entry '" + text + "' is not linear in t");
  return QuadUnitScalar(m.coeff({0}), m.coeff({1}), a);
}

LElement l_element(const std::string& text, const FieldPtr& k, const Rational& zsq) {
  MultiPoly m = parse_multipoly(text, {"alpha", "z"});
  LElement r(NFElement::from_rational(k, 0), NFElement::from_rational(k, 0), zsq);
  NFElement a = NFElement::alpha(k);
  for (auto& [e, q] : m.terms()) {
    NFElement u = a.pow(e[0]) * (q * rpow(zsq, e[1] / 2));
    r = r + (e[1] % 2 ? LElement(zero_like(u), u, zsq) : LElement::embed(u, zsq));
  }
  return r;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string vec_str(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (auto& x : v) s.push_back(to_string(x));
  return "(" + join(s) + ")";
}

std::vector<Rational> unit_vector(size_t n, size_t i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

Check check_entry(CaseContext& ctx, const json& e) {
  const ExtensionCase& c = ctx.c();
  const std::string name = e.at("name").get<std::string>();
  const json& v = e.at("value");
  const size_t p = c.p;
  Rational a = c.tsq ? *c.tsq : Rational(1);

  if (name == "disc_valuation") {
    OreData o = ore_disc_valuation(c.f, p);
    return expect(o.val == v.get<long>() && o.consistent(),
                  "Ore value " + std::to_string(o.val) + ", resultants " + std::to_string(o.res_sylvester) + "/" +
                      std::to_string(o.res_euclid));
  }
  if (name == "j0") {
    long j0 = ore_disc_valuation(c.f, p).j0;
    return expect(j0 == v.get<long>(), "computed j0 = " + std::to_string(j0));
  }
  if (name == "discL_valuation") {
    auto r = ramification_chain(c);
    return expect(r.discL_val == v.get<long>() && r.identity_holds(), "computed " + std::to_string(r.discL_val));
  }
  if (name == "ramification_chain") {
    auto r = ramification_chain(c);
    return expect(r.groups == v.get<std::vector<std::string>>(), "computed " + join(r.groups));
  }
  if (name == "replacement") return expect(c.g == parse_poly(v.get<std::string>()), "catalog uses " + to_string(c.g));
  if (name == "zsq") return expect(c.zsq == parse_constant(v.get<std::string>()), "catalog z^2 = " + to_string(c.zsq));
  if (name == "tsq") {
    if (!c.tsq) return fail("case has no t");
    return expect(*c.tsq == parse_constant(v.get<std::string>()), "catalog t^2 = " + to_string(*c.tsq));
  }
  if (name == "gamma_w") {
    if (!c.w) return fail("case has no gamma");
    return expect(ctx.nf(to_string(*c.w, "alpha")) == ctx.nf(v.get<std::string>()), "catalog w = " + to_string(*c.w));
  }
  if (name == "factor_A" || name == "factor_B" || name == "factor_d") {
    const auto& q = ctx.data().factors.at(0);
    NFElement ours = name == "factor_A" ? q.A : name == "factor_B" ? q.B : q.A * q.A - q.B * Rational(4);
    return expect(ours == ctx.nf(v.get<std::string>()), "computed " + ours.str("alpha"));
  }
  if (name == "sqrt_dz") {
    const auto& d = ctx.data();
    if (d.sqrt_dz.size() != v.size()) return fail("wrong number of square roots");
    for (size_t i = 0; i < v.size(); ++i) {
      NFElement s = ctx.nf(v[i].get<std::string>());
      const auto& q = d.factors[i];
      if (!(s * s == (q.A * q.A - q.B * Rational(4)) * c.zsq)) return fail("fixture value squares to something else");
      if (!(d.sqrt_dz[i] == s || d.sqrt_dz[i] == -s)) return fail("lifted root " + d.sqrt_dz[i].str("alpha"));
    }
    return pass();
  }
  if (name == "gram_p") {
    const auto& G = ctx.degree_p().gram;
    for (size_t i = 0; i < p; ++i)
      for (size_t j = 0; j < p; ++j)
        if (!(G(i, j) == ctx.nf(v[i][j].get<std::string>())))
          return fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") computed " +
                      G(i, j).str("alpha"));
    return pass();
  }
  if (name == "action_p" || name == "action_p_scaled") {
    QMatrix M = ctx.degree_p().action.stacked();
    if (name == "action_p_scaled") M = M.scale(Rational(e.at("scale").get<long>()));
    return compare_matrix(M, qmatrix_from_strings(v.get<std::vector<std::vector<std::string>>>()));
  }
  if (name == "hnf_p" || name == "hnf_2p") {
    const auto& D = name == "hnf_p" ? ctx.degree_p().basis.hnf.D : ctx.induced().basis.hnf.D;
    QMatrix F = qmatrix_from_strings(v.get<std::vector<std::vector<std::string>>>());
    Check r = compare_matrix(D, F);
    if (!r.ok && hnf::lattice_equal(D, F, p)) r.msg += " (same lattice)";
    return r;
  }
  if (name == "basis_p" || name == "basis_2p") {
    bool prod = name == "basis_2p";
    const auto& B = prod ? ctx.induced().basis : ctx.degree_p().basis;
    QMatrix C = combinations(v, p, prod);
    Check r = compare_matrix(B.coeffs, C);
    if (!r.ok) {
      auto labels = prod ? ctx.induced().basis_labels : ctx.degree_p().basis_labels;
      r.msg = "computed basis {" + join(labels) + "}";
    }
    return r;
  }
  if (name == "index_p" || name == "index_2p") {
    long idx = name == "index_p" ? ctx.degree_p().basis.hnf.index : ctx.induced().basis.hnf.index;
    return expect(idx == v.get<long>(), "computed index " + std::to_string(idx));
  }
  if (name == "d_eps" || name == "d_beta") {
    bool eps = name == "d_eps";
    const auto& ours = eps ? ctx.degree_p().d_eps : ctx.induced().d_beta;
    if (!ours) return fail("symbolic determinant not computed");
    std::vector<std::string> vars;
    for (auto& s : e.at("vars")) vars.push_back(s.get<std::string>());
    MultiPoly theirs = parse_multipoly(v.get<std::string>(), vars);
    if (*ours == theirs) return pass();
    if (e.contains("factor")) {
      Rational f(e.at("factor").get<long>());
      if (*ours * f == theirs)
        return fail("computed determinant equals the printed factor q alone; the printed multiplier " +
                    to_string(f) + " is not present");
    }
    return fail("computed " + ours->str(eps ? "e" : "b"));
  }
  if (name == "eps_generator") {
    auto g = rationals(v);
    const auto& d = ctx.degree_p();
    auto chk = ha::is_free_generator(d.action, g, d.basis.hnf.index, p);
    return expect(chk.free, "v_p(D_eps" + vec_str(g) + ") = " +
                                (chk.valuation == kValInf ? std::string("inf") : std::to_string(chk.valuation)) +
                                " vs index " + std::to_string(d.basis.hnf.index));
  }
  if (name == "beta_generator") {
    auto g = rationals(v);
    const auto& d = ctx.induced();
    auto chk = ha::is_free_generator(d.action, g, d.basis.hnf.index, p);
    return expect(chk.free, "v_p(D_beta" + vec_str(g) + ") = " +
                                (chk.valuation == kValInf ? std::string("inf") : std::to_string(chk.valuation)) +
                                " (det " + to_string(chk.det) + ") vs index " + std::to_string(d.basis.hnf.index));
  }
  if (name == "change_of_basis") {
    GammaPowers g = gamma_powers_matrix(c);
    for (size_t i = 0; i < 2 * p; ++i)
      for (size_t j = 0; j < 2 * p; ++j)
        if (!(g.P(i, j) == t_scalar(v[i][j].get<std::string>(), a)))
          return fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") computed " + g.P(i, j).str());
    return pass();
  }
  if (name == "minpoly_gamma") {
    const auto& m = ctx.minpoly();
    QPoly theirs = parse_poly(v.get<std::string>(), std::nullopt, "Y");
    if (m.poly != theirs) return fail("computed " + to_string(m.poly, "Y"));
    return expect(m.squarefree && m.annihilates && m.eisenstein && m.dual_route, "a derived check failed");
  }
  if (name == "gram_tensor") {
    const auto& G = ctx.induced().gram_tensor;
    for (size_t i = 0; i < 2 * p; ++i)
      for (size_t j = 0; j < 2 * p; ++j)
        if (!(G(i, j) == l_element(v[i][j].get<std::string>(), ctx.field(), c.zsq)))
          return fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") computed " + G(i, j).str());
    return pass();
  }
  if (name == "gram_gamma") {
    const auto& G = ctx.induced().gram_gamma;
    for (size_t i = 0; i < 2 * p; ++i)
      for (size_t j = 0; j < 2 * p; ++j)
        if (G[i][j] != parse_poly(v[i][j].get<std::string>(), std::nullopt, "gamma"))
          return fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") computed " +
                      to_string(G[i][j], "gamma"));
    return pass();
  }
  if (name == "tensor_equal") {
    bool t = ctx.induced().tensor_equal;
    return expect(t == v.get<bool>(), std::string("computed ") + (t ? "true" : "false"));
  }
  if (name == "d_beta_prime") {
    std::vector<std::string> vars;
    for (auto& s : e.at("vars")) vars.push_back(s.get<std::string>());
    MultiPoly f = parse_multipoly(v.get<std::string>(), vars);
    QuadUnitScalar tk = QuadUnitScalar::t_power(e.at("t_power").get<long>(), a);
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> points = {
        {ctx.eps_generator(), {1, 1}}, {{1, 2, -1}, {2, 1}}, {{3, -1, 2}, {1, -2}}};
    for (auto& [eps, del] : points) {
      auto pc = product_generator_check(c, ctx.induced(), eps, del);
      std::vector<Rational> x = eps;
      x.insert(x.end(), del.begin(), del.end());
      QuadUnitScalar expected = tk * f.eval(x);
      if (!(pc.det == expected))
        return fail("at eps=" + vec_str(eps) + ", delta=" + vec_str(del) + " computed " + pc.det.str() + ", formula " +
                    expected.str());
    }
    return pass();
  }
  if (name == "beta_prime") {
    std::vector<std::string> vars;
    for (auto& s : e.at("vars")) vars.push_back(s.get<std::string>());
    std::vector<MultiPoly> rows;
    std::vector<QuadUnitScalar> tk;
    for (auto& r : v) {
      rows.push_back(parse_multipoly(r.at("value").get<std::string>(), vars));
      tk.push_back(QuadUnitScalar::t_power(r.at("t_power").get<long>(), a));
    }
    for (size_t i = 0; i < p; ++i)
      for (size_t j = 0; j < 2; ++j) {
        auto ours = beta_prime_coords(c, unit_vector(p, i), unit_vector(2, j));
        std::vector<Rational> x(p + 2, Rational(0));
        x[i] = 1;
        x[p + j] = 1;
        for (size_t k = 0; k < rows.size(); ++k)
          if (!(ours.at(k) == tk[k] * rows[k].eval(x)))
            return fail("coordinate " + std::to_string(k + 1) + " of eps_" + std::to_string(i + 1) + " delta_" +
                        std::to_string(j + 1) + ": computed " + ours[k].str());
      }
    return pass();
  }
  if (name == "product_generator") {
    auto pc = product_generator_check(c, ctx.induced(), ctx.eps_generator(), {1, 1});
    return expect(pc.generator == v.get<bool>(), "v_p(D_beta') = " + std::to_string(pc.valuation) + " vs index " +
                                                     std::to_string(pc.index));
  }
  return fail("unknown fixture entry");
}

json load(const std::string& dir, unsigned long p) {
  std::string path = dir + "/p" + std::to_string(p) + ".json";
  std::ifstream in(path);
  if (!in) throw MathError("missing fixture file " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw MathError("corrupt fixture file " + path + ": " + ex.what());
  }
  if (j.value("format", "") != "hopfmod-fixtures" || j.value("version", 0) != 1 || j.value("p", 0UL) != p)
    throw MathError("fixture file " + path + " has an unexpected header");
  return j;
}

}  // namespace

Report verify_fixtures(const std::string& dir, const std::vector<unsigned long>& primes) {
  Report r;
  r.command = "verify-fixtures";
  std::vector<unsigned long> ps = primes.empty() ? std::vector<unsigned long>{3, 5} : primes;
  r.p = ps.size() == 1 ? ps[0] : 0;
  for (unsigned long p : ps) {
    json j = load(dir, p);
    long passed_cases = 0, total_cases = 0;
    for (auto& jc : j.at("cases")) {
      std::string id = jc.at("id").get<std::string>();
      ++total_cases;
      bool case_ok = true;
      std::optional<CaseContext> ctx;
      try {
        ExtensionCase c = find_case(p, id);
        if (c.f != parse_poly(jc.at("poly").get<std::string>())) throw MathError("polynomial differs from the catalog");
        ctx.emplace(c);
      } catch (const std::exception& ex) {
        r.fail("p=" + std::to_string(p) + " " + id + ": " + ex.what());
        continue;
      }
      for (auto& e : jc.at("entries")) {
        std::string nm = e.at("name").get<std::string>();
        std::string where = e.value("where", "");
        Check chk;
        try {
          chk = check_entry(*ctx, e);
        } catch (const std::exception& ex) {
          chk = fail(std::string("error: ") + ex.what());
        }
        r.add(std::to_string(p) + "/" + id + "/" + nm, chk.ok, where);
        if (!chk.ok) {
          case_ok = false;
          r.fail("p=" + std::to_string(p) + " " + id + "/" + nm + " [" + where + "]: " + chk.msg);
        }
      }
      if (case_ok) ++passed_cases;
    }
    r.add("p" + std::to_string(p) + "_cases_passed",
          std::to_string(passed_cases) + "/" + std::to_string(total_cases));
  }
  return r;
}

}  // namespace hopfmod::cli

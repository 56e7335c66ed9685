// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <functional>
#include <map>

#include <json.hpp>

#include "hopfmod/cli.hpp"
#include "hopfmod/dihedral.hpp"

namespace hopfmod::cli {

using namespace hopfmod::dihedral;
namespace ha = hopfmod::hopfaction;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"catalog",  "disc",    "ramify",          "order-p",  "free-p",
                                             "order-2p", "free-2p", "verify-fixtures", "quadratic"};
  return c;
}

namespace {

using Grid = std::vector<std::vector<std::string>>;

// Runs one pipeline stage, naming it in any error.
template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw MathError("stage '" + name + "' failed: " + e.what());
  }
}

std::vector<std::string> vec_strings(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (auto& x : v) s.push_back(to_string(x));
  return s;
}

Grid nf_grid(const Matrix<NFElement>& G) {
  Grid g(G.rows());
  for (size_t i = 0; i < G.rows(); ++i)
    for (size_t j = 0; j < G.cols(); ++j) g[i].push_back(G(i, j).str("alpha"));
  return g;
}

Grid l_grid(const Matrix<LElement>& G) {
  Grid g(G.rows());
  for (size_t i = 0; i < G.rows(); ++i)
    for (size_t j = 0; j < G.cols(); ++j) g[i].push_back(G(i, j).str());
  return g;
}

Grid t_grid(const Matrix<QuadUnitScalar>& P) {
  Grid g(P.rows());
  for (size_t i = 0; i < P.rows(); ++i)
    for (size_t j = 0; j < P.cols(); ++j) g[i].push_back(P(i, j).str());
  return g;
}

// "where" labels of the fixture entries for one case; empty when the case has
// no fixtures or the file is unreadable.
std::map<std::string, std::string> fixture_labels(const std::string& dir, unsigned long p, const std::string& id) {
  std::map<std::string, std::string> out;
  std::ifstream in(dir + "/p" + std::to_string(p) + ".json");
  if (!in) return out;
  try {
    nlohmann::json j;
    in >> j;
    for (auto& c : j.at("cases"))
      if (c.at("id") == id)
        for (auto& e : c.at("entries")) out.emplace(e.at("name").get<std::string>(), e.value("where", ""));
  } catch (const std::exception&) {
    out.clear();
  }
  return out;
}

class Builder {
 public:
  Builder(Report& r, std::map<std::string, std::string> where) : r_(r), where_(std::move(where)) {}
  void add(const std::string& name, Value v) {
    auto it = where_.find(name);
    r_.add(name, std::move(v), it == where_.end() ? std::string() : it->second);
  }

 private:
  Report& r_;
  std::map<std::string, std::string> where_;
};

ExtensionCase resolve_case(const RunOptions& opt) {
  if (!opt.case_id.empty() && !opt.poly.empty()) throw UsageError("give either --case or --poly, not both");
  if (!opt.case_id.empty()) {
    try {
      return find_case(opt.p, opt.case_id);
    } catch (const std::exception& e) {
      throw UsageError(std::string("unknown case: ") + e.what());
    }
  }
  if (opt.poly.empty()) throw UsageError("this command needs --case or --poly");
  QPoly f;
  try {
    f = parse_poly(opt.poly, opt.substitute_p ? std::optional<unsigned long>(opt.p) : std::nullopt);
  } catch (const ParseError& e) {
    throw UsageError(std::string("cannot parse --poly: ") + e.what());
  }
  auto c = case_for_poly(opt.p, f);
  if (!c) throw UsageError("polynomial " + to_string(f) + " is not a catalog case for p = " + std::to_string(opt.p));
  return *c;
}

void cmd_catalog(const RunOptions& opt, Report& r) {
  auto cases = stage("catalog", [&] { return catalog(opt.p); });
  Grid cat = {{"index", "id", "family", "f", "field polynomial", "label", "z^2", "t^2"}};
  Grid disc = {{"id", "f", "j0", "v_p(disc)", "ramification chain"}};
  for (size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    cat.push_back({std::to_string(i + 1), c.id, family_name(c.family), to_string(c.f), to_string(c.g),
                   c.label.empty() ? "-" : c.label, to_string(c.zsq), c.tsq ? to_string(*c.tsq) : "-"});
    OreData o = stage("discriminant", [&] { return ore_disc_valuation(c.f, c.p); });
    if (!o.consistent()) r.fail(c.id + ": Ore value and resultant valuations differ");
    std::string chain;
    try {
      for (auto& g : ramification_chain(c).groups) chain += (chain.empty() ? "" : " > ") + g;
    } catch (const std::exception& e) {
      chain = std::string("unavailable: ") + e.what();
    }
    disc.push_back({c.id, to_string(c.f), std::to_string(o.j0), std::to_string(o.val), chain});
  }
  r.add("catalog_table", cat);
  r.add("discriminant_table", disc);
}

void cmd_disc(const RunOptions& opt, Report& r) {
  QPoly f;
  std::map<std::string, std::string> where;
  if (!opt.case_id.empty()) {
    ExtensionCase c = resolve_case(opt);
    f = c.f;
    r.case_id = c.id;
    where = fixture_labels(opt.fixtures_dir, opt.p, c.id);
  } else {
    if (opt.poly.empty()) throw UsageError("disc needs --case or --poly");
    try {
      f = parse_poly(opt.poly, opt.substitute_p ? std::optional<unsigned long>(opt.p) : std::nullopt);
    } catch (const ParseError& e) {
      throw UsageError(std::string("cannot parse --poly: ") + e.what());
    }
    if (auto c = case_for_poly(opt.p, f)) {
      r.case_id = c->id;
      where = fixture_labels(opt.fixtures_dir, opt.p, c->id);
    }
  }
  OreData o = stage("discriminant", [&] { return ore_disc_valuation(f, opt.p); });
  Builder b(r, where);
  b.add("poly", to_string(f));
  b.add("j0", o.j0);
  b.add("disc_valuation", o.val);
  b.add("resultant_sylvester_valuation", o.res_sylvester);
  b.add("resultant_euclid_valuation", o.res_euclid);
  b.add("consistent", o.consistent());
  if (!o.consistent()) r.fail("Ore value " + std::to_string(o.val) + " disagrees with the resultant valuations");
}

void cmd_ramify(const ExtensionCase& c, Builder& b, Report& r) {
  auto rc = stage("ramification", [&] { return ramification_chain(c); });
  std::vector<std::string> orders;
  for (long g : rc.orders) orders.push_back(std::to_string(g));
  b.add("ramification_chain", rc.groups);
  b.add("group_orders", orders);
  b.add("residue_degree", rc.residue_degree);
  b.add("discE_valuation", rc.discE_val);
  b.add("discL_valuation", rc.discL_val);
  b.add("weakly_ramified", rc.weakly_ramified);
  b.add("identity_holds", rc.identity_holds());
  if (!rc.identity_holds()) r.fail("sum of (|G_i| - 1) differs from v_p(disc L)");
}

void cmd_order_p(const ExtensionCase& c, const RunOptions& opt, Builder& b, Report& r) {
  padic::SqrtOptions so;
  so.max_precision = opt.precision;
  auto d = stage("degree-p pipeline", [&] { return degree_p_pipeline(c, opt.budget, LiftMode::Generic, so); });
  b.add("gram_p", nf_grid(d.gram));
  b.add("action_p", to_strings(d.action.stacked()));
  b.add("hnf_p", to_strings(d.basis.hnf.D));
  b.add("index_p", d.basis.hnf.index);
  b.add("basis_p", d.basis_labels);
  bool cert = hnf::check_certificate(d.action.stacked(), d.basis.hnf, c.p);
  b.add("certificate_ok", cert);
  b.add("integral", d.basis.integral);
  if (d.d_eps) b.add("d_eps", d.d_eps->str("e"));
  if (!cert) r.fail("HNF certificate check failed");
  if (!d.basis.integral) r.fail("action of the computed basis is not p-integral");
}

void cmd_free_p(const ExtensionCase& c, const RunOptions& opt, Builder& b, Report& r) {
  padic::SqrtOptions so;
  so.max_precision = opt.precision;
  auto d = stage("degree-p pipeline", [&] { return degree_p_pipeline(c, opt.budget, LiftMode::Generic, so); });
  b.add("index_p", d.basis.hnf.index);
  const auto& g = d.generator;
  b.add("candidates_tried", g.tried);
  if (!g.generator) {
    r.fail("no free generator found within a budget of " + std::to_string(opt.budget));
    return;
  }
  b.add("eps_generator", vec_strings(*g.generator));
  b.add("eps_generator_element", ha::render_combination(*g.generator, ha::HopfBasis::numbered("alpha^", c.p)));
  b.add("source", g.source);
  b.add("valuation", g.valuation);
}

void cmd_order_2p(const ExtensionCase& c, const RunOptions& opt, Builder& b, Report& r) {
  padic::SqrtOptions so;
  so.max_precision = opt.precision;
  if (c.totally_ramified()) {
    auto mp = stage("minimal polynomial of gamma", [&] { return min_poly_gamma(c); });
    b.add("minpoly_gamma", to_string(mp.poly, "Y"));
    b.add("minpoly_checks", mp.squarefree && mp.annihilates && mp.eisenstein && mp.dual_route);
    if (!(mp.squarefree && mp.annihilates && mp.eisenstein && mp.dual_route))
      r.fail("minimal polynomial of gamma failed a derived check");
    auto gp = stage("change of basis", [&] { return gamma_powers_matrix(c); });
    b.add("change_of_basis", t_grid(gp.P));
  }
  auto d = stage("induced pipeline", [&] { return induced_pipeline(c, opt.budget, LiftMode::Generic, so); });
  b.add("gram_tensor", l_grid(d.gram_tensor));
  if (c.totally_ramified()) {
    Grid g(d.gram_gamma.size());
    for (size_t i = 0; i < g.size(); ++i)
      for (auto& e : d.gram_gamma[i]) g[i].push_back(to_string(e, "gamma"));
    b.add("gram_gamma", g);
  }
  b.add("action_2p", to_strings(d.action.stacked()));
  b.add("hnf_2p", to_strings(d.basis.hnf.D));
  b.add("index_2p", d.basis.hnf.index);
  b.add("basis_2p", d.basis_labels);
  b.add("tensor_equal", d.tensor_equal);
  bool cert = hnf::check_certificate(d.action.stacked(), d.basis.hnf, c.p);
  b.add("certificate_ok", cert);
  if (d.d_beta) b.add("d_beta", d.d_beta->str("b"));
  if (!cert) r.fail("HNF certificate check failed");
  if (!d.basis.integral) r.fail("action of the computed basis is not p-integral");
}

void cmd_free_2p(const ExtensionCase& c, const RunOptions& opt, Builder& b, Report& r) {
  padic::SqrtOptions so;
  so.max_precision = opt.precision;
  auto d = stage("induced pipeline", [&] { return induced_pipeline(c, opt.budget, LiftMode::Generic, so); });
  b.add("index_2p", d.basis.hnf.index);
  const auto& g = d.generator;
  b.add("candidates_tried", g.tried);
  if (!g.generator) {
    r.fail("no free generator found within a budget of " + std::to_string(opt.budget));
  } else {
    b.add("beta_generator", vec_strings(*g.generator));
    b.add("source", g.source);
    b.add("valuation", g.valuation);
  }
  auto dp = stage("degree-p pipeline", [&] { return degree_p_pipeline(c, opt.budget, LiftMode::Generic, so); });
  if (!dp.generator.generator) {
    r.fail("no degree-p generator available for the product check");
    return;
  }
  std::vector<Rational> delta = {1, 1};
  auto pc = stage("product check", [&] { return product_generator_check(c, d, *dp.generator.generator, delta); });
  b.add("product_eps", vec_strings(*dp.generator.generator));
  b.add("product_delta", vec_strings(delta));
  std::vector<std::string> coords;
  for (auto& x : pc.beta_prime) coords.push_back(x.str());
  b.add("product_coordinates", coords);
  b.add("product_det", pc.det.str());
  b.add("product_valuation", pc.valuation);
  b.add("product_generator", pc.generator);
}

void cmd_quadratic(const RunOptions& opt, Report& r) {
  Rational zsq;
  if (!opt.poly.empty() && !opt.case_id.empty()) throw UsageError("give either --case or --poly, not both");
  if (!opt.poly.empty()) {
    QPoly q;
    try {
      q = parse_poly(opt.poly, opt.substitute_p ? std::optional<unsigned long>(opt.p) : std::nullopt);
    } catch (const ParseError& e) {
      throw UsageError(std::string("cannot parse --poly: ") + e.what());
    }
    if (q.degree() != 2 || q.coeff(2) != 1 || q.coeff(1) != 0)
      throw UsageError("quadratic --poly must have the form x^2 - d");
    zsq = -q.coeff(0);
  } else {
    ExtensionCase c = resolve_case(opt);
    r.case_id = c.id;
    zsq = c.zsq;
  }
  auto q = stage("quadratic structure", [&] { return quadratic_structure(zsq, opt.p); });
  r.add("zsq", to_string(zsq));
  r.add("gram", l_grid(q.gram));
  r.add("action", to_strings(q.action.stacked()));
  r.add("hnf", to_strings(q.basis.hnf.D));
  r.add("index", q.basis.hnf.index);
  r.add("integer_hnf", to_strings(q.integer_hnf.D));
  r.add("basis", q.basis_labels);
  Grid checks = {{"delta", "predicate", "determinant test"}};
  for (auto [d1, d2] : {std::pair<long, long>{1, 1}, {static_cast<long>(opt.p), 1}, {1, static_cast<long>(opt.p)}}) {
    bool pred = q.predicate(d1, d2);
    auto g = ha::is_free_generator(q.action, {Rational(d1), Rational(d2)}, q.basis.hnf.index, opt.p);
    checks.push_back({std::to_string(d1) + " + " + std::to_string(d2) + "z", pred ? "free" : "not free",
                      g.free ? "free" : "not free"});
    if (pred != g.free) r.fail("predicate and determinant test disagree at delta = (" + std::to_string(d1) + ", " +
                               std::to_string(d2) + ")");
  }
  r.add("freeness_table", checks);
}

}  // namespace

Report run(const RunOptions& in) {
  RunOptions opt = in;
  if (opt.fixtures_dir.empty()) opt.fixtures_dir = default_fixtures_dir();
  const auto& cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), opt.command) == cmds.end())
    throw UsageError("unknown command '" + opt.command + "'");
  if (opt.budget < 1) throw UsageError("--budget must be positive");
  if (opt.precision < 20) throw UsageError("--precision must be at least 20");

  if (opt.command == "verify-fixtures") {
    std::vector<unsigned long> ps;
    if (opt.p != 0) {
      if (opt.p != 3 && opt.p != 5) throw UsageError("fixtures exist only for p = 3 and p = 5");
      ps.push_back(opt.p);
    }
    return verify_fixtures(opt.fixtures_dir, ps);
  }
  if (opt.p < 3 || opt.p % 2 == 0) throw UsageError("--p must be an odd prime");

  Report r;
  r.command = opt.command;
  r.p = opt.p;
  if (opt.command == "catalog") {
    cmd_catalog(opt, r);
    return r;
  }
  if (opt.command == "disc") {
    cmd_disc(opt, r);
    return r;
  }
  if (opt.command == "quadratic") {
    cmd_quadratic(opt, r);
    return r;
  }

  ExtensionCase c = resolve_case(opt);
  r.case_id = c.id;
  Builder b(r, fixture_labels(opt.fixtures_dir, c.p, c.id));
  if (opt.command == "ramify") cmd_ramify(c, b, r);
  else if (opt.command == "order-p") cmd_order_p(c, opt, b, r);
  else if (opt.command == "free-p") cmd_free_p(c, opt, b, r);
  else if (opt.command == "order-2p") cmd_order_2p(c, opt, b, r);
  else if (opt.command == "free-2p") cmd_free_2p(c, opt, b, r);
  return r;
}

}  // namespace hopfmod::cli

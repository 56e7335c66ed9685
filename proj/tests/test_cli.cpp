// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>
#include <json.hpp>

#include "hopfmod/cli.hpp"
#include "test_util.hpp"

using namespace hopfmod;
using namespace hopfmod::cli;

namespace {

const Artifact& find(const Report& r, const std::string& name) {
  for (auto& a : r.artifacts)
    if (a.name == name) return a;
  FAIL("missing artifact " << name);
  throw std::logic_error("unreachable");
}

bool has_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (auto& x : j)
      if (has_float(x)) return true;
  return false;
}

RunOptions opts(const std::string& cmd, unsigned long p, const std::string& case_id = {}) {
  RunOptions o;
  o.command = cmd;
  o.p = p;
  o.case_id = case_id;
  return o;
}

}  // namespace

TEST_CASE("parse_poly") {
  CHECK(parse_poly("x^3+3") == qpoly({3, 0, 0, 1}));
  CHECK(parse_poly("x^3 + 3x + 3") == qpoly({3, 3, 0, 1}));
  CHECK(parse_poly("x^5-15x^3-10x^2+75x+30") == qpoly({30, 75, -10, -15, 0, 1}));
  CHECK(parse_poly("(x+1)^2") == qpoly({1, 2, 1}));
  CHECK(parse_poly("x^2/3 - 1/2") == QPoly({testutil::frac(-1, 2), 0, testutil::frac(1, 3)}));
  CHECK(parse_poly("x^5+2px^{(p-1)/2}+p", 5) == qpoly({5, 0, 10, 0, 0, 1}));
  CHECK(parse_poly("x^3+3p", 3) == qpoly({9, 0, 0, 1}));
  CHECK(parse_poly("Y^6+3", std::nullopt, "Y") == qpoly({3, 0, 0, 0, 0, 0, 1}));
  CHECK(parse_constant("-12/18") == testutil::frac(-2, 3));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_poly("x^3+"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^3+3)"), ParseError);
  CHECK_THROWS_AS(parse_poly("x*y"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/x"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^5+2px^2+p"), ParseError);  // p unset
  try {
    parse_poly("x^3 + $");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);  // zero-based offset of the dollar sign
  }
}

TEST_CASE("parse_multipoly") {
  MultiPoly m = parse_multipoly("(w1+w3)/3*(eta1+eta2)", {"w1", "w2", "w3", "eta1", "eta2"});
  CHECK(m.coeff({1, 0, 0, 1, 0}) == testutil::frac(1, 3));
  CHECK(m.coeff({0, 0, 1, 0, 1}) == testutil::frac(1, 3));
  CHECK(m.terms().size() == 4);
  MultiPoly d = parse_multipoly("-18*(1*e2^2+3*e2*e3-1*e3^2)*(e1-2*e3)", {"e1", "e2", "e3"});
  CHECK(d.total_degree() == 3);
  CHECK(d.eval({1, 1, 0}) == -18);
}

TEST_CASE("report JSON round-trip and determinism") {
  for (auto [cmd, p, id] : {std::tuple{"order-p", 3UL, "radical-a1"}, std::tuple{"order-2p", 3UL, "middle-a1"},
                            std::tuple{"free-2p", 5UL, "case3"}, std::tuple{"quadratic", 3UL, "singular"},
                            std::tuple{"catalog", 5UL, ""}}) {
    Report r = run(opts(cmd, p, id));
    std::string j = to_json(r);
    CHECK(report_from_json(j) == r);
    CHECK(to_json(run(opts(cmd, p, id))) == j);
    CHECK_FALSE(has_float(nlohmann::json::parse(j)));
  }
  CHECK_THROWS(report_from_json("{\"command\": 3}"));
  CHECK_THROWS(report_from_json("not json"));
}

TEST_CASE("markdown rendering") {
  Report r = run(opts("order-p", 3, "radical-a4"));
  std::string md = to_markdown(r);
  CHECK(md.find("## order-p") != std::string::npos);
  CHECK(md.find("|---|") != std::string::npos);
  CHECK(md.find("reduced matrices of the degree-3 structure") != std::string::npos);
}

TEST_CASE("run: order-p and free-p") {
  Report r = run(opts("order-p", 3, "radical-a1"));
  CHECK(r.ok);
  CHECK(std::get<long>(find(r, "index_p").value) == 2);
  CHECK(std::get<std::vector<std::string>>(find(r, "basis_p").value) ==
        std::vector<std::string>{"w1", "w2/3", "(w1 + w3)/3"});
  CHECK(find(r, "index_p").where == "determinant table for the degree-3 structure");

  RunOptions by_poly = opts("order-p", 3);
  by_poly.poly = "x^3+3";
  CHECK(std::get<long>(find(run(by_poly), "index_p").value) == 2);

  Report f = run(opts("free-p", 5, "3"));
  CHECK(f.case_id == "case3");
  CHECK(std::get<long>(find(f, "valuation").value) == std::get<long>(find(f, "index_p").value));
}

TEST_CASE("run: disc on arbitrary Eisenstein input") {
  RunOptions o = opts("disc", 5);
  o.poly = "x^5+5x^3+5";
  Report r = run(o);
  CHECK(std::get<long>(find(r, "j0").value) == 3);
  CHECK(std::get<long>(find(r, "disc_valuation").value) == 7);
  CHECK(std::get<bool>(find(r, "consistent").value));
  o.poly = "x^5+2px^{(p-1)/2}+p";
  o.substitute_p = true;
  CHECK(std::get<long>(find(run(o), "disc_valuation").value) == 6);
}

TEST_CASE("run: usage and stage errors") {
  CHECK_THROWS_AS(run(opts("bogus", 3)), UsageError);
  CHECK_THROWS_AS(run(opts("order-p", 3, "case9")), UsageError);
  CHECK_THROWS_AS(run(opts("order-p", 3)), UsageError);  // needs a case or poly
  RunOptions bad = opts("order-p", 3, "radical-a1");
  bad.budget = 0;
  CHECK_THROWS_AS(run(bad), UsageError);
  bad = opts("order-p", 3, "radical-a1");
  bad.precision = 5;
  CHECK_THROWS_AS(run(bad), UsageError);
  bad = opts("disc", 3);
  bad.poly = "x^3+";
  CHECK_THROWS_AS(run(bad), UsageError);
  // Quadratic-factor lifting is only available for p = 3 and 5.
  try {
    run(opts("order-p", 7, "1"));
    FAIL("no throw");
  } catch (const MathError& e) {
    CHECK(std::string(e.what()).find("stage '") != std::string::npos);
  }
}

TEST_CASE("commands list") {
  const auto& c = commands();
  CHECK(c.size() == 9);
  CHECK(std::find(c.begin(), c.end(), "verify-fixtures") != c.end());
}

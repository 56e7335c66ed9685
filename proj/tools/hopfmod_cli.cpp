// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

// hopfmod command-line front end. Links only the C interface.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "hopfmod/hopfmod.h"

int main(int argc, char** argv) {
  CLI::App app{"Exact Hopf Galois module structure of dihedral extensions of Q_p"};
  app.set_version_flag("--version", std::string(hm_version()));

  std::string command, poly, case_id, format = "json", fixtures;
  unsigned long p = 0;
  long budget = 2000, precision = 320;
  bool substitute = false;

  std::vector<std::string> cmds;
  for (const char* s = hm_commands(); *s;) {
    const char* e = s;
    while (*e && *e != '\n') ++e;
    cmds.emplace_back(s, e);
    s = *e ? e + 1 : e;
  }
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(cmds));
  app.add_option("--p", p, "Prime (default 3; verify-fixtures: all)");
  auto* poly_opt = app.add_option("--poly", poly, "Eisenstein polynomial, e.g. \"x^3+3x+3\"");
  app.add_option("--case", case_id, "Catalog case id or 1-based index")->excludes(poly_opt);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--budget", budget, "Generator search budget")->check(CLI::PositiveNumber);
  app.add_option("--precision", precision, "Maximal p-adic precision for square roots")->check(CLI::Range(20L, 100000L));
  app.add_flag("--substitute-p", substitute, "Replace the identifier p in --poly by the prime");
  app.add_option("--fixtures", fixtures, "Fixture directory (default: HOPFMOD_FIXTURES or the built-in path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  hm_options opt;
  hm_options_init(&opt);
  opt.command = command.c_str();
  opt.p = p != 0 ? p : (command == "verify-fixtures" ? 0 : 3);
  opt.poly = poly.empty() ? nullptr : poly.c_str();
  opt.case_id = case_id.empty() ? nullptr : case_id.c_str();
  opt.budget = budget;
  opt.precision = precision;
  opt.substitute_p = substitute ? 1 : 0;
  opt.fixtures_dir = fixtures.empty() ? nullptr : fixtures.c_str();

  hm_report* r = nullptr;
  hm_status st = hm_run(&opt, &r);
  if (st == HM_USAGE) {
    std::fprintf(stderr, "usage error: %s\n", hm_last_error());
    return 2;
  }
  if (st == HM_ERROR) {
    std::fprintf(stderr, "error: %s\n", hm_last_error());
    return 1;
  }
  char* out = hm_report_render(r, format == "md" ? HM_FORMAT_MARKDOWN : HM_FORMAT_JSON);
  if (out) {
    std::fputs(out, stdout);
    hm_string_free(out);
  }
  unsigned long nf = hm_report_failure_count(r);
  for (unsigned long i = 0; i < nf; ++i) std::fprintf(stderr, "FAIL %s\n", hm_report_failure(r, i));
  hm_report_free(r);
  return st == HM_OK ? 0 : 1;
}

// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <cstring>
#include <string>

#include "hopfmod/cli.hpp"
#include "hopfmod/hopfmod.h"

struct hm_report {
  hopfmod::cli::Report r;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

hm_status set_error(hm_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

}  // namespace

extern "C" {

void hm_options_init(hm_options* o) {
  if (!o) return;
  *o = hm_options{};
  o->p = 3;
  o->budget = 2000;
  o->precision = 320;
}

hm_status hm_run(const hm_options* o, hm_report** out) {
  if (out) *out = nullptr;
  g_last_error.clear();
  if (!o || !out || !o->command) return set_error(HM_USAGE, "missing options, command or output pointer");
  hopfmod::cli::RunOptions opt;
  opt.command = o->command;
  opt.p = o->p;
  if (o->poly) opt.poly = o->poly;
  if (o->case_id) opt.case_id = o->case_id;
  if (o->budget) opt.budget = o->budget;
  if (o->precision) opt.precision = o->precision;
  opt.substitute_p = o->substitute_p != 0;
  if (o->fixtures_dir) opt.fixtures_dir = o->fixtures_dir;
  try {
    auto* h = new hm_report{hopfmod::cli::run(opt)};
    *out = h;
    if (!h->r.ok) {
      g_last_error = h->r.failures.empty() ? "verification failed" : h->r.failures.front();
      return HM_VERIFY_FAILED;
    }
    return HM_OK;
  } catch (const hopfmod::cli::UsageError& e) {
    return set_error(HM_USAGE, e.what());
  } catch (const std::exception& e) {
    return set_error(HM_ERROR, e.what());
  }
}

char* hm_report_render(const hm_report* r, hm_format fmt) {
  if (!r) {
    set_error(HM_USAGE, "null report");
    return nullptr;
  }
  try {
    return dup(fmt == HM_FORMAT_MARKDOWN ? hopfmod::cli::to_markdown(r->r) : hopfmod::cli::to_json(r->r));
  } catch (const std::exception& e) {
    set_error(HM_ERROR, e.what());
    return nullptr;
  }
}

hm_status hm_report_parse_json(const char* text, hm_report** out) {
  if (out) *out = nullptr;
  if (!text || !out) return set_error(HM_USAGE, "null argument");
  try {
    *out = new hm_report{hopfmod::cli::report_from_json(text)};
    return HM_OK;
  } catch (const std::exception& e) {
    return set_error(HM_ERROR, e.what());
  }
}

int hm_report_passed(const hm_report* r) { return r && r->r.ok ? 1 : 0; }

unsigned long hm_report_failure_count(const hm_report* r) { return r ? r->r.failures.size() : 0; }

const char* hm_report_failure(const hm_report* r, unsigned long i) {
  if (!r || i >= r->r.failures.size()) return nullptr;
  return r->r.failures[i].c_str();
}

void hm_report_free(hm_report* r) { delete r; }

void hm_string_free(char* s) { std::free(s); }

const char* hm_last_error(void) { return g_last_error.c_str(); }

const char* hm_commands(void) {
  static const std::string s = [] {
    std::string t;
    for (auto& c : hopfmod::cli::commands()) t += c + "\n";
    return t;
  }();
  return s.c_str();
}

const char* hm_version(void) { return "0.1.0"; }

}  // extern "C"

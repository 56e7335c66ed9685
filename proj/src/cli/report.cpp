// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <json.hpp>

#include "hopfmod/cli.hpp"

namespace hopfmod::cli {

using nlohmann::ordered_json;

void Report::add(std::string name, Value v, std::string where) {
  artifacts.push_back({std::move(name), std::move(where), std::move(v)});
}

void Report::fail(const std::string& what) {
  ok = false;
  failures.push_back(what);
}

namespace {

// Values carry an explicit type tag; without it a list of strings and a
// one-row matrix would be ambiguous after parsing.
ordered_json value_json(const Value& v) {
  ordered_json j;
  std::visit(
      [&](auto&& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          j["type"] = "bool";
        } else if constexpr (std::is_same_v<T, long>) {
          j["type"] = "integer";
        } else if constexpr (std::is_same_v<T, std::string>) {
          j["type"] = "text";
        } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
          j["type"] = "list";
        } else {
          j["type"] = "matrix";
        }
        j["data"] = x;
      },
      v);
  return j;
}

Value value_from(const ordered_json& j) {
  std::string t = j.at("type").get<std::string>();
  const auto& d = j.at("data");
  if (t == "bool") return d.get<bool>();
  if (t == "integer") return d.get<long>();
  if (t == "text") return d.get<std::string>();
  if (t == "list") return d.get<std::vector<std::string>>();
  if (t == "matrix") return d.get<std::vector<std::vector<std::string>>>();
  throw MathError("unknown value type '" + t + "'");
}

std::string md_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '|' || c == '*' || c == '_') r += '\\';
    r += c;
  }
  return r;
}

}  // namespace

std::string to_json(const Report& r) {
  ordered_json j;
  j["command"] = r.command;
  j["case"] = r.case_id;
  j["p"] = r.p;
  j["ok"] = r.ok;
  j["artifacts"] = ordered_json::array();
  for (auto& a : r.artifacts) {
    ordered_json e;
    e["name"] = a.name;
    if (!a.where.empty()) e["where"] = a.where;
    e["value"] = value_json(a.value);
    j["artifacts"].push_back(e);
  }
  j["failures"] = r.failures;
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw MathError(std::string("report JSON: ") + e.what());
  }
  Report r;
  r.command = j.at("command").get<std::string>();
  r.case_id = j.at("case").get<std::string>();
  r.p = j.at("p").get<unsigned long>();
  r.ok = j.at("ok").get<bool>();
  for (auto& e : j.at("artifacts"))
    r.artifacts.push_back({e.at("name").get<std::string>(), e.value("where", std::string()), value_from(e.at("value"))});
  r.failures = j.at("failures").get<std::vector<std::string>>();
  return r;
}

std::string to_markdown(const Report& r) {
  std::ostringstream o;
  o << "## " << r.command;
  if (!r.case_id.empty()) o << " " << r.case_id;
  o << " (p = " << r.p << ")\n\n";
  o << "status: " << (r.ok ? "ok" : "FAILED") << "\n\n";
  for (auto& a : r.artifacts) {
    o << "### " << md_escape(a.name);
    if (!a.where.empty()) o << " (" << a.where << ")";
    o << "\n\n";
    std::visit(
        [&](auto&& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, bool>) {
            o << (x ? "true" : "false") << "\n\n";
          } else if constexpr (std::is_same_v<T, long>) {
            o << x << "\n\n";
          } else if constexpr (std::is_same_v<T, std::string>) {
            o << "`" << x << "`\n\n";
          } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
            for (auto& s : x) o << "- `" << s << "`\n";
            o << "\n";
          } else {
            if (x.empty()) return;
            // Tables carry their header as the first row.
            bool table = a.name.size() > 6 && a.name.substr(a.name.size() - 6) == "_table";
            size_t w = x[0].size();
            o << "|";
            for (size_t i = 0; i < w; ++i) o << " " << (table ? md_escape(x[0][i]) : std::to_string(i + 1)) << " |";
            o << "\n|";
            for (size_t i = 0; i < w; ++i) o << "---|";
            o << "\n";
            for (size_t r0 = table ? 1 : 0; r0 < x.size(); ++r0) {
              auto& row = x[r0];
              o << "|";
              for (auto& c : row) o << " " << md_escape(c) << " |";
              o << "\n";
            }
            o << "\n";
          }
        },
        a.value);
  }
  if (!r.failures.empty()) {
    o << "### failures\n\n";
    for (auto& f : r.failures) o << "- " << f << "\n";
    o << "\n";
  }
  return o.str();
}

}  // namespace hopfmod::cli

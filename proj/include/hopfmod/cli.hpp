// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfmod/multipoly.hpp"
#include "hopfmod/poly.hpp"
#include "hopfmod/rational.hpp"

namespace hopfmod::cli {

class ParseError : public MathError {
 public:
  ParseError(const std::string& what, size_t pos)
      : MathError(what + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

// Bad flags or an unknown command/case; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial text such as "x^3+3x+3", "(w1+w3)/3*(eta1+eta2)" or
// "x^5+2px^{(p-1)/2}+p". Supports + - * ^, division by constants, implicit
// multiplication and braces. With `p` set, the identifier p is replaced by it.
MultiPoly parse_multipoly(std::string_view text, const std::vector<std::string>& vars,
                          std::optional<unsigned long> p = std::nullopt);
QPoly parse_poly(std::string_view text, std::optional<unsigned long> p = std::nullopt, const std::string& var = "x");
Rational parse_constant(std::string_view text);

// ------------------------------------------------------------------ reports

using Cell = std::string;
using Value = std::variant<bool, long, std::string, std::vector<std::string>, std::vector<std::vector<std::string>>>;

struct Artifact {
  std::string name;
  std::string where;  // fixture location label when the artifact is checked against one
  Value value;
  bool operator==(const Artifact& o) const = default;
};

struct Report {
  std::string command;
  std::string case_id;
  unsigned long p = 0;
  bool ok = true;
  std::vector<Artifact> artifacts;
  std::vector<std::string> failures;
  bool operator==(const Report& o) const = default;

  void add(std::string name, Value v, std::string where = {});
  void fail(const std::string& what);
};

std::string to_json(const Report& r);
Report report_from_json(std::string_view text);
std::string to_markdown(const Report& r);

// ------------------------------------------------------------------ commands

struct RunOptions {
  std::string command;
  unsigned long p = 3;
  std::string poly;     // alternative to case_id
  std::string case_id;  // id or 1-based index
  long budget = 2000;
  long precision = 320;  // maximal p-adic precision for square roots
  bool substitute_p = false;
  std::string fixtures_dir;  // empty: default
};

const std::vector<std::string>& commands();
// Throws UsageError for bad options; pipeline errors propagate as MathError
// with the failing stage prefixed.
Report run(const RunOptions& opt);

// HOPFMOD_FIXTURES when set, otherwise the compiled-in source directory.
std::string default_fixtures_dir();
// Every fixture comparison for the given primes (empty: 3 and 5).
Report verify_fixtures(const std::string& dir, const std::vector<unsigned long>& primes = {});

}  // namespace hopfmod::cli

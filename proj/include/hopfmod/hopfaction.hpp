// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfmod/hnf.hpp"
#include "hopfmod/matrix.hpp"
#include "hopfmod/multipoly.hpp"
#include "hopfmod/numberfield.hpp"
#include "hopfmod/quadunit.hpp"

namespace hopfmod::hopfaction {

// Formal labels of a basis of the Hopf algebra, e.g. w1..wp or w1*eta1, ...
struct HopfBasis {
  std::vector<std::string> labels;
  size_t size() const { return labels.size(); }
  static HopfBasis numbered(const std::string& stem, size_t n);
  // Products a_i b_j ordered a1b1, a1b2, a2b1, ...
  static HopfBasis product(const HopfBasis& a, const HopfBasis& b);
};

// n blocks M_j (n x n); column i of block j holds the coordinates of <w_i, gamma_j>.
struct ActionMatrix {
  std::vector<QMatrix> blocks;
  size_t n() const { return blocks.size(); }
  // The n^2 x n stack; row n*j + k, column i.
  QMatrix stacked() const;
  static ActionMatrix from_stacked(const QMatrix& M);
};

// Coordinates of every Gram entry (entry (i,j) -> coordinate vector of length n).
ActionMatrix gram_to_action(const std::vector<std::vector<std::vector<Rational>>>& coords);
ActionMatrix gram_to_action(const Matrix<NFElement>& G);
// Entries in L = E(z), coordinates in the interleaved basis 1, z, a, a z, ...
ActionMatrix gram_to_action(const Matrix<LElement>& G);

// Field-basis change B -> B' with gamma'_j = sum_k P(k,j) gamma_k.
ActionMatrix change_basis_right(const ActionMatrix& M, const QMatrix& P);
// Same over Q[t]/(t^2 - a), with Pinv supplied; the result must be t-free.
ActionMatrix change_basis_right(const ActionMatrix& M, const Matrix<QuadUnitScalar>& P,
                                const Matrix<QuadUnitScalar>& Pinv);
// Gram-level change of basis G * P.
Matrix<LElement> change_basis_right(const Matrix<LElement>& G, const Matrix<LElement>& P);

struct AssocOrderBasis {
  QMatrix coeffs;  // column i: coordinates of v_i in the Hopf basis (D^{-1})
  hnf::HNFResult hnf;
  bool integral = false;  // every block M_j * D^{-1} is p-integral
  std::vector<std::string> render(const HopfBasis& w) const;
};

AssocOrderBasis assoc_order_basis(const ActionMatrix& M, unsigned long p);
// Blocks M_j * C are all p-integral.
bool action_integral(const ActionMatrix& M, const QMatrix& C, unsigned long p);

QMatrix beta_matrix(const ActionMatrix& M, const std::vector<Rational>& beta);

struct GeneratorCheck {
  bool free = false;
  long valuation = kValInf;
  Rational det = 0;
};
GeneratorCheck is_free_generator(const ActionMatrix& M, const std::vector<Rational>& beta, long index,
                                 unsigned long p);

struct GeneratorSearch {
  std::optional<std::vector<Rational>> generator;
  std::string source;  // "all-ones", "candidate", "search"
  long tried = 0;
  long valuation = kValInf;
};
// All-ones, then the supplied candidates, then coordinates in {-2..2}^n until
// `budget` vectors have been tried in total.
GeneratorSearch find_generator(const ActionMatrix& M, long index, unsigned long p, long budget,
                               const std::vector<std::vector<Rational>>& candidates = {});

// det(sum_j b_j M_j) in variables b_1..b_n; refused for n > 6.
MultiPoly symbolic_determinant(const ActionMatrix& M);
inline constexpr size_t kSymbolicLimit = 6;

// Column vector v with sum_l v_l w_l rendered as e.g. "(w1 + w3)/3".
std::string render_combination(const std::vector<Rational>& v, const HopfBasis& w);

}  // namespace hopfmod::hopfaction

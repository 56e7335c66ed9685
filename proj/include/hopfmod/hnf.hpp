// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hopfmod/matrix.hpp"
#include "hopfmod/rational.hpp"

namespace hopfmod::hnf {

struct HNFResult {
  QMatrix D;                // n x n, upper triangular
  std::vector<long> pivots;  // exponents k with D(i,i) = p^k (Z mode: the pivot values' p-free part is not tracked)
  long index = 0;           // v_p(det D) (Z mode: unused)
  Rational scale = 1;       // M = scale * M', the reduction ran on M'
  QMatrix U;                // rows x rows, U * M' = (D // 0)
  // The n rows of U producing D.
  QMatrix certificate() const { return U.block(0, 0, D.rows(), U.cols()); }
};

enum class Residues { Balanced, NonNegative };

// Hermite normal form of a full-column-rank matrix over Z_(p).
HNFResult hnf_reduce(const QMatrix& M, unsigned long p, Residues res = Residues::Balanced);
// Hermite normal form over Z (integer input) with non-negative residues.
HNFResult hnf_reduce_integer(const QMatrix& M);

// U * (M / scale) == (D // 0) and det U is a p-adic unit.
bool check_certificate(const QMatrix& M, const HNFResult& r, unsigned long p);

bool lattice_equal(const QMatrix& D1, const QMatrix& D2, unsigned long p);
long index_of(const QMatrix& D, unsigned long p);

}  // namespace hopfmod::hnf

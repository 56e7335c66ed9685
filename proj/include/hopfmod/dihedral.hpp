// Copyright 2026 The hopfmod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfmod/hnf.hpp"
#include "hopfmod/hopfaction.hpp"
#include "hopfmod/multipoly.hpp"
#include "hopfmod/numberfield.hpp"
#include "hopfmod/padic.hpp"
#include "hopfmod/quadunit.hpp"

namespace hopfmod::dihedral {

enum class Family { Radical, Middle, TopCoeff, Singular };
std::string family_name(Family f);

struct ExtensionCase {
  std::string id;     // e.g. "radical-a1", "case1"
  unsigned long p = 0;
  QPoly f;            // Amano-form Eisenstein polynomial
  QPoly g;            // polynomial used for the field arithmetic (f itself, or a global replacement)
  std::string label;  // database label of g when g != f
  Family family = Family::Radical;
  long a = 0;         // family parameter (radical: 3a constant term; middle: coefficient multiplier)
  Rational zsq;       // z^2
  std::optional<Rational> tsq;  // t^2 = a; absent when the quadratic part is unramified
  std::optional<QPoly> w;       // gamma = t * w(alpha) * z
  // Sign/order conventions: sqrt(d_i) z as polynomials in alpha.
  std::vector<QPoly> sqrt_pins;
  std::vector<std::vector<Rational>> eps_candidates;   // degree-p generator candidates
  std::vector<std::vector<Rational>> beta_candidates;  // candidates in gamma-power coordinates
  bool has_fixtures = false;
  bool totally_ramified() const { return tsq.has_value(); }
};

// p = 3: six cases; p = 5: three; other odd primes: the three generic families
// (quadratic-factor lifting unavailable).
std::vector<ExtensionCase> catalog(unsigned long p);
// By id or 1-based position.
ExtensionCase find_case(unsigned long p, const std::string& key);
// A case for an arbitrary Eisenstein polynomial matching a catalog entry, or
// nullopt.
std::optional<ExtensionCase> case_for_poly(unsigned long p, const QPoly& f);

struct OreData {
  long j0 = 0;
  long val = 0;
  long res_sylvester = 0;  // v_p(Res(f, f')) via Sylvester determinant
  long res_euclid = 0;     // v_p(Res(f, f')) via remainder sequence
  bool consistent() const { return val == res_sylvester && val == res_euclid; }
};
OreData ore_disc_valuation(const QPoly& f, unsigned long p);

struct RamificationChain {
  std::vector<std::string> groups;
  std::vector<long> orders;  // |G_i| for G_0, G_1, ...
  long residue_degree = 1;
  long discE_val = 0, discL_val = 0;
  bool weakly_ramified = false;
  // residue_degree * sum(|G_i| - 1) == discL_val
  bool identity_holds() const;
};
RamificationChain ramification_chain(const ExtensionCase& c);

// (U_j, V_j) of the Lucas sequences with parameters A, B.
std::pair<NFElement, NFElement> lucas(const NFElement& A, const NFElement& B, long j);

// Degree-p data: quadratic factors and sqrt(d_i) z.
struct DegreePData {
  FieldPtr field;
  std::vector<padic::QuadraticFactor> factors;
  std::vector<NFElement> sqrt_dz;
};
enum class LiftMode { Generic, Fixture };
// Generic: lift factors p-adically and take Hensel square roots (pins fix
// order and sign). Fixture: build from the pinned sqrt(d_i) z values alone,
// solving for A_i, B_i exactly. Both verify g = (x - alpha) prod P_i.
DegreePData degree_p_data(const ExtensionCase& c, LiftMode mode = LiftMode::Generic,
                          const padic::SqrtOptions& opt = {});

Matrix<NFElement> gram_degree_p(const ExtensionCase& c, const DegreePData& d);
hopfaction::HopfBasis degree_p_basis(unsigned long p);

struct DegreePResult {
  Matrix<NFElement> gram;
  hopfaction::ActionMatrix action;
  hopfaction::AssocOrderBasis basis;
  std::vector<std::string> basis_labels;
  std::optional<MultiPoly> d_eps;  // symbolic determinant (n <= 6)
  hopfaction::GeneratorSearch generator;
};
DegreePResult degree_p_pipeline(const ExtensionCase& c, long budget = 2000, LiftMode mode = LiftMode::Generic,
                                const padic::SqrtOptions& opt = {});

struct QuadraticStructure {
  Matrix<LElement> gram;
  hopfaction::ActionMatrix action;
  hopfaction::AssocOrderBasis basis;  // over Z_(p)
  hnf::HNFResult integer_hnf;        // over Z
  std::vector<std::string> basis_labels;
  unsigned long p = 0;
  // delta = delta1 + delta2 z is a free generator iff v_p(delta1 delta2) = 0.
  bool predicate(const Rational& d1, const Rational& d2) const;
};
QuadraticStructure quadratic_structure(const Rational& zsq, unsigned long p);

// gamma = t w z with t^2 = a. R has column k = coordinates of (w z)^k in the
// interleaved tensor basis, so P = R diag(t^k).
struct GammaPowers {
  QMatrix R;
  Rational a;
  Matrix<QuadUnitScalar> P, Pinv;
};
GammaPowers gamma_powers_matrix(const ExtensionCase& c);

struct MinPolyGamma {
  QPoly poly;  // in Y
  bool squarefree = false, annihilates = false, eisenstein = false, dual_route = false;
};
MinPolyGamma min_poly_gamma(const ExtensionCase& c);

struct InducedResult {
  Matrix<LElement> gram_tensor;                 // G(H_1,E) (x) G(H_2,F)
  std::vector<std::vector<QPoly>> gram_gamma;  // entries of G(H_W, L_B') as polynomials in gamma
  hopfaction::ActionMatrix action;            // M(H_W, L_B')
  hopfaction::AssocOrderBasis basis;
  std::vector<std::string> basis_labels;
  QMatrix degree_p_D;
  bool tensor_equal = false;
  std::optional<MultiPoly> d_beta;
  hopfaction::GeneratorSearch generator;
};
InducedResult induced_pipeline(const ExtensionCase& c, long budget = 2000, LiftMode mode = LiftMode::Generic,
                               const padic::SqrtOptions& opt = {});

// Coordinates in B' of (sum eps_i alpha^{i-1})(delta_1 + delta_2 z).
std::vector<QuadUnitScalar> beta_prime_coords(const ExtensionCase& c, const std::vector<Rational>& eps,
                                              const std::vector<Rational>& delta);

struct ProductCheck {
  std::vector<QuadUnitScalar> beta_prime;  // coordinates in B'
  QuadUnitScalar det;
  long valuation = kValInf;
  long index = 0;
  bool generator = false;
};
ProductCheck product_generator_check(const ExtensionCase& c, const InducedResult& r, const std::vector<Rational>& eps,
                                     const std::vector<Rational>& delta);

}  // namespace hopfmod::dihedral

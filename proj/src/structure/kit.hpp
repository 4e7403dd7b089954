#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "algebra/eps_complex.hpp"
#include "algebra/poly_matrix.hpp"
#include "structure/check_report.hpp"
#include "structure/structure.hpp"

namespace tanlift::structure {

/// Axiom residuals: pairing, F(xi), eta o F and the square identity, plus a
/// sampled-rank note. Failures are report entries, never exceptions.
CheckReport check_axioms(const RContactStructure& s, AxiomMode mode,
                         AxiomSystem system = AxiomSystem::RContact,
                         std::uint64_t seed = kDefaultSeed);

/// Metric compatibility residuals. Throws MissingMetric without a metric.
CheckReport check_metric(const RContactStructure& s, std::uint64_t seed = kDefaultSeed);

/// Coordinates (a_i, b_i, c_a) with F(d/da_i) = d/db_i, F(d/db_i) = eps d/da_i,
/// F(d/dc_a) = 0, xi_a = d/dc_a, eta^a = +-dc_a and a diagonal metric that is
/// -1 on the c-block exactly for Lorentzian data.
RContactStructure canonical_structure(int n, int r, int epsilon, Signature signature);

/// F' = U F U^-1, xi' = U xi, eta' = eta o U^-1, G' = (U^-1)^T G U^-1.
/// Throws NotUnimodular.
RContactStructure conjugate_structure(const RContactStructure& s, const algebra::PolyMatrix& u);

/// Product of 1..max_shears random shears whose off-diagonal entry is a
/// polynomial of degree <= max_degree with one or two terms.
algebra::PolyMatrix random_unimodular(const Chart& chart, std::mt19937_64& rng,
                                      int max_shears = 4, int max_degree = 2);

/// Result of applying the square identity to xi_b symbolically: with
/// F(xi) = 0 the identity forces (a + sigma*kappa) xi_b = 0, where a and sigma
/// are the coefficients of I and sum(xi (x) eta), written as polynomials in
/// the symbol `eps`.
struct LintResult {
  AxiomSystem system = AxiomSystem::RContact;
  AxiomMode mode = AxiomMode::PaperLiteral;
  Signature signature = Signature::Riemannian;
  int epsilon = -1;
  algebra::Poly obstruction;         // a + sigma*kappa as a polynomial in eps
  std::optional<int> forced_epsilon;  // the single admissible value, if any
  bool satisfiable_for_all = false;   // obstruction vanishes identically
  bool consistent = false;            // obstruction vanishes at `epsilon`
  std::vector<std::string> notes;
};

LintResult consistency_lint(AxiomSystem system, AxiomMode mode, int epsilon, Signature signature);

/// The square identity's right-hand side coefficients for given settings.
struct SquareRule {
  int identity_coef;  // coefficient of I
  int sum_coef;       // coefficient of sum_a xi_a (x) eta^a
  std::string text;   // e.g. "eps*I + sum_a xi_a (x) eta^a"
  std::string tag;
};

SquareRule square_rule(AxiomSystem system, AxiomMode mode, int epsilon, Signature signature);

struct EigenCheck {
  std::string vector;  // e.g. "1/2(d/dx - i d/dy)"
  std::size_t index;   // which coordinate pair
  algebra::EpsComplex expected;
  bool holds;
  algebra::EpsComplex eigenvalue_square;  // expected^2, compared with eps
};

struct ComplexStructureReport {
  TensorField J;
  TensorField square_residual;       // J^2 - eps*I
  TensorField dual_square_residual;  // (J*)^2 - eps*I
  std::vector<EigenCheck> eigen;
  bool passed() const;
};

/// J(d/dx^i) = d/dy^i, J(d/dy^i) = eps d/dx^i on a 2n-dimensional chart, with
/// eigenvector checks of 1/2(d/dx -+ i d/dy) in eps-complex arithmetic.
ComplexStructureReport canonical_complex(int n, int epsilon);
/// Same on a given chart, whose first half of coordinates are the x^i.
/// Throws OddDimension.
ComplexStructureReport canonical_complex(const Chart& chart, int epsilon);

}  // namespace tanlift::structure

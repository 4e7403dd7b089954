#pragma once

#include <optional>
#include <vector>

#include "lift/lift.hpp"
#include "structure/check_report.hpp"
#include "structure/structure.hpp"

namespace tanlift::lift {

/// Lifts of every piece of a structure for one lift kind (complete or
/// horizontal), plus the vertical lifts the identities pair them with.
struct LiftedStructure {
  LiftKind kind = LiftKind::Complete;
  TensorField F_lift;
  TensorField F_vertical;
  std::vector<TensorField> xi_vertical;
  std::vector<TensorField> xi_lift;
  std::vector<TensorField> eta_vertical;
  std::vector<TensorField> eta_lift;
};

/// kind must be Complete or Horizontal; Horizontal needs `conn`.
LiftedStructure lift_structure(const structure::RContactStructure& s, const TangentChart& tc,
                               LiftKind kind, const Connection* conn = nullptr);

/// (F^L)^2 - eps*I compared against sum_a (xi_a^v (x) eta^aL + xi_a^L (x) eta^av).
struct SquareExpansion {
  TensorField square;     // (F^L)^2
  TensorField deviation;  // (F^L)^2 - eps*I
  TensorField pattern;    // sum_a (xi_a^v (x) eta^aL + xi_a^L (x) eta^av)
  std::optional<int> coefficient;  // c with deviation = c * pattern, c in {-1, 0, 1}
};

SquareExpansion square_expansion(const structure::RContactStructure& s, const TangentChart& tc,
                                 const LiftedStructure& lifted);

/// Residual table of the lift-interaction identities for the given kind.
structure::CheckReport verify_lift_interactions(const structure::RContactStructure& s,
                                                const TangentChart& tc, LiftKind kind,
                                                const Connection* conn = nullptr,
                                                std::uint64_t seed = structure::kDefaultSeed);

}  // namespace tanlift::lift

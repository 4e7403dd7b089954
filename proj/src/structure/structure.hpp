#pragma once

#include <optional>
#include <vector>

#include "tensor/tensor_field.hpp"

namespace tanlift::structure {

using tensor::Chart;
using tensor::TensorField;

enum class Signature { Riemannian, Lorentzian };

/// Which form of the square identity the axioms use.
///
/// PaperLiteral: F^2 = eps*I + sigma*sum(xi (x) eta) with sigma fixed by the
/// axiom system. Consistent: F^2 = eps*(I - sum) for Riemannian data and
/// eps*(I + sum) for Lorentzian data, satisfiable for both eps.
enum class AxiomMode { PaperLiteral, Consistent };

/// RContact: the r-structure axioms (sum sign + for Riemannian, - for
/// Lorentzian). Contact: the r = 1 contact axioms, whose square identity
/// carries the opposite sign.
enum class AxiomSystem { RContact, Contact };

const char* to_string(Signature s);
const char* to_string(AxiomMode m);
const char* to_string(AxiomSystem s);

/// Pairing sign kappa in eta^a(xi_b) = kappa * delta^a_b.
inline int pairing_sign(Signature s) { return s == Signature::Riemannian ? 1 : -1; }

/// Almost (Lorentzian) r-contact / r-paracontact data (F, xi_a, eta^a) on a
/// chart of dimension 2n + r, with optional compatible metric.
struct RContactStructure {
  Chart chart;
  int n = 0;
  int r = 0;
  TensorField F;
  std::vector<TensorField> xi;
  std::vector<TensorField> eta;
  int epsilon = -1;
  Signature signature = Signature::Riemannian;
  std::optional<TensorField> metric;

  /// Throws InvalidArgument on any shape inconsistency.
  void validate() const;

  /// sum_a xi_a (x) eta^a
  TensorField xi_eta_sum() const;
};

/// The r = 1 case, named after its usual symbols (phi, xi, eta, G).
using ContactStructure = RContactStructure;

}  // namespace tanlift::structure

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lift/interactions.hpp"
#include "lift/lift.hpp"
#include "structure/check_report.hpp"
#include "structure/structure.hpp"

namespace tanlift::theorem {

using lift::Connection;
using lift::LiftKind;
using lift::TangentChart;
using structure::RContactStructure;
using structure::Signature;
using tensor::TensorField;

enum class TheoremId { T41, T42, T43, T44 };

const char* to_string(TheoremId id);  // "4.1" ...
std::optional<TheoremId> parse_theorem(std::string_view text);

/// J = F^L + s * sum_a xi_a^v (x) eta^av + t * sum_a xi_a^L (x) eta^aL with L
/// the complete or horizontal lift.
struct LiftedStructureSpec {
  RContactStructure base;
  LiftKind kind = LiftKind::Complete;
  std::optional<Connection> conn;  // required iff kind == Horizontal
  int s = 1;
  int t = -1;
};

/// Sign choice and lift kind of a numbered theorem. Horizontal theorems use
/// `conn` when given, else the flat connection.
LiftedStructureSpec theorem_spec(TheoremId id, RContactStructure base,
                                 std::optional<Connection> conn = std::nullopt);
/// The numbered theorem with this lift kind and sign choice, if any.
std::optional<TheoremId> theorem_of(LiftKind kind, int s, int t);

struct SignLedgerRow {
  int epsilon;
  Signature signature;
  int s;
  int t;
  bool pass;
};

struct TheoremVerdict {
  TensorField J;
  TensorField residual;  // J^2 - eps*I
  bool pass = false;
  std::optional<tensor::Witness> witness;
  SignLedgerRow row;
  std::string tag;
};

TensorField build_lifted_J(const LiftedStructureSpec& spec, const TangentChart& tc);
TensorField build_lifted_J(const LiftedStructureSpec& spec, const TangentChart& tc,
                           const lift::LiftedStructure& lifted);

TheoremVerdict verify_theorem(const LiftedStructureSpec& spec, const TangentChart& tc,
                              std::uint64_t seed = structure::kDefaultSeed);

struct SweepCell {
  int s;
  int t;
  bool pass;
  bool predicted;
  std::optional<tensor::Witness> witness;
};

/// Exhaustive (s, t) sweep with the predicted law: pass iff s*t*kappa = -c,
/// where c is read off the engine's own (F^L)^2 and kappa off the lifted
/// pairing eta^av(xi_b^L).
struct SweepLedger {
  LiftKind kind = LiftKind::Complete;
  int epsilon = -1;
  Signature signature = Signature::Riemannian;
  std::optional<int> c;
  std::optional<int> kappa;
  std::vector<SweepCell> cells;

  bool law_holds() const;
};

SweepLedger sign_sweep(const RContactStructure& base, const TangentChart& tc, LiftKind kind,
                       const Connection* conn = nullptr, std::uint64_t seed = structure::kDefaultSeed);

struct LabelledVector {
  std::string label;
  TensorField field;
};

/// Residuals of J X^v and J X^L against the right-hand sides derived from
/// (s, t), of J xi_b^v and J xi_b^L, and errata wherever the printed display
/// for the matching theorem differs from the derived coefficients.
structure::CheckReport verify_action_formulas(const LiftedStructureSpec& spec, const TangentChart& tc,
                                              std::span<const LabelledVector> xs,
                                              std::uint64_t seed = structure::kDefaultSeed);

}  // namespace tanlift::theorem

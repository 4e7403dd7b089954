#include "lift/interactions.hpp"

#include <string>

#include "common/error.hpp"

namespace tanlift::lift {

using structure::CheckReport;
using structure::RContactStructure;
using structure::Signature;
using tensor::endo_apply;
using tensor::endo_compose;
using tensor::oneform_apply;
using tensor::oneform_compose;
using tensor::outer;

LiftedStructure lift_structure(const RContactStructure& s, const TangentChart& tc, LiftKind kind,
                               const Connection* conn) {
  if (kind == LiftKind::Vertical) {
    throw Error(ErrorCode::InvalidArgument, "structures are lifted by complete or horizontal lifts");
  }
  LiftedStructure out;
  out.kind = kind;
  out.F_lift = lift_endo(tc, s.F, kind, conn);
  out.F_vertical = lift_endo(tc, s.F, LiftKind::Vertical);
  for (std::size_t a = 0; a < s.xi.size(); ++a) {
    out.xi_vertical.push_back(lift_vector(tc, s.xi[a], LiftKind::Vertical));
    out.xi_lift.push_back(lift_vector(tc, s.xi[a], kind, conn));
    out.eta_vertical.push_back(lift_oneform(tc, s.eta[a], LiftKind::Vertical));
    out.eta_lift.push_back(lift_oneform(tc, s.eta[a], kind, conn));
  }
  return out;
}

SquareExpansion square_expansion(const RContactStructure& s, const TangentChart& tc,
                                 const LiftedStructure& lifted) {
  SquareExpansion out;
  out.square = endo_compose(lifted.F_lift, lifted.F_lift);
  out.deviation = out.square - TensorField::identity(tc.total()).scaled(s.epsilon);
  out.pattern = TensorField::zero(tc.total(), Valence::Endo);
  for (std::size_t a = 0; a < lifted.xi_lift.size(); ++a) {
    out.pattern = out.pattern + outer(lifted.xi_vertical[a], lifted.eta_lift[a]) +
                  outer(lifted.xi_lift[a], lifted.eta_vertical[a]);
  }
  for (int c : {1, -1, 0}) {
    if ((out.deviation - out.pattern.scaled(c)).is_zero()) {
      out.coefficient = c;
      break;
    }
  }
  return out;
}

CheckReport verify_lift_interactions(const RContactStructure& s, const TangentChart& tc,
                                     LiftKind kind, const Connection* conn, std::uint64_t seed) {
  const LiftedStructure l = lift_structure(s, tc, kind, conn);
  const bool lorentz = s.signature == Signature::Lorentzian;
  const int kappa = structure::pairing_sign(s.signature);
  const std::string L = superscript(kind);
  const Chart& total = tc.total();
  auto delta = [&](std::size_t a, std::size_t b) {
    return TensorField::scalar(total, Poly(a == b ? kappa : 0, total.coords()));
  };
  auto idx = [](std::size_t a) { return std::to_string(a + 1); };

  CheckReport report;
  report.seed = seed;
  const bool complete = kind == LiftKind::Complete;
  const std::string tag_apply = complete ? (lorentz ? "(2.11)" : "(2.3)") : "(2.18)";
  const std::string tag_compose = complete ? (lorentz ? "(2.12)" : "(2.4)") : "(2.19)";
  const std::string tag_pair = complete ? (lorentz ? "(2.13)" : "(2.5)") : "(2.20)";

  const TensorField f_squared = endo_compose(s.F, s.F);
  report.add("(F^2)^" + L + " - (F^" + L + ")^2", complete ? "(2.1)-(2.2)" : "(2.16)-(2.17)",
             lift_endo(tc, f_squared, kind, conn) - endo_compose(l.F_lift, l.F_lift));

  for (std::size_t a = 0; a < s.xi.size(); ++a) {
    const std::string xa = "xi_" + idx(a);
    if (complete) {
      report.add("F^c(" + xa + "^v)", tag_apply, endo_apply(l.F_lift, l.xi_vertical[a]));
      report.add("F^c(" + xa + "^c)", tag_apply, endo_apply(l.F_lift, l.xi_lift[a]));
    } else {
      report.add("F^h(" + xa + "^h)", tag_apply, endo_apply(l.F_lift, l.xi_lift[a]));
      report.add("F^h(" + xa + "^v)", tag_apply, endo_apply(l.F_lift, l.xi_vertical[a]));
    }
  }
  for (std::size_t a = 0; a < s.eta.size(); ++a) {
    const std::string ea = "eta^" + idx(a);
    if (complete) {
      report.add(ea + "v o F^c", tag_compose, oneform_compose(l.eta_vertical[a], l.F_lift));
      report.add(ea + "c o F^v", tag_compose, oneform_compose(l.eta_lift[a], l.F_vertical));
      report.add(ea + "c o F^c", tag_compose, oneform_compose(l.eta_lift[a], l.F_lift));
    } else {
      report.add(ea + "h o F^h", tag_compose, oneform_compose(l.eta_lift[a], l.F_lift));
      report.add(ea + "v o F^h", tag_compose, oneform_compose(l.eta_vertical[a], l.F_lift));
    }
  }
  for (std::size_t a = 0; a < s.eta.size(); ++a) {
    for (std::size_t b = 0; b < s.xi.size(); ++b) {
      const std::string ea = "eta^" + idx(a);
      const std::string xb = "xi_" + idx(b);
      if (complete) {
        report.add(ea + "v(" + xb + "^v)", tag_pair, oneform_apply(l.eta_vertical[a], l.xi_vertical[b]));
        report.add(ea + "v(" + xb + "^c) - kappa*delta", tag_pair,
                   oneform_apply(l.eta_vertical[a], l.xi_lift[b]) - delta(a, b));
        report.add(ea + "c(" + xb + "^v) - kappa*delta", tag_pair,
                   oneform_apply(l.eta_lift[a], l.xi_vertical[b]) - delta(a, b));
        report.add(ea + "c(" + xb + "^c)", tag_pair, oneform_apply(l.eta_lift[a], l.xi_lift[b]));
      } else {
        report.add(ea + "h(" + xb + "^h)", tag_pair, oneform_apply(l.eta_lift[a], l.xi_lift[b]));
        report.add(ea + "h(" + xb + "^v) - kappa*delta", tag_pair,
                   oneform_apply(l.eta_lift[a], l.xi_vertical[b]) - delta(a, b));
        report.add(ea + "v(" + xb + "^h) - kappa*delta", tag_pair,
                   oneform_apply(l.eta_vertical[a], l.xi_lift[b]) - delta(a, b));
      }
    }
  }
  report.notes.push_back("kappa = " + std::to_string(kappa) + " (" + structure::to_string(s.signature) +
                         " pairing)");

  const SquareExpansion sq = square_expansion(s, tc, l);
  if (sq.coefficient) {
    report.notes.push_back("(F^" + L + ")^2 = eps*I + c*sum_a(xi_a^v (x) eta^a" + L + " + xi_a^" + L +
                           " (x) eta^av) with c = " + std::to_string(*sq.coefficient));
  } else {
    report.notes.push_back("(F^" + L + ")^2 - eps*I is not a multiple of sum_a(xi_a^v (x) eta^a" + L +
                           " + xi_a^" + L + " (x) eta^av)");
  }
  return report;
}

}  // namespace tanlift::lift

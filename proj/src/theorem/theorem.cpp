#include "theorem/theorem.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace tanlift::theorem {

using lift::LiftedStructure;
using structure::CheckReport;
using structure::Erratum;
using tensor::Poly;
using tensor::Valence;

namespace {

std::string sign_str(int v) { return v < 0 ? "-1" : "+1"; }

std::string idx(std::size_t a) { return std::to_string(a + 1); }

const Connection* conn_ptr(const LiftedStructureSpec& spec) {
  if (spec.kind == LiftKind::Horizontal && !spec.conn) {
    throw Error(ErrorCode::MissingConnection, "horizontal lifted structure needs a connection");
  }
  return spec.conn ? &*spec.conn : nullptr;
}

// Pairing sign read off eta^av(xi_b^L) = kappa*delta, if it has that form.
std::optional<int> lifted_pairing_sign(const LiftedStructure& l, const tensor::Chart& total) {
  if (l.xi_lift.empty()) return std::nullopt;
  for (int kappa : {1, -1}) {
    bool ok = true;
    for (std::size_t a = 0; a < l.eta_vertical.size() && ok; ++a) {
      for (std::size_t b = 0; b < l.xi_lift.size() && ok; ++b) {
        const Poly v = tensor::oneform_apply(l.eta_vertical[a], l.xi_lift[b]).value();
        ok = v == Poly(a == b ? kappa : 0, total.coords());
      }
    }
    if (ok) return kappa;
  }
  return std::nullopt;
}

// Printed post-theorem displays, as sign coefficients.
struct PrintedDisplays {
  int xv_coef;    // (eta(X))^v xi^L in J X^v
  int xl_vcoef;   // (eta(X))^v xi^v in J X^L
  int xl_lcoef;   // (eta(X))^L xi^L in J X^L
  bool undefined_symbol;
  std::vector<int> xi_v_coefs;  // chained values printed for J xi^v
  std::vector<int> xi_l_coefs;  // chained values printed for J xi^L
  std::string xi_v_text;
  std::string xi_l_text;
};

std::optional<PrintedDisplays> printed_displays(TheoremId id) {
  switch (id) {
    case TheoremId::T41:
      return PrintedDisplays{-1, 1, -1, true, {-1, 1}, {1, 1},
                             "J~ xi_a^v = -delta xi_a^c = xi_b^c", "J~ xi_a^c = delta xi_a^v = xi_b^v"};
    case TheoremId::T42:
      return PrintedDisplays{1, -1, 1, false, {1, 1}, {1, 1},
                             "J^ xi_a^v = delta xi_a^c = xi_b^c", "J^ xi_a^c = delta xi_a^v = xi_b^v"};
    case TheoremId::T43:
      return PrintedDisplays{-1, 1, -1, false, {1, 1}, {1, 1},
                             "J~* xi_a^v = delta xi_a^h = xi_b^h", "J~* xi_a^h = delta xi_a^v = xi_b^v"};
    case TheoremId::T44: return std::nullopt;
  }
  return std::nullopt;
}

std::string theorem_tag(std::optional<TheoremId> id) {
  if (!id) return "";
  switch (*id) {
    case TheoremId::T41: return "(2.8)";
    case TheoremId::T42: return "(2.15)";
    case TheoremId::T43: return "(2.22)";
    case TheoremId::T44: return "Thm 4.4";
  }
  return "";
}

}  // namespace

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T41: return "4.1";
    case TheoremId::T42: return "4.2";
    case TheoremId::T43: return "4.3";
    case TheoremId::T44: return "4.4";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view text) {
  for (TheoremId id : {TheoremId::T41, TheoremId::T42, TheoremId::T43, TheoremId::T44}) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

LiftedStructureSpec theorem_spec(TheoremId id, RContactStructure base, std::optional<Connection> conn) {
  LiftedStructureSpec spec;
  spec.kind = (id == TheoremId::T41 || id == TheoremId::T42) ? LiftKind::Complete : LiftKind::Horizontal;
  spec.s = (id == TheoremId::T41 || id == TheoremId::T43) ? 1 : -1;
  spec.t = -spec.s;
  if (spec.kind == LiftKind::Horizontal) spec.conn = conn ? std::move(conn) : Connection::flat(base.chart);
  spec.base = std::move(base);
  return spec;
}

std::optional<TheoremId> theorem_of(LiftKind kind, int s, int t) {
  if (s == 1 && t == -1) {
    if (kind == LiftKind::Complete) return TheoremId::T41;
    if (kind == LiftKind::Horizontal) return TheoremId::T43;
  }
  if (s == -1 && t == 1) {
    if (kind == LiftKind::Complete) return TheoremId::T42;
    if (kind == LiftKind::Horizontal) return TheoremId::T44;
  }
  return std::nullopt;
}

TensorField build_lifted_J(const LiftedStructureSpec& spec, const TangentChart& tc,
                           const LiftedStructure& l) {
  TensorField j = l.F_lift;
  for (std::size_t a = 0; a < l.xi_lift.size(); ++a) {
    j = j + tensor::outer(l.xi_vertical[a], l.eta_vertical[a]).scaled(spec.s) +
        tensor::outer(l.xi_lift[a], l.eta_lift[a]).scaled(spec.t);
  }
  (void)tc;
  return j;
}

TensorField build_lifted_J(const LiftedStructureSpec& spec, const TangentChart& tc) {
  spec.base.validate();
  const LiftedStructure l = lift::lift_structure(spec.base, tc, spec.kind, conn_ptr(spec));
  return build_lifted_J(spec, tc, l);
}

TheoremVerdict verify_theorem(const LiftedStructureSpec& spec, const TangentChart& tc, std::uint64_t seed) {
  TheoremVerdict v;
  v.J = build_lifted_J(spec, tc);
  v.residual = tensor::endo_compose(v.J, v.J) - TensorField::identity(tc.total()).scaled(spec.base.epsilon);
  v.pass = v.residual.is_zero();
  if (!v.pass) v.witness = tensor::find_witness(v.residual, seed);
  v.row = SignLedgerRow{spec.base.epsilon, spec.base.signature, spec.s, spec.t, v.pass};
  v.tag = theorem_tag(theorem_of(spec.kind, spec.s, spec.t));
  return v;
}

bool SweepLedger::law_holds() const {
  return std::all_of(cells.begin(), cells.end(), [](const SweepCell& c) { return c.pass == c.predicted; });
}

SweepLedger sign_sweep(const RContactStructure& base, const TangentChart& tc, LiftKind kind,
                       const Connection* conn, std::uint64_t seed) {
  base.validate();
  std::optional<Connection> flat;
  if (kind == LiftKind::Horizontal && conn == nullptr) {
    flat = Connection::flat(base.chart);
    conn = &*flat;
  }
  const LiftedStructure l = lift::lift_structure(base, tc, kind, conn);
  const lift::SquareExpansion sq = lift::square_expansion(base, tc, l);

  SweepLedger ledger;
  ledger.kind = kind;
  ledger.epsilon = base.epsilon;
  ledger.signature = base.signature;
  ledger.kappa = lifted_pairing_sign(l, tc.total());
  if (!base.xi.empty()) ledger.c = sq.coefficient;

  LiftedStructureSpec spec;
  spec.base = base;
  spec.kind = kind;
  if (conn) spec.conn = *conn;
  const TensorField eps_id = TensorField::identity(tc.total()).scaled(base.epsilon);
  for (int s : {1, -1}) {
    for (int t : {1, -1}) {
      spec.s = s;
      spec.t = t;
      const TensorField j = build_lifted_J(spec, tc, l);
      const TensorField residual = tensor::endo_compose(j, j) - eps_id;
      SweepCell cell{s, t, residual.is_zero(), false, std::nullopt};
      if (base.xi.empty()) {
        cell.predicted = sq.deviation.is_zero();
      } else if (ledger.c && ledger.kappa) {
        cell.predicted = s * t * *ledger.kappa == -*ledger.c;
      }
      if (!cell.pass) cell.witness = tensor::find_witness(residual, seed);
      ledger.cells.push_back(std::move(cell));
    }
  }
  return ledger;
}

CheckReport verify_action_formulas(const LiftedStructureSpec& spec, const TangentChart& tc,
                                   std::span<const LabelledVector> xs, std::uint64_t seed) {
  spec.base.validate();
  const RContactStructure& b = spec.base;
  const Connection* conn = conn_ptr(spec);
  const LiftedStructure l = lift::lift_structure(b, tc, spec.kind, conn);
  const TensorField j = build_lifted_J(spec, tc, l);
  const bool complete = spec.kind == LiftKind::Complete;
  const std::string L = lift::superscript(spec.kind);
  const int kappa = structure::pairing_sign(b.signature);
  const std::optional<TheoremId> id = theorem_of(spec.kind, spec.s, spec.t);
  const std::string tag = id ? std::string("post-") + to_string(*id) : "";

  CheckReport report;
  report.seed = seed;
  auto vert = [&](const TensorField& f) { return lift::lift(tc, f, LiftKind::Vertical); };
  auto up = [&](const TensorField& f) { return lift::lift(tc, f, spec.kind, conn); };

  for (const LabelledVector& x : xs) {
    const TensorField fx = tensor::endo_apply(b.F, x.field);
    std::vector<TensorField> eta_x;
    bool annihilated = true;
    for (const TensorField& e : b.eta) {
      eta_x.push_back(tensor::oneform_apply(e, x.field));
      annihilated = annihilated && eta_x.back().is_zero();
    }
    const TensorField xv = vert(x.field);
    const TensorField xl = up(x.field);

    TensorField rhs_v = vert(fx);
    TensorField rhs_l = up(fx);
    for (std::size_t a = 0; a < b.xi.size(); ++a) {
      const Poly ex_v = vert(eta_x[a]).value();
      rhs_v = rhs_v + l.xi_lift[a].scaled(ex_v).scaled(spec.t);
      rhs_l = rhs_l + l.xi_vertical[a].scaled(ex_v).scaled(spec.s);
      if (complete) {
        const Poly ex_c = lift::lift_function(tc, eta_x[a], LiftKind::Complete).value();
        rhs_l = rhs_l + l.xi_lift[a].scaled(ex_c).scaled(spec.t);
      }
    }
    const std::string tail_l = complete ? " + t*(eta^a(X))^c xi_a^c" : "";
    report.add("J X^v - [(FX)^v + t*(eta^a(X))^v xi_a^" + L + "], X = " + x.label, tag,
               tensor::endo_apply(j, xv) - rhs_v);
    report.add("J X^" + L + " - [(FX)^" + L + " + s*(eta^a(X))^v xi_a^v" + tail_l + "], X = " + x.label,
               tag, tensor::endo_apply(j, xl) - rhs_l);
    if (annihilated) {
      report.add("J X^v - (FX)^v, eta(X) = 0, X = " + x.label, tag, tensor::endo_apply(j, xv) - vert(fx));
      report.add("J X^" + L + " - (FX)^" + L + ", eta(X) = 0, X = " + x.label, tag,
                 tensor::endo_apply(j, xl) - up(fx));
    }
  }

  const int xi_v_coef = spec.t * kappa;
  const int xi_l_coef = spec.s * kappa;
  for (std::size_t a = 0; a < b.xi.size(); ++a) {
    report.add("J xi_" + idx(a) + "^v - (" + sign_str(xi_v_coef) + ") xi_" + idx(a) + "^" + L, tag,
               tensor::endo_apply(j, l.xi_vertical[a]) - l.xi_lift[a].scaled(xi_v_coef));
    report.add("J xi_" + idx(a) + "^" + L + " - (" + sign_str(xi_l_coef) + ") xi_" + idx(a) + "^v", tag,
               tensor::endo_apply(j, l.xi_lift[a]) - l.xi_vertical[a].scaled(xi_l_coef));
  }

  const std::optional<PrintedDisplays> printed = id ? printed_displays(*id) : std::nullopt;
  if (!printed) return report;
  const std::string where = std::string("display after Theorem ") + to_string(*id);

  if (printed->undefined_symbol) {
    report.errata.push_back(Erratum{where + " (J X^v, J X^c)", "U_a^c, U_a^v (symbol defined nowhere)",
                                    "verified with xi_a^c, xi_a^v; U_a presumed to be xi_a"});
  }
  auto check_coef = [&](const std::string& display, int printed_coef, int derived) {
    if (printed_coef != derived) {
      report.errata.push_back(Erratum{where + " (" + display + ")", "coefficient " + sign_str(printed_coef),
                                      "coefficient " + sign_str(derived)});
    }
  };
  check_coef("(eta(X))^v xi^" + L + " in J X^v", printed->xv_coef, spec.t);
  check_coef("(eta(X))^v xi^v in J X^" + L, printed->xl_vcoef, spec.s);
  if (complete) {
    check_coef("(eta(X))^c xi^c in J X^c", printed->xl_lcoef, spec.t);
  } else {
    report.notes.push_back(where + ": the term (eta(X))^h xi^h is read as eta^h(X^h) xi^h, which is 0");
  }

  auto check_chain = [&](const std::string& text, const std::vector<int>& coefs, int derived,
                         const std::string& derived_text) {
    const bool chain_consistent = std::adjacent_find(coefs.begin(), coefs.end(),
                                                     std::not_equal_to<>()) == coefs.end();
    if (!chain_consistent) {
      report.errata.push_back(Erratum{where + " (" + text + ")", "internally inconsistent: " + text,
                                      derived_text});
    } else if (coefs.front() != derived) {
      report.errata.push_back(Erratum{where + " (" + text + ")", text, derived_text});
    }
  };
  check_chain(printed->xi_v_text, printed->xi_v_coefs, xi_v_coef,
              "J xi_b^v = " + std::string(xi_v_coef < 0 ? "-" : "") + "xi_b^" + L);
  check_chain(printed->xi_l_text, printed->xi_l_coefs, xi_l_coef,
              "J xi_b^" + L + " = " + std::string(xi_l_coef < 0 ? "-" : "") + "xi_b^v");
  return report;
}

}  // namespace tanlift::theorem

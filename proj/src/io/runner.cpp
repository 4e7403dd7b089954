#include "io/runner.hpp"

#include "common/error.hpp"
#include "lift/interactions.hpp"
#include "structure/kit.hpp"
#include "theorem/theorem.hpp"

namespace tanlift::io {

using lift::Connection;
using lift::LiftKind;
using lift::TangentChart;
using structure::AxiomMode;
using structure::Signature;
using tensor::TensorField;

namespace {

std::string sign_text(int v) { return v < 0 ? "-1" : "+1"; }

std::string theorem_label(const std::optional<theorem::TheoremId>& id) {
  if (!id) return "J^2 = eps*I";
  switch (*id) {
    case theorem::TheoremId::T41: return "(J~)^2 = eps*I";
    case theorem::TheoremId::T42: return "(J^)^2 = eps*I";
    case theorem::TheoremId::T43: return "(J~*)^2 = eps*I";
    case theorem::TheoremId::T44: return "(J^*)^2 = eps*I";
  }
  return "J^2 = eps*I";
}

std::string model_label(const StructureBlock& b) {
  const auto& s = b.data;
  return "n=" + std::to_string(s.n) + " r=" + std::to_string(s.r) + " eps=" + sign_text(s.epsilon) + " " +
         structure::to_string(s.signature);
}

class Runner {
 public:
  Runner(const Definition& def, const RunOptions& options) : def_(def), options_(options) {
    if (def_.structure && options_.mode) block_mode_ = *options_.mode;
    else if (def_.structure) block_mode_ = def_.structure->mode;
  }

  ReportSection run(const Task& task) {
    ReportSection section;
    section.task = task.str();
    section.informational = task.kind == TaskKind::BuildJ || task.kind == TaskKind::Sweep;
    try {
      dispatch(task, section);
    } catch (const Error& e) {
      section.error = std::string(tanlift::to_string(e.code())) + ": " + e.what();
    }
    return section;
  }

 private:
  const StructureBlock& block() const {
    if (!def_.structure) throw Error(ErrorCode::InvalidArgument, "task needs a 'structure' section");
    return *def_.structure;
  }

  const structure::RContactStructure& data() const { return block().data; }

  // The definition's connection, or the flat one for horizontal work.
  const Connection& connection(ReportSection& section) {
    if (def_.connection) return *def_.connection;
    if (!flat_) flat_ = Connection::flat(def_.chart);
    section.notes.push_back("no connection given: flat connection used");
    return *flat_;
  }

  theorem::LiftedStructureSpec spec_for(const Task& task, ReportSection& section) {
    theorem::LiftedStructureSpec spec;
    spec.base = data();
    spec.kind = task.lift;
    spec.s = task.s;
    spec.t = task.t;
    if (task.lift == LiftKind::Horizontal) spec.conn = connection(section);
    return spec;
  }

  std::string spec_title(const Task& task) const {
    std::string out = std::string(lift::to_string(task.lift)) + " lift, s=" + sign_text(task.s) + ", t=" + sign_text(task.t);
    if (const auto id = theorem::theorem_of(task.lift, task.s, task.t)) {
      out += " (Theorem " + std::string(theorem::to_string(*id)) + " signs)";
    }
    return out + "; " + model_label(block());
  }

  void dispatch(const Task& task, ReportSection& section) {
    const TangentChart tc(def_.chart, def_.suffix);
    switch (task.kind) {
      case TaskKind::Check: {
        const auto& b = block();
        section.title = "axioms (" + std::string(structure::to_string(block_mode_)) + " " +
                        structure::to_string(b.system) + "); " + model_label(b);
        append_check(section, structure::check_axioms(b.data, block_mode_, b.system, options_.seed));
        if (b.data.metric) {
          append_check(section, structure::check_metric(b.data, options_.seed));
        } else {
          section.notes.push_back("no metric given: compatibility not checked");
        }
        return;
      }
      case TaskKind::Metric:
        section.title = "metric compatibility; " + model_label(block());
        append_check(section, structure::check_metric(data(), options_.seed));
        return;
      case TaskKind::Lift: {
        section.title = std::string(lift::to_string(task.lift)) + " lift interactions; " + model_label(block());
        const Connection* conn = task.lift == LiftKind::Horizontal ? &connection(section) : nullptr;
        append_check(section, lift::verify_lift_interactions(data(), tc, task.lift, conn, options_.seed));
        return;
      }
      case TaskKind::BuildJ: {
        section.title = "J for " + spec_title(task);
        const auto spec = spec_for(task, section);
        const TensorField j = theorem::build_lifted_J(spec, tc);
        ReportRow row;
        row.name = "J on " + tc.total().name() + " (nonzero components)";
        row.residual = nonzero_components(j);
        section.rows.push_back(std::move(row));
        const TensorField sq = tensor::endo_compose(j, j) - TensorField::identity(tc.total()).scaled(spec.base.epsilon);
        section.notes.push_back(std::string("J^2 - eps*I is ") + (sq.is_zero() ? "zero" : "nonzero"));
        return;
      }
      case TaskKind::Theorem: {
        section.title = spec_title(task);
        const auto spec = spec_for(task, section);
        const auto v = theorem::verify_theorem(spec, tc, options_.seed);
        ReportRow row;
        row.name = theorem_label(theorem::theorem_of(task.lift, task.s, task.t));
        row.tag = v.tag;
        row.verdict = v.pass ? Verdict::Pass : Verdict::Fail;
        row.residual = nonzero_components(v.residual);
        if (v.witness) row.witness = witness_info(v.residual, *v.witness);
        section.rows.push_back(std::move(row));
        section.ledger.push_back(LedgerRow{v.row.epsilon, structure::to_string(v.row.signature), v.row.s, v.row.t,
                                           std::nullopt, v.row.pass, std::nullopt});
        return;
      }
      case TaskKind::Verify: {
        section.title = "action formulas, " + spec_title(task);
        const auto spec = spec_for(task, section);
        std::vector<theorem::LabelledVector> xs;
        for (std::size_t i = 0; i < def_.chart.dim(); ++i) {
          xs.push_back({"d/d" + def_.chart.coord(i), TensorField::coordinate_vector(def_.chart, i)});
        }
        for (std::size_t a = 0; a < spec.base.xi.size(); ++a) {
          xs.push_back({"xi_" + std::to_string(a + 1), spec.base.xi[a]});
        }
        append_check(section, theorem::verify_action_formulas(spec, tc, xs, options_.seed));
        return;
      }
      case TaskKind::Sweep: {
        section.title = std::string(lift::to_string(task.lift)) + " sign sweep; " + model_label(block());
        const Connection* conn = task.lift == LiftKind::Horizontal ? &connection(section) : nullptr;
        const auto ledger = theorem::sign_sweep(data(), tc, task.lift, conn, options_.seed);
        for (const auto& c : ledger.cells) {
          std::optional<WitnessInfo> w;
          if (c.witness) {
            // Rebuild the failing residual to name the component.
            theorem::LiftedStructureSpec spec{data(), task.lift, std::nullopt, c.s, c.t};
            if (conn) spec.conn = *conn;
            const auto j = theorem::build_lifted_J(spec, tc);
            const auto residual = tensor::endo_compose(j, j) - TensorField::identity(tc.total()).scaled(data().epsilon);
            w = witness_info(residual, *c.witness);
          }
          section.ledger.push_back(LedgerRow{ledger.epsilon, structure::to_string(ledger.signature), c.s, c.t,
                                             c.predicted, c.pass, std::move(w)});
        }
        section.notes.push_back("kappa = " + (ledger.kappa ? std::to_string(*ledger.kappa) : std::string("undefined")) +
                                ", c = " + (ledger.c ? std::to_string(*ledger.c) : std::string("undefined")));
        section.notes.push_back(std::string("law (pass iff s*t*kappa = -c) ") +
                                (ledger.law_holds() ? "matches every cell" : "does not match every cell"));
        return;
      }
    }
  }

  const Definition& def_;
  const RunOptions& options_;
  AxiomMode block_mode_ = AxiomMode::PaperLiteral;
  std::optional<Connection> flat_;
};

ReportSection complex_section(int epsilon) {
  ReportSection section;
  section.task = "complex";
  section.title = "canonical eps-complex structure, n=1, eps=" + sign_text(epsilon);
  const auto rep = structure::canonical_complex(1, epsilon);
  auto add = [&](std::string name, std::string tag, const TensorField& residual) {
    ReportRow row;
    row.name = std::move(name);
    row.tag = std::move(tag);
    row.verdict = residual.is_zero() ? Verdict::Pass : Verdict::Fail;
    row.residual = nonzero_components(residual);
    section.rows.push_back(std::move(row));
  };
  add("J^2 - eps*I", "(1.1)", rep.square_residual);
  add("(J*)^2 - eps*I", "(1.5)", rep.dual_square_residual);
  for (const auto& e : rep.eigen) {
    ReportRow row;
    row.name = "J " + e.vector + " = (" + e.expected.str() + ") " + e.vector;
    row.tag = "(1.4)";
    row.verdict = e.holds ? Verdict::Pass : Verdict::Fail;
    section.rows.push_back(std::move(row));
    section.notes.push_back("(" + e.expected.str() + ")^2 = " + e.eigenvalue_square.str());
  }
  return section;
}

}  // namespace

Report run(const Definition& def, std::span<const Task> tasks, const RunOptions& options) {
  Report report;
  report.seed = options.seed;
  const AxiomMode mode = options.mode ? *options.mode
                                      : (def.structure ? def.structure->mode : AxiomMode::PaperLiteral);
  report.mode = structure::to_string(mode);
  Runner runner(def, options);
  for (const Task& t : tasks) report.sections.push_back(runner.run(t));
  return report;
}

Report run(const Definition& def, const RunOptions& options) { return run(def, def.tasks, options); }

Report run_demo(const RunOptions& options) {
  Report report;
  report.seed = options.seed;
  report.mode = structure::to_string(options.mode ? *options.mode : AxiomMode::PaperLiteral);
  report.sections.push_back(complex_section(-1));
  report.sections.push_back(complex_section(1));

  auto task = [](std::string_view text) { return parse_task(text); };
  const std::vector<Task> tasks{task("check"),       task("lift complete"), task("lift horizontal"),
                                task("theorem 4.1"), task("theorem 4.2"),   task("theorem 4.3"),
                                task("theorem 4.4"), task("verify 4.1"),    task("verify 4.2"),
                                task("verify 4.3"),  task("verify 4.4")};
  const std::pair<int, int> shapes[] = {{1, 1}, {1, 2}, {2, 1}};
  for (Signature sig : {Signature::Riemannian, Signature::Lorentzian}) {
    for (const auto& [n, r] : shapes) {
      Definition def = canonical_definition(n, r, -1, sig);
      const Report part = run(def, tasks, options);
      report.sections.insert(report.sections.end(), part.sections.begin(), part.sections.end());

      // Horizontal theorems again over a curved connection Gamma^c_{aa} = a.
      Connection conn(def.chart);
      const std::size_t last = def.chart.dim() - 1;
      conn.set(last, 0, 0, tensor::Poly::variable(def.chart.coords(), 0));
      def.connection = conn;
      const std::vector<Task> curved{task("lift horizontal"), task("theorem 4.3"), task("theorem 4.4")};
      const Report bent = run(def, curved, options);
      for (auto section : bent.sections) {
        section.title += "; Gamma^" + def.chart.coord(last) + "_{" + def.chart.coord(0) + def.chart.coord(0) +
                         "} = " + def.chart.coord(0);
        report.sections.push_back(std::move(section));
      }
    }
  }

  RunOptions consistent = options;
  consistent.mode = AxiomMode::Consistent;
  for (Signature sig : {Signature::Riemannian, Signature::Lorentzian}) {
    const Definition para = canonical_definition(1, 1, 1, sig, AxiomMode::Consistent);
    const std::vector<Task> sweep{task("check"), task("sweep complete"), task("sweep horizontal")};
    const Report part = run(para, sweep, consistent);
    report.sections.insert(report.sections.end(), part.sections.begin(), part.sections.end());
  }
  return report;
}

}  // namespace tanlift::io

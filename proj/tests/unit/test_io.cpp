#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "common/error.hpp"
#include "io/definition.hpp"
#include "io/expr.hpp"
#include "io/runner.hpp"

namespace tanlift {
namespace {

using algebra::make_rational;
using algebra::make_vars;
using algebra::Poly;
using io::parse_definition;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> shipped_defs() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(TANLIFT_DEFS_DIR)) {
    if (e.path().extension() == ".def") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Expr, Precedence) {
  const auto vars = make_vars({"x", "y"});
  const Poly x = Poly::variable(vars, "x");
  const Poly y = Poly::variable(vars, "y");
  EXPECT_EQ(io::parse_poly("-x^2 + 3/4*x*y - (x - y)*2", vars),
            -(x * x) + Poly(make_rational(3, 4), vars) * x * y - (x - y) * Poly(2, vars));
  EXPECT_EQ(io::parse_poly("x/2", vars), x.scaled(make_rational(1, 2)));
  EXPECT_EQ(io::parse_poly("(x+1)^3", vars), (x + Poly(1, vars)) * (x + Poly(1, vars)) * (x + Poly(1, vars)));
  EXPECT_EQ(io::parse_poly("2^0", vars), Poly(1, vars));
}

TEST(Expr, PrintedFormReparses) {
  const auto vars = make_vars({"x", "y", "z"});
  for (const char* text : {"3*x*y^2 - 1/2*z + 1", "-x", "0", "x^3*y - 7/3", "(x - y)^4 - z^2*x"}) {
    const Poly p = io::parse_poly(text, vars);
    EXPECT_EQ(io::parse_poly(p.str(), vars), p) << text;
  }
}

TEST(Expr, Errors) {
  const auto vars = make_vars({"x"});
  auto expect_error = [&](const char* text, std::size_t column, const std::string& fragment) {
    try {
      io::parse_poly(text, vars, 4, 10);
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 4u) << text;
      EXPECT_EQ(e.column(), column) << text;
      EXPECT_NE(e.message().find(fragment), std::string::npos) << e.message();
    }
  };
  expect_error("x + q", 14, "'q'");
  expect_error("x / x", 14, "constants");
  expect_error("x / 0", 14, "zero");
  expect_error("(x + 1", 16, "')'");
  expect_error("x ^ y", 14, "exponent");
  expect_error("", 10, "expected an expression");
  expect_error("x $", 12, "'$'");
}

TEST(Definition, ChartOnly) {
  const auto def = parse_definition("chart N\ncoords x y\n");
  EXPECT_EQ(def.chart.name(), "N");
  EXPECT_EQ(def.chart.dim(), 2u);
  EXPECT_TRUE(def.tasks.empty());
  EXPECT_FALSE(def.structure);
  EXPECT_FALSE(def.connection);
}

TEST(Definition, UndeclaredCoordinate) {
  const std::string text =
      "chart M\ncoords a b c\nstructure\nn 1\nr 1\n"
      "F[a] = 0, -1, 0\nF[b] = 1, 0, q\n";
  try {
    parse_definition(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 14u);
    EXPECT_NE(e.message().find("'q'"), std::string::npos);
  }
}

TEST(Definition, ShapeErrors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_definition(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  const std::string head = "chart M\ncoords a b c\nstructure\nn 1\nr 1\n";
  EXPECT_EQ(line_of(head + "F[a] = 0, 1\n"), 6u);
  EXPECT_EQ(line_of("chart M\ncoords a b c\nstructure\nn 2\nr 1\n"), 3u);
  EXPECT_EQ(line_of(head + "F[a] = 0,0,0\nF[b] = 0,0,0\nF[c] = 0,0,0\nxi[2] = 0,0,1\n"), 9u);
  EXPECT_EQ(line_of(head + "F[d] = 0,0,0\n"), 6u);
  EXPECT_EQ(line_of("chart M\ncoords a b\nconnection\nGamma[a,b] = 1\n"), 4u);
  EXPECT_EQ(line_of("chart M\ncoords a b\ntasks\ntheorem 5.1\n"), 4u);
  EXPECT_EQ(line_of("coords a b\n"), 1u);
  EXPECT_EQ(line_of("chart M\ncoords a a\n"), 2u);
}

TEST(Definition, RoundTripShippedFiles) {
  const auto files = shipped_defs();
  ASSERT_GE(files.size(), 5u);
  for (const auto& f : files) {
    const auto def = parse_definition(slurp(f));
    const std::string emitted = io::emit_definition(def);
    const auto again = parse_definition(emitted);
    EXPECT_TRUE(again == def) << f;
    EXPECT_EQ(io::emit_definition(again), emitted) << f;
  }
}

TEST(Definition, CanonicalContactFileIsTheCanonicalModel) {
  const auto def = parse_definition(slurp(std::filesystem::path(TANLIFT_DEFS_DIR) / "contact_n1_r1.def"));
  auto canonical = io::canonical_definition(1, 1, -1, structure::Signature::Riemannian);
  canonical.tasks = def.tasks;
  EXPECT_TRUE(def == canonical);
}

TEST(Definition, NumericIndicesMatchNames) {
  const auto a = parse_definition("chart M\ncoords a b\nconnection\nGamma[2,1,1] = a\n");
  const auto b = parse_definition("chart M\ncoords a b\nconnection\nGamma[b,a,a] = a\n");
  EXPECT_TRUE(a == b);
}

TEST(Definition, SymmetricConnectionSetsBothOrders) {
  const auto def = parse_definition("chart M\ncoords a b\nconnection\nGamma[a,a,b] = b\n");
  EXPECT_EQ((*def.connection)(0, 1, 0), (*def.connection)(0, 0, 1));
  const auto asym = parse_definition("chart M\ncoords a b\nconnection\nsymmetric no\nGamma[a,a,b] = b\n");
  EXPECT_TRUE((*asym.connection)(0, 1, 0).is_zero());
  EXPECT_TRUE(io::parse_definition(io::emit_definition(asym)) == asym);
}

TEST(Runner, CheckOnCanonicalContact) {
  const auto report = io::run(io::canonical_definition(1, 1, -1, structure::Signature::Riemannian));
  EXPECT_EQ(report.exit_status(), 0);
  for (const auto& row : report.sections.at(0).rows) {
    EXPECT_EQ(row.verdict, io::Verdict::Pass) << row.name;
  }
}

TEST(Runner, TheoremRowLabel) {
  const auto def = io::canonical_definition(1, 1, -1, structure::Signature::Riemannian);
  const io::Task t = io::parse_task("theorem 4.1");
  const auto report = io::run(def, std::span(&t, 1));
  const auto human = io::render_human(report);
  EXPECT_NE(human.find("(J~)^2 = eps*I : PASS  (2.8)"), std::string::npos) << human;
  EXPECT_EQ(report.exit_status(), 0);
}

TEST(Runner, SweepIsInformational) {
  const auto def = io::canonical_definition(1, 1, 1, structure::Signature::Riemannian, structure::AxiomMode::Consistent);
  const io::Task t = io::parse_task("sweep complete");
  const auto report = io::run(def, std::span(&t, 1));
  EXPECT_EQ(report.exit_status(), 0);
  const auto& ledger = report.sections.at(0).ledger;
  ASSERT_EQ(ledger.size(), 4u);
  for (const auto& cell : ledger) {
    EXPECT_EQ(cell.pass, cell.s == cell.t);
    EXPECT_EQ(cell.witness.has_value(), !cell.pass);
  }
}

TEST(Runner, FailingTheoremExitsNonzero) {
  const auto def = io::canonical_definition(1, 1, 1, structure::Signature::Riemannian, structure::AxiomMode::Consistent);
  const io::Task t = io::parse_task("theorem 4.1");
  const auto report = io::run(def, std::span(&t, 1));
  EXPECT_EQ(report.exit_status(), 1);
  ASSERT_TRUE(report.sections.at(0).rows.at(0).witness);
}

TEST(Runner, ModeOverride) {
  const auto def = io::canonical_definition(1, 1, 1, structure::Signature::Riemannian);
  EXPECT_EQ(io::run(def).exit_status(), 1);
  io::RunOptions opts;
  opts.mode = structure::AxiomMode::Consistent;
  EXPECT_EQ(io::run(def, opts).exit_status(), 0);
}

TEST(Runner, MissingPiecesAreReported) {
  const auto def = parse_definition("chart M\ncoords a b\ntasks\ncheck\n");
  const auto report = io::run(def);
  EXPECT_EQ(report.exit_status(), 1);
  ASSERT_TRUE(report.sections.at(0).error);
  auto no_metric = io::canonical_definition(1, 1, -1, structure::Signature::Riemannian);
  no_metric.structure->data.metric.reset();
  const io::Task t = io::parse_task("metric");
  const auto r2 = io::run(no_metric, std::span(&t, 1));
  EXPECT_EQ(r2.exit_status(), 1);
  EXPECT_NE(r2.sections.at(0).error->find("missing metric"), std::string::npos);
}

TEST(Runner, ShippedFilesPass) {
  for (const auto& f : shipped_defs()) {
    EXPECT_EQ(io::run(parse_definition(slurp(f))).exit_status(), 0) << f;
  }
}

TEST(Runner, DemoPasses) {
  const auto report = io::run_demo();
  EXPECT_EQ(report.exit_status(), 0);
  EXPECT_EQ(io::render_machine(report), io::render_machine(io::run_demo()));
}

}  // namespace
}  // namespace tanlift

#include <gtest/gtest.h>

#include "common/error.hpp"
#include "structure/kit.hpp"
#include "theorem/theorem.hpp"

namespace tanlift {
namespace {

using namespace theorem;
using structure::canonical_structure;
using tensor::Poly;
using tensor::TensorField;

TEST(BuildJ, CanonicalContactColumns) {
  const auto s = canonical_structure(1, 1, -1, Signature::Riemannian);
  const TangentChart tc(s.chart);
  const auto j = build_lifted_J(theorem_spec(TheoremId::T41, s), tc);
  const auto& T = tc.total();
  auto e = [&](std::size_t i) { return TensorField::coordinate_vector(T, i); };
  // columns a, b, c, adot, bdot, cdot
  EXPECT_EQ(tensor::endo_apply(j, e(2)), e(5));
  EXPECT_EQ(tensor::endo_apply(j, e(5)), -e(2));
  EXPECT_EQ(tensor::endo_apply(j, e(0)), e(1));
  EXPECT_EQ(tensor::endo_apply(j, e(1)), -e(0));
  EXPECT_EQ(tensor::endo_apply(j, e(3)), e(4));
  EXPECT_EQ(tensor::endo_apply(j, e(4)), -e(3));
}

TEST(BuildJ, LorentzianSignsCancel) {
  const auto r = canonical_structure(1, 1, -1, Signature::Riemannian);
  const auto l = canonical_structure(1, 1, -1, Signature::Lorentzian);
  const TangentChart tc(r.chart);
  EXPECT_EQ(build_lifted_J(theorem_spec(TheoremId::T41, r), tc), build_lifted_J(theorem_spec(TheoremId::T42, l), tc));
}

TEST(BuildJ, NoReebFieldsGivesCompleteLift) {
  auto s = canonical_structure(1, 0, -1, Signature::Riemannian);
  const TangentChart tc(s.chart);
  EXPECT_EQ(build_lifted_J(theorem_spec(TheoremId::T41, s), tc), lift::lift_endo(tc, s.F, LiftKind::Complete));
}

TEST(BuildJ, HorizontalNeedsConnection) {
  const auto s = canonical_structure(1, 1, -1, Signature::Riemannian);
  LiftedStructureSpec spec{s, LiftKind::Horizontal, std::nullopt, 1, -1};
  try {
    build_lifted_J(spec, TangentChart(s.chart));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingConnection);
  }
}

TEST(Verify, AllTheoremsOnCanonicalModels) {
  for (int n = 1; n <= 2; ++n) {
    for (int r = 1; r <= 2; ++r) {
      for (Signature sig : {Signature::Riemannian, Signature::Lorentzian}) {
        const auto s = canonical_structure(n, r, -1, sig);
        const TangentChart tc(s.chart);
        for (TheoremId id : {TheoremId::T41, TheoremId::T42, TheoremId::T43, TheoremId::T44}) {
          const auto v = verify_theorem(theorem_spec(id, s), tc);
          EXPECT_TRUE(v.pass) << to_string(id) << " n=" << n << " r=" << r;
          EXPECT_TRUE(v.residual.is_zero());
          EXPECT_FALSE(v.witness);
        }
      }
    }
  }
}

TEST(Verify, CurvedConnection) {
  const auto s = canonical_structure(1, 1, -1, Signature::Riemannian);
  Connection conn(s.chart);
  conn.set(2, 0, 0, Poly::variable(s.chart.coords(), "a"));
  const TangentChart tc(s.chart);
  EXPECT_TRUE(verify_theorem(theorem_spec(TheoremId::T43, s, conn), tc).pass);
  EXPECT_TRUE(verify_theorem(theorem_spec(TheoremId::T44, s, conn), tc).pass);
}

TEST(Verify, LedgerRowAndTag) {
  const auto s = canonical_structure(1, 1, -1, Signature::Riemannian);
  const auto v = verify_theorem(theorem_spec(TheoremId::T41, s), TangentChart(s.chart));
  EXPECT_EQ(v.tag, "(2.8)");
  EXPECT_EQ(v.row.s, 1);
  EXPECT_EQ(v.row.t, -1);
  EXPECT_TRUE(v.row.pass);
}

TEST(Verify, HorizontalMatchesCompleteWhenFlat) {
  const auto s = canonical_structure(2, 1, -1, Signature::Lorentzian);
  const TangentChart tc(s.chart);
  EXPECT_EQ(build_lifted_J(theorem_spec(TheoremId::T41, s), tc), build_lifted_J(theorem_spec(TheoremId::T43, s), tc));
}

std::vector<std::pair<int, int>> passing(const SweepLedger& l) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : l.cells) {
    if (c.pass) out.emplace_back(c.s, c.t);
  }
  return out;
}

TEST(Sweep, RiemannianContact) {
  const auto s = canonical_structure(1, 1, -1, Signature::Riemannian);
  const auto l = sign_sweep(s, TangentChart(s.chart), LiftKind::Complete);
  EXPECT_TRUE(l.law_holds());
  EXPECT_EQ(l.c, 1);
  EXPECT_EQ(l.kappa, 1);
  EXPECT_EQ(passing(l), (std::vector<std::pair<int, int>>{{1, -1}, {-1, 1}}));
}

TEST(Sweep, RiemannianParacontactConsistent) {
  const auto s = canonical_structure(1, 1, 1, Signature::Riemannian);
  const auto l = sign_sweep(s, TangentChart(s.chart), LiftKind::Complete);
  EXPECT_TRUE(l.law_holds());
  EXPECT_EQ(l.c, -1);
  EXPECT_EQ(passing(l), (std::vector<std::pair<int, int>>{{1, 1}, {-1, -1}}));
  for (const auto& c : l.cells) {
    if (c.s == 1 && c.t == -1) {
      ASSERT_FALSE(c.pass);
      ASSERT_TRUE(c.witness && c.witness->point);
      EXPECT_NE(c.witness->value, 0);
    }
  }
}

TEST(Sweep, LorentzianContact) {
  const auto s = canonical_structure(1, 1, -1, Signature::Lorentzian);
  const auto l = sign_sweep(s, TangentChart(s.chart), LiftKind::Complete);
  EXPECT_TRUE(l.law_holds());
  EXPECT_EQ(passing(l), (std::vector<std::pair<int, int>>{{1, -1}, {-1, 1}}));
}

TEST(Sweep, LawHoldsEverywhere) {
  for (Signature sig : {Signature::Riemannian, Signature::Lorentzian}) {
    for (int eps : {-1, 1}) {
      const auto s = canonical_structure(1, 2, eps, sig);
      const TangentChart tc(s.chart);
      EXPECT_TRUE(sign_sweep(s, tc, LiftKind::Complete).law_holds());
      EXPECT_TRUE(sign_sweep(s, tc, LiftKind::Horizontal).law_holds());
    }
  }
}

TEST(Sweep, ConjugatedModelsKeepTheLaw) {
  std::mt19937_64 rng(structure::kDefaultSeed);
  const auto s = canonical_structure(1, 1, 1, Signature::Lorentzian);
  const TangentChart tc(s.chart);
  for (int i = 0; i < 5; ++i) {
    const auto t = structure::conjugate_structure(s, structure::random_unimodular(s.chart, rng));
    const auto l = sign_sweep(t, tc, LiftKind::Complete);
    EXPECT_TRUE(l.law_holds());
    EXPECT_EQ(passing(l).size(), 2u);
  }
}

std::vector<LabelledVector> frame(const structure::RContactStructure& s) {
  return {{"d/da", TensorField::coordinate_vector(s.chart, 0)},
          {"d/db", TensorField::coordinate_vector(s.chart, 1)},
          {"xi_1", s.xi[0]}};
}

TEST(Actions, Theorem41) {
  const auto s = canonical_structure(1, 1, -1, Signature::Riemannian);
  const auto xs = frame(s);
  const auto report = verify_action_formulas(theorem_spec(TheoremId::T41, s), TangentChart(s.chart), xs);
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.errata.size(), 2u);
  EXPECT_NE(report.errata[0].printed.find("U_a^c"), std::string::npos);
  EXPECT_NE(report.errata[1].printed.find("internally inconsistent"), std::string::npos);
  EXPECT_EQ(report.errata[1].derived, "J xi_b^v = -xi_b^c");
}

TEST(Actions, AllPresetsPassOnBothSignatures) {
  for (Signature sig : {Signature::Riemannian, Signature::Lorentzian}) {
    const auto s = canonical_structure(2, 2, -1, sig);
    std::vector<LabelledVector> xs;
    for (std::size_t i = 0; i < s.chart.dim(); ++i) {
      xs.push_back({"d/d" + s.chart.coord(i), TensorField::coordinate_vector(s.chart, i)});
    }
    for (TheoremId id : {TheoremId::T41, TheoremId::T42, TheoremId::T43, TheoremId::T44}) {
      EXPECT_TRUE(verify_action_formulas(theorem_spec(id, s), TangentChart(s.chart), xs).passed());
    }
  }
}

}  // namespace
}  // namespace tanlift

#include <gtest/gtest.h>

#include "common/error.hpp"
#include "lift/interactions.hpp"
#include "lift/lift.hpp"
#include "structure/kit.hpp"
#include "test_support.hpp"

namespace tanlift {
namespace {

using namespace lift;
using tensor::endo_apply;
using tensor::endo_compose;
using tensor::oneform_apply;
using tensor::outer;

class LiftTest : public ::testing::Test {
 protected:
  Chart base{"M", {"a", "b", "c"}};
  TangentChart tc{base};
  Poly v(const char* n) { return Poly::variable(base.coords(), n); }
  Poly t(const char* n) { return Poly::variable(tc.total().coords(), n); }
  Poly k(long n) { return Poly(n, base.coords()); }
  Poly tk(long n) { return Poly(n, tc.total().coords()); }
  Connection curved() {
    Connection conn(base);
    conn.set(2, 0, 0, v("a"));
    return conn;
  }
  // A symmetric connection with random polynomial entries.
  Connection random_connection(std::mt19937_64& rng) {
    Connection conn(base);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = j; l < 3; ++l) conn.set(i, j, l, testing::random_poly(rng, base.coords(), 1, 2));
    return conn;
  }
};

TEST_F(LiftTest, TotalChartNames) {
  EXPECT_EQ(tc.total().name(), "TM");
  EXPECT_EQ(tc.total().coord(3), "adot");
  EXPECT_THROW(TangentChart(Chart("N", {"a", "adot"})), Error);
}

TEST_F(LiftTest, Functions) {
  const auto five = TensorField::scalar(base, k(5));
  EXPECT_EQ(lift_function(tc, five, LiftKind::Vertical).value(), tk(5));
  EXPECT_TRUE(lift_function(tc, five, LiftKind::Complete).is_zero());
  const auto a2 = TensorField::scalar(base, v("a") * v("a"));
  EXPECT_EQ(lift_function(tc, a2, LiftKind::Complete).value(), Poly(2, tc.total().coords()) * t("a") * t("adot"));
  try {
    lift_function(tc, five, LiftKind::Horizontal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unsupported);
  }
}

TEST_F(LiftTest, Vectors) {
  const auto da = TensorField::coordinate_vector(base, 0);
  EXPECT_EQ(lift_vector(tc, da, LiftKind::Complete), TensorField::coordinate_vector(tc.total(), 0));
  EXPECT_EQ(lift_vector(tc, TensorField::coordinate_vector(base, 2), LiftKind::Vertical),
            TensorField::coordinate_vector(tc.total(), 5));
  const auto x = da.scaled(v("a"));
  const auto expected = TensorField::coordinate_vector(tc.total(), 0).scaled(t("a")) +
                        TensorField::coordinate_vector(tc.total(), 3).scaled(t("adot"));
  EXPECT_EQ(lift_vector(tc, x, LiftKind::Complete), expected);
  EXPECT_THROW(lift_vector(tc, da, LiftKind::Horizontal), Error);
}

TEST_F(LiftTest, OneForms) {
  const auto dc = TensorField::coordinate_form(base, 2);
  EXPECT_EQ(lift_oneform(tc, dc, LiftKind::Vertical), TensorField::coordinate_form(tc.total(), 2));
  EXPECT_EQ(lift_oneform(tc, dc, LiftKind::Complete), TensorField::coordinate_form(tc.total(), 5));
  std::mt19937_64 rng(1);
  const auto w = TensorField::one_form(base, testing::random_polys(rng, base.coords(), 3));
  const auto flat = Connection::flat(base);
  const auto wh = lift_oneform(tc, w, LiftKind::Horizontal, &flat);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(wh[i].is_zero());
    EXPECT_EQ(wh[3 + i], tc.to_total(w[i]));
  }
}

TEST_F(LiftTest, Endomorphisms) {
  const auto id = TensorField::identity(base);
  EXPECT_EQ(lift_endo(tc, id, LiftKind::Complete), TensorField::identity(tc.total()));
  const auto s = structure::canonical_structure(1, 1, -1, structure::Signature::Riemannian);
  const auto fc = lift_endo(tc, s.F, LiftKind::Complete);
  const auto flat = Connection::flat(base);
  EXPECT_EQ(lift_endo(tc, s.F, LiftKind::Horizontal, &flat), fc);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(fc(i, j), tc.to_total(s.F(i, j)));
      EXPECT_EQ(fc(3 + i, 3 + j), tc.to_total(s.F(i, j)));
      EXPECT_TRUE(fc(3 + i, j).is_zero());
      EXPECT_TRUE(fc(i, 3 + j).is_zero());
    }
  }
}

// B^i_j = y^k (Gamma^s_{kj} F^i_s - Gamma^i_{ks} F^s_j), expanded by hand for
// Gamma^c_{aa} = a: only Gamma^c_{aa} is nonzero, so B^i_a picks up
// adot * a * F^i_c and B^c_j picks up -adot * a * F^a_j.
TEST_F(LiftTest, HorizontalBBlockByHand) {
  const auto s = structure::canonical_structure(1, 1, -1, structure::Signature::Riemannian);
  const auto conn = curved();
  const auto fh = lift_endo(tc, s.F, LiftKind::Horizontal, &conn);
  const Poly ya = t("adot") * t("a");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Poly expected(tc.total().coords());
      if (j == 0) expected += ya * tc.to_total(s.F(i, 2));
      if (i == 2) expected -= ya * tc.to_total(s.F(0, j));
      EXPECT_EQ(fh(3 + i, j), expected) << i << "," << j;
    }
  }
}

// Frame contract: F^h(H_j) = (F H)_j on horizontal frames H_j = X^h for
// X = d/dx^j, and F^h acts as F on d/dy^j.
TEST_F(LiftTest, HorizontalFrameContract) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto conn = trial == 0 ? curved() : random_connection(rng);
    const auto f = TensorField::endo(base, testing::random_polys(rng, base.coords(), 9));
    const auto fh = lift_endo(tc, f, LiftKind::Horizontal, &conn);
    for (std::size_t j = 0; j < 3; ++j) {
      const auto e = TensorField::coordinate_vector(base, j);
      const auto hj = lift_vector(tc, e, LiftKind::Horizontal, &conn);
      ASSERT_EQ(endo_apply(fh, hj), lift_vector(tc, endo_apply(f, e), LiftKind::Horizontal, &conn));
      const auto vj = lift_vector(tc, e, LiftKind::Vertical);
      ASSERT_EQ(endo_apply(fh, vj), lift_vector(tc, endo_apply(f, e), LiftKind::Vertical));
    }
  }
}

TEST_F(LiftTest, EvaluationContracts) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    const auto conn = random_connection(rng);
    const auto x = TensorField::vector(base, testing::random_polys(rng, base.coords(), 3));
    const auto w = TensorField::one_form(base, testing::random_polys(rng, base.coords(), 3));
    const auto f = TensorField::endo(base, testing::random_polys(rng, base.coords(), 9));
    const auto wx = oneform_apply(w, x);
    const auto V = LiftKind::Vertical, C = LiftKind::Complete, H = LiftKind::Horizontal;
    auto L = [&](const TensorField& t, LiftKind kk) { return lift::lift(tc, t, kk, &conn); };

    ASSERT_EQ(oneform_apply(L(w, V), L(x, C)), L(wx, V));
    ASSERT_TRUE(oneform_apply(L(w, V), L(x, V)).is_zero());
    ASSERT_EQ(oneform_apply(L(w, C), L(x, C)), L(wx, C));
    ASSERT_EQ(oneform_apply(L(w, C), L(x, V)), L(wx, V));
    ASSERT_TRUE(oneform_apply(L(w, H), L(x, H)).is_zero());
    ASSERT_EQ(oneform_apply(L(w, H), L(x, V)), L(wx, V));
    ASSERT_EQ(oneform_apply(L(w, V), L(x, H)), L(wx, V));

    const auto fx = endo_apply(f, x);
    ASSERT_EQ(endo_apply(L(f, C), L(x, C)), L(fx, C));
    ASSERT_EQ(endo_apply(L(f, C), L(x, V)), L(fx, V));
    ASSERT_EQ(endo_apply(L(f, V), L(x, C)), L(fx, V));
    ASSERT_EQ(endo_apply(L(f, H), L(x, H)), L(fx, H));
    ASSERT_EQ(endo_apply(L(f, H), L(x, V)), L(fx, V));
  }
}

TEST_F(LiftTest, MultiplicativityAndProductRules) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto conn = random_connection(rng);
    const auto f = TensorField::endo(base, testing::random_polys(rng, base.coords(), 9));
    const auto h = TensorField::endo(base, testing::random_polys(rng, base.coords(), 9));
    const auto x = TensorField::vector(base, testing::random_polys(rng, base.coords(), 3));
    const auto w = TensorField::one_form(base, testing::random_polys(rng, base.coords(), 3));
    auto L = [&](const TensorField& t, LiftKind kk) { return lift::lift(tc, t, kk, &conn); };
    const auto V = LiftKind::Vertical, C = LiftKind::Complete, H = LiftKind::Horizontal;

    ASSERT_EQ(L(endo_compose(f, h), C), endo_compose(L(f, C), L(h, C)));
    ASSERT_EQ(L(endo_compose(f, h), H), endo_compose(L(f, H), L(h, H)));
    ASSERT_EQ(L(outer(x, w), C), outer(L(x, V), L(w, C)) + outer(L(x, C), L(w, V)));
    ASSERT_EQ(L(outer(x, w), H), outer(L(x, H), L(w, V)) + outer(L(x, V), L(w, H)));
  }
}

TEST_F(LiftTest, LinearityAndFunctionScaling) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const auto conn = random_connection(rng);
    const auto x = TensorField::vector(base, testing::random_polys(rng, base.coords(), 3));
    const auto y = TensorField::vector(base, testing::random_polys(rng, base.coords(), 3));
    const auto f = testing::random_poly(rng, base.coords());
    for (LiftKind kk : {LiftKind::Vertical, LiftKind::Complete, LiftKind::Horizontal}) {
      ASSERT_EQ(lift::lift(tc, x + y.scaled(3), kk, &conn), lift::lift(tc, x, kk, &conn) + lift::lift(tc, y, kk, &conn).scaled(3));
    }
    ASSERT_EQ(lift_vector(tc, x.scaled(f), LiftKind::Horizontal, &conn),
              lift_vector(tc, x, LiftKind::Horizontal, &conn).scaled(tc.to_total(f)));
  }
}

TEST_F(LiftTest, BilinearIsUnsupported) {
  const auto g = TensorField::zero(base, Valence::Bilinear);
  EXPECT_THROW(lift::lift(tc, g, LiftKind::Complete), Error);
}

TEST_F(LiftTest, InteractionTables) {
  using structure::Signature;
  for (Signature sig : {Signature::Riemannian, Signature::Lorentzian}) {
    const auto s = structure::canonical_structure(1, 1, -1, sig);
    const TangentChart tcs(s.chart);
    const auto flat = Connection::flat(s.chart);
    const auto complete = verify_lift_interactions(s, tcs, LiftKind::Complete);
    EXPECT_TRUE(complete.passed());
    const auto horizontal = verify_lift_interactions(s, tcs, LiftKind::Horizontal, &flat);
    EXPECT_TRUE(horizontal.passed());
    const auto l = lift_structure(s, tcs, LiftKind::Complete);
    const int kappa = sig == Signature::Riemannian ? 1 : -1;
    EXPECT_EQ(oneform_apply(l.eta_vertical[0], l.xi_lift[0]).value(), Poly(kappa, tcs.total().coords()));
    EXPECT_EQ(oneform_apply(l.eta_lift[0], l.xi_vertical[0]).value(), Poly(kappa, tcs.total().coords()));
  }
}

TEST_F(LiftTest, SquareExpansionCoefficient) {
  using structure::Signature;
  const auto riem = structure::canonical_structure(1, 1, -1, Signature::Riemannian);
  const TangentChart tr(riem.chart);
  const auto er = square_expansion(riem, tr, lift_structure(riem, tr, LiftKind::Complete));
  EXPECT_EQ(er.coefficient, 1);
  const auto lor = structure::canonical_structure(1, 1, -1, Signature::Lorentzian);
  const auto el = square_expansion(lor, tr, lift_structure(lor, tr, LiftKind::Complete));
  EXPECT_EQ(el.coefficient, -1);
}

}  // namespace
}  // namespace tanlift

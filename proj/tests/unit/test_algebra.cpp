#include <gtest/gtest.h>

#include "algebra/eps_complex.hpp"
#include "algebra/poly.hpp"
#include "algebra/poly_matrix.hpp"
#include "common/error.hpp"
#include "test_support.hpp"

namespace tanlift {
namespace {

using algebra::EpsComplex;
using algebra::make_rational;
using algebra::make_vars;
using algebra::Poly;
using algebra::PolyMatrix;
using algebra::Rational;

class PolyTest : public ::testing::Test {
 protected:
  algebra::VarsPtr vars = make_vars({"x", "y", "z"});
  Poly x = Poly::variable(vars, "x");
  Poly y = Poly::variable(vars, "y");
  Poly z = Poly::variable(vars, "z");
  Poly c(long n, long d = 1) { return Poly(make_rational(n, d), vars); }
};

TEST_F(PolyTest, DifferenceOfSquares) {
  EXPECT_EQ((x + c(1)) * (x - c(1)), x * x - c(1));
  EXPECT_EQ(((x + c(1)) * (x - c(1))).str(), "x^2 - 1");
}

TEST_F(PolyTest, AdditiveIdentity) {
  const Poly p = x * y + c(3, 2) * z;
  EXPECT_EQ(p + Poly(vars), p);
  EXPECT_EQ(p + Poly(Rational(0)), p);
}

TEST_F(PolyTest, HandMultiplication) {
  const Poly p = c(2) * x * y;
  const Poly q = c(3, 2) * y;
  EXPECT_EQ(p * q, c(3) * x * y * y);
  EXPECT_EQ((p * q).str(), "3*x*y^2");
}

TEST_F(PolyTest, Derivatives) {
  EXPECT_EQ((x * x * y).diff("x"), c(2) * x * y);
  EXPECT_TRUE(c(7).diff("x").is_zero());
  EXPECT_EQ((x * x * x + x * z).diff("z"), x);
}

TEST_F(PolyTest, Evaluation) {
  std::map<std::string, Rational, std::less<>> at{{"x", 3}, {"y", 0}, {"z", 0}};
  EXPECT_EQ((x * x - c(1)).eval(at), Rational(8));
  EXPECT_EQ(Poly(vars).eval(at), Rational(0));
  std::map<std::string, Rational, std::less<>> at2{{"x", make_rational(1, 2)}, {"y", 4}, {"z", 0}};
  EXPECT_EQ((c(2) * x * y + c(1, 2)).eval(at2), make_rational(9, 2));
}

TEST_F(PolyTest, MissingAssignmentThrows) {
  std::map<std::string, Rational, std::less<>> at{{"x", 1}};
  try {
    (x * y).eval(at);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingAssignment);
  }
}

TEST_F(PolyTest, CanonicalPrinting) {
  EXPECT_EQ(Poly(vars).str(), "0");
  EXPECT_EQ((c(-1, 2) * z + c(3) * x * y * y + c(1)).str(), "3*x*y^2 - 1/2*z + 1");
  EXPECT_EQ((-x).str(), "-x");
}

TEST_F(PolyTest, ExactDivision) {
  const Poly a = x * x - y * y;
  EXPECT_EQ(a.divide_exact(x - y), x + y);
  try {
    a.divide_exact(x + z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InexactDivision);
  }
}

TEST_F(PolyTest, UnrelatedVariableSetsAreRejected) {
  const auto other = make_vars({"u", "v"});
  try {
    (void)(x + Poly::variable(other, "u"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VariableMismatch);
  }
}

TEST_F(PolyTest, EmbedIntoLargerChart) {
  const auto big = make_vars({"w", "x", "y", "z"});
  const Poly p = (x * y + c(2)).embed(big);
  EXPECT_EQ(p, Poly::variable(big, "x") * Poly::variable(big, "y") + Poly(2, big));
}

TEST_F(PolyTest, RingAxiomsOnRandomPolys) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poly a = testing::random_poly(rng, vars);
    const Poly b = testing::random_poly(rng, vars);
    const Poly d = testing::random_poly(rng, vars);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + d, a + (b + d));
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * c(1), a);
  }
}

TEST_F(PolyTest, LeibnizAndEvalHomomorphism) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Poly a = testing::random_poly(rng, vars);
    const Poly b = testing::random_poly(rng, vars);
    for (const char* v : {"x", "y", "z"}) {
      ASSERT_EQ((a * b).diff(v), a.diff(v) * b + a * b.diff(v));
    }
    const auto pt = testing::random_point(rng, 3);
    ASSERT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    ASSERT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
  }
}

TEST(EpsComplex, UnitSquares) {
  EXPECT_EQ(EpsComplex::unit(-1) * EpsComplex::unit(-1), EpsComplex(-1, 0, -1));
  EXPECT_EQ(EpsComplex::unit(1) * EpsComplex::unit(1), EpsComplex(1, 0, 1));
}

TEST(EpsComplex, ConjugateProduct) {
  EXPECT_EQ(EpsComplex(1, 1, -1) * EpsComplex(1, -1, -1), EpsComplex(2, 0, -1));
  // For eps = +1 the norm is re^2 - im^2.
  EXPECT_EQ(EpsComplex(1, 1, 1) * EpsComplex(1, -1, 1), EpsComplex(0, 0, 1));
  EXPECT_EQ(EpsComplex(3, 2, 1).norm(), Rational(5));
}

TEST(EpsComplex, MixedEpsilonThrows) {
  try {
    (void)(EpsComplex(1, 0, 1) * EpsComplex(1, 0, -1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EpsilonMismatch);
  }
  EXPECT_THROW(EpsComplex(1, 0, 2), Error);
}

TEST(EpsComplex, MultiplicativeNorm) {
  std::mt19937_64 rng(3);
  for (int eps : {-1, 1}) {
    for (int i = 0; i < 100; ++i) {
      const auto v = testing::random_point(rng, 4);
      const EpsComplex a(v[0], v[1], eps);
      const EpsComplex b(v[2], v[3], eps);
      ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
      ASSERT_EQ(a * b, b * a);
    }
  }
}

class MatrixTest : public ::testing::Test {
 protected:
  algebra::VarsPtr vars = make_vars({"x", "y"});
  Poly x = Poly::variable(vars, "x");
  Poly y = Poly::variable(vars, "y");
};

TEST_F(MatrixTest, IdentityInverse) {
  const auto id = PolyMatrix::identity(3, vars);
  EXPECT_EQ(algebra::unimodular_inverse(id), id);
}

TEST_F(MatrixTest, ShearInverse) {
  const auto s = algebra::shear(2, 0, 1, x, vars);
  EXPECT_EQ(algebra::unimodular_inverse(s), algebra::shear(2, 0, 1, -x, vars));
}

TEST_F(MatrixTest, ProductOfShears) {
  const auto a = algebra::shear(3, 0, 2, x * y, vars);
  const auto b = algebra::shear(3, 2, 1, x + Poly(1, vars), vars);
  const auto inv = algebra::unimodular_inverse(a * b);
  EXPECT_EQ(inv, algebra::unimodular_inverse(b) * algebra::unimodular_inverse(a));
  EXPECT_EQ(inv * (a * b), PolyMatrix::identity(3, vars));
}

TEST_F(MatrixTest, NonUnimodularRejected) {
  PolyMatrix m = PolyMatrix::identity(2, vars);
  m(0, 0) = x;
  try {
    algebra::unimodular_inverse(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
  }
  PolyMatrix two = PolyMatrix::identity(2, vars);
  two(1, 1) = Poly(2, vars);
  EXPECT_THROW(algebra::unimodular_inverse(two), Error);
  EXPECT_THROW(algebra::unimodular_inverse(PolyMatrix(2, 2, vars)), Error);
}

TEST_F(MatrixTest, RandomShearProductsInvert) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> idx(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    PolyMatrix u = PolyMatrix::identity(4, vars);
    for (int k = 0; k < 4; ++k) {
      std::size_t i = idx(rng), j = idx(rng);
      if (i == j) continue;
      u = u * algebra::shear(4, i, j, testing::random_poly(rng, vars, 2, 2), vars);
    }
    const auto inv = algebra::unimodular_inverse(u);
    ASSERT_EQ(u * inv, PolyMatrix::identity(4, vars));
    ASSERT_EQ(inv * u, PolyMatrix::identity(4, vars));
    ASSERT_TRUE(u.determinant() == Poly(1, vars));
  }
}

}  // namespace
}  // namespace tanlift

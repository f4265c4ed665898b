#include <gtest/gtest.h>

#include <random>

#include "rouche/expr.hpp"
#include "support.hpp"

using namespace rouche;
using testing_support::random_expr;

TEST(Expr, RandomTreesEncloseTheirExactValue) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 2000; ++i) {
    auto e = random_expr(rng, 5);
    for (Precision p : {24, 64, 257}) {
      Interval x = e.expr.enclose(p);
      ASSERT_TRUE(x.contains(e.exact)) << "case " << i << " precision " << p << ": " << x.to_string();
    }
  }
}

TEST(Expr, EnclosuresNarrowAsPrecisionGrows) {
  Expr e = Expr::sqrt(Expr::constant(2)) * Expr::modulus(ExactComplex(1, 1)) - Expr::constant(Rational(1, 3));
  double prev = 1;
  for (Precision p = 32; p <= 1024; p *= 2) {
    double w = e.enclose(p).width().to_double();
    EXPECT_LT(w, prev);
    prev = w;
  }
  // sqrt(2)·sqrt(2) − 1/3 = 5/3
  EXPECT_TRUE(e.enclose(512).contains(Rational(5, 3)));
}

TEST(Expr, SqrtOfNegativeConstantThrows) {
  EXPECT_THROW(Expr::sqrt(Expr::constant(-1)).enclose(64), std::domain_error);
}

TEST(CertifiedCompare, DecidesSeparatedValues) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    auto a = random_expr(rng, 4);
    auto b = random_expr(rng, 4);
    Decision d = certified_compare(a.expr, b.expr, {});
    if (a.exact < b.exact) {
      EXPECT_EQ(d, Decision::True);
    } else if (a.exact > b.exact) {
      EXPECT_EQ(d, Decision::False);
    } else {
      EXPECT_EQ(d, Decision::Undecided);
    }
  }
}

TEST(CertifiedCompare, RaisesPrecisionForNearTies) {
  // sqrt(2) against the upper end of its 320-bit enclosure
  Rational above = sqrt_of(2, 320).hi().to_rational();
  Expr root = Expr::sqrt(Expr::constant(2));
  EXPECT_EQ(certified_compare(root, Expr::constant(above), {}), Decision::True);
  EXPECT_EQ(certified_compare(root, Expr::constant(above), {64, 128}), Decision::Undecided);
  EXPECT_EQ(certified_compare(Expr::constant(above), root, {}), Decision::False);
}

TEST(CertifiedCompare, ExactTieIsUndecided) {
  Expr a = Expr::modulus(ExactComplex(3, 4));
  Expr b = Expr::constant(5);
  EXPECT_EQ(certified_compare(a, b, {}), Decision::Undecided);
  EXPECT_THROW(certified_compare(a, b, {128, 64}), std::invalid_argument);
}

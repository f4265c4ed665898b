#include <gtest/gtest.h>

#include <random>

#include "rouche/polynomial.hpp"
#include "support.hpp"

using namespace rouche;
using testing_support::random_rational;

namespace {

Polynomial example1() {
  return Polynomial::from_descending({100000, 305000, 410100, 310205, 105105});
}

ApproxZeroSet zeros_of(std::initializer_list<const char*> text) {
  ApproxZeroSet s;
  for (const char* t : text) s.zeros.push_back(parse_complex(t));
  return s;
}

}  // namespace

TEST(Polynomial, ConstructionAndAccess) {
  Polynomial p = example1();
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.leading(), ExactComplex(100000));
  EXPECT_EQ(p[0], ExactComplex(105105));
  EXPECT_THROW(Polynomial({1, 0}), std::invalid_argument);
  EXPECT_THROW(Polynomial(std::vector<ExactComplex>{}), std::invalid_argument);
}

TEST(Polynomial, ExactEvaluationAtKnownRoots) {
  // 100000 z^4 + ... = (z + 1.05)(z + 1)(100000 z^2 + 100000 z + 100100)
  Polynomial p = example1();
  EXPECT_TRUE(p.evaluate(parse_complex("-1.05")).is_zero());
  EXPECT_TRUE(p.evaluate(-1).is_zero());
  EXPECT_EQ(p.evaluate(0), ExactComplex(105105));
  EXPECT_EQ(p.derivative().evaluate(0), ExactComplex(310205));
}

TEST(Polynomial, ExpandFromZerosVanishesAtEveryZero) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    ApproxZeroSet s;
    int n = 1 + static_cast<int>(rng() % 7);
    for (int k = 0; k < n; ++k) s.zeros.emplace_back(random_rational(rng, 3), random_rational(rng, 3));
    ExactComplex lead(random_rational(rng, 2) + 3, 0);
    Polynomial f = expand_from_zeros(s, lead);
    ASSERT_EQ(f.degree(), n);
    EXPECT_EQ(f.leading(), lead);
    for (const auto& z : s.zeros) EXPECT_TRUE(f.evaluate(z).is_zero());
  }
}

// Reference coefficients computed with Python fractions.
TEST(ErrorPolynomial, Example1SevenDigitZeros) {
  ApproxZeroSet s = zeros_of({"-1.05", "-1.000000", "-0.5+0.8666026i", "-0.5-0.8666026i"});
  ErrorPolynomial h = error_polynomial(example1(), s);
  ASSERT_EQ(h.size(), 4u);
  EXPECT_EQ(h.coefficients()[0], ExactComplex(Rational("34821549/5000000000")));
  EXPECT_EQ(h.coefficients()[1], ExactComplex(Rational("67984929/5000000000")));
  EXPECT_EQ(h.coefficients()[2], ExactComplex(Rational(1658169, 250000000)));
  EXPECT_EQ(h.coefficients()[3], ExactComplex(0));
  EXPECT_FALSE(h.is_zero());
}

TEST(ErrorPolynomial, SquareRootOfTwo) {
  Polynomial g = Polynomial::from_descending({1, 0, -2});
  ErrorPolynomial h = error_polynomial(g, zeros_of({"1.414214", "-1.414214"}));
  EXPECT_EQ(h.coefficients()[0], ExactComplex(Rational("-309449/250000000000")));
  EXPECT_EQ(h.coefficients()[1], ExactComplex(0));
}

TEST(ErrorPolynomial, ExactZerosGiveZeroPolynomial) {
  Polynomial g = Polynomial::from_descending({2, -6, 4});
  EXPECT_TRUE(error_polynomial(g, zeros_of({"1", "2"})).is_zero());
  EXPECT_THROW(error_polynomial(g, zeros_of({"1"})), std::invalid_argument);
  EXPECT_THROW(error_polynomial(g, Polynomial::from_descending({1, -3, 2})), std::invalid_argument);
}

TEST(HornerEval, EnclosesExactValue) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ExactComplex> c;
    int n = 1 + static_cast<int>(rng() % 10);
    for (int k = 0; k <= n; ++k) c.emplace_back(random_rational(rng), random_rational(rng));
    if (c.back().is_zero()) c.back() = ExactComplex(1);
    Polynomial p(c);
    ExactComplex z(random_rational(rng, 3), random_rational(rng, 3));
    ComplexInterval v = horner_eval(p, enclose(z, 80));
    EXPECT_TRUE(contains(v, p.evaluate(z)));
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "rouche/oracles.hpp"
#include "support.hpp"

using namespace rouche;
using testing_support::load_fixture;

namespace {

// floor(sqrt(x) * 10^60) / 10^60, within 1e-60 of sqrt(x)
Rational sqrt_60(const Rational& x) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 60);
  mpz_class n = x.get_num() * scale * scale / x.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return Rational(root, scale);
}

std::vector<BoundResult> run(const testing_support::Fixture& fx) {
  BoundOptions opt;
  opt.nr_starts = fx.spec.input.nr_starts;
  return bound_all_zeros(fx.spec.input.poly, fx.spec.input.zeros, fx.spec.config, fx.spec.algorithm, opt);
}

std::vector<double> residuals(const Polynomial& g, const ApproxZeroSet& zs) {
  std::vector<double> out;
  for (const auto& z : zs.zeros) out.push_back(std::sqrt(g.evaluate(z).norm().get_d()));
  return out;
}

}  // namespace

TEST(Winding, ElementaryCounts) {
  Polynomial z = Polynomial::from_descending({1, 0});
  WindingCount w = count_zeros_in_disk(z, ExactComplex(0), 1);
  EXPECT_EQ(w.count, 1);
  EXPECT_TRUE(w.trustworthy);

  Polynomial z2 = Polynomial::from_descending({1, 0, 1});
  EXPECT_EQ(count_zeros_in_disk(z2, ExactComplex(0), Rational(1, 2)).count, 0);
  EXPECT_EQ(count_zeros_in_disk(z2, ExactComplex(0), 2).count, 2);
  EXPECT_EQ(count_zeros_in_disk(z2, ExactComplex(0, 1), Rational(1, 2)).count, 1);
  EXPECT_THROW(count_zeros_in_disk(z2, ExactComplex(0), 0), std::invalid_argument);
  EXPECT_THROW(count_zeros_in_disk(z2, ExactComplex(0), 1, 10), std::invalid_argument);
}

TEST(Winding, ZeroOnTheCircleIsNotTrusted) {
  Polynomial z2 = Polynomial::from_descending({1, 0, 1});
  WindingCount w = count_zeros_in_disk(z2, ExactComplex(0), 1, 64, 1 << 10);
  EXPECT_FALSE(w.trustworthy);
}

TEST(Winding, Example1CertifiedDisk) {
  auto fx = load_fixture("example1_p16");
  auto results = run(fx);
  ASSERT_EQ(fx.spec.input.zeros.zeros[0].re, Rational(-1.05));
  for (std::size_t j = 0; j < results.size(); ++j) {
    WindingCount w = count_zeros_in_disk(fx.spec.input.poly, fx.spec.input.zeros.zeros[j], results[j].radius);
    EXPECT_EQ(w.count, 1) << "zero " << j;
    EXPECT_TRUE(w.trustworthy) << "zero " << j;
  }
}

TEST(Winding, Example4ClosePairDiskHoldsBothZeros) {
  auto fx = load_fixture("example4_p7");
  auto results = run(fx);
  for (std::size_t j : {0u, 1u}) {
    ASSERT_EQ(results[j].status, Status::CertifiedNotIsolated);
    WindingCount w = count_zeros_in_disk(fx.spec.input.poly, fx.spec.input.zeros.zeros[j], results[j].radius);
    EXPECT_EQ(w.count, 2) << "zero " << j;
    EXPECT_TRUE(w.trustworthy);
  }
}

TEST(KnownZeros, Example1ClosedForm) {
  Rational im = sqrt_60(Rational(751, 1000));
  std::vector<ExactComplex> truth{Rational(-105, 100), Rational(-1), {Rational(-1, 2), im}, {Rational(-1, 2), -im}};
  for (const char* name : {"example1_p7", "example1_p16", "example1_p16_nr"}) {
    auto fx = load_fixture(name);
    auto results = run(fx);
    KnownZeroReport report = known_zero_check(truth, fx.spec.input.zeros, results);
    EXPECT_TRUE(report.ok());
    for (const auto& row : report.rows) {
      EXPECT_TRUE(row.checked) << name;
      EXPECT_LE(row.slack, 1.0) << name;
    }
  }
}

TEST(KnownZeros, Example2ClosedForm) {
  Rational s = sqrt_60(Rational(12, 10));
  std::vector<ExactComplex> truth{30, {-10, 10}, {-10, -10}, -5, {1, 1}, {1, -1}, {-1, s}, {-1, -s}, Rational(-3, 2), -1};
  for (const char* name : {"example2_p7", "example2_p16"}) {
    auto fx = load_fixture(name);
    KnownZeroReport report = known_zero_check(truth, fx.spec.input.zeros, run(fx));
    EXPECT_TRUE(report.ok()) << name;
  }
}

TEST(KnownZeros, ViolationIsAHardFailure) {
  auto fx = load_fixture("example1_p16");
  auto results = run(fx);
  std::vector<ExactComplex> wrong{Rational(-1), Rational(-1), {Rational(-1, 2), 1}, {Rational(-1, 2), -1}};
  EXPECT_THROW(known_zero_check(wrong, fx.spec.input.zeros, results), SoundnessError);
  EXPECT_THROW(known_zero_check({}, fx.spec.input.zeros, results), std::invalid_argument);
}

TEST(KnownZeros, ExactZerosHaveZeroDistance) {
  Polynomial g = Polynomial::from_descending({1, -3, 2});
  ApproxZeroSet s{{1, 2}, {}};
  auto results = bound_all_zeros(g, s, BoundConfig{}, Algorithm::One);
  KnownZeroReport report = known_zero_check({1, 2}, s, results, 0);
  for (const auto& row : report.rows) EXPECT_EQ(row.distance, 0);
}

TEST(ReferenceZeros, AgreeWithOracleFile) {
  auto fx = load_fixture("example1_p16");
  auto oracle = testing_support::load_oracle_roots(1);
  auto roots = reference_zeros(fx.spec.input.poly);
  ASSERT_EQ(roots.size(), oracle.size());
  for (const auto& z : roots) {
    double best = 1;
    for (const auto& o : oracle) best = std::min(best, std::sqrt((z - o).norm().get_d()));
    EXPECT_LT(best, 1e-55);
  }
}

TEST(Generator, SquareRootOfTwo) {
  ApproxZeroSet s = generate_test_zeros(Polynomial::from_descending({1, 0, -2}), 7);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.declared_digits, 7);
  std::vector<Rational> re{s.zeros[0].re, s.zeros[1].re};
  std::sort(re.begin(), re.end());
  EXPECT_EQ(re[0], parse_rational("-1.414214"));
  EXPECT_EQ(re[1], parse_rational("1.414214"));
  EXPECT_EQ(s.zeros[0].im, 0);
}

TEST(Generator, LinearPolynomial) {
  for (int digits : {1, 7, 16, 30}) {
    ApproxZeroSet s = generate_test_zeros(Polynomial::from_descending({3, -15}), digits);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.zeros[0], ExactComplex(5));
  }
}

TEST(Generator, Example3SixteenDigitsMatchesReferenceColumn) {
  auto fx = load_fixture("example3_p16");
  const std::vector<std::string> printed{"4.99371584412958", "4.00806551632572", "2.99772080758747",
                                         "1.0",              "0.00942268285074248", "0.00707514910648869"};
  ApproxZeroSet s = generate_test_zeros(fx.spec.input.poly, 16);
  for (const auto& text : printed) {
    Rational value = parse_rational(text);
    // one unit in the last listed digit
    std::size_t decimals = text.size() - text.find('.') - 1;
    Rational unit(1, mpz_class("1" + std::string(decimals, '0')));
    bool found = false;
    for (const auto& z : s.zeros)
      if (abs(z.re - value) <= unit && sgn(z.im) == 0) found = true;
    EXPECT_TRUE(found) << text;
  }
}

// Rounding luck moves single zeros by up to a decade, so the median zero
// carries the 10^8 threshold and every zero must still improve.
TEST(Generator, ResidualShrinksWithDigits) {
  for (int ex = 1; ex <= 6; ++ex) {
    auto fx = load_fixture("example" + std::to_string(ex) + "_p7");
    const Polynomial& g = fx.spec.input.poly;
    ApproxZeroSet z7 = generate_test_zeros(g, 7);
    ApproxZeroSet z16 = generate_test_zeros(g, 16);
    std::vector<double> r7 = residuals(g, z7), r16 = residuals(g, z16);
    std::vector<double> ratios;
    for (std::size_t k = 0; k < z7.size(); ++k) {
      // generated sets come out in the same order
      double scale = 1 + std::sqrt(z16.zeros[k].norm().get_d());
      ASSERT_LT(std::sqrt((z7.zeros[k] - z16.zeros[k]).norm().get_d()), 1e-5 * scale);
      // a rational root is hit exactly at both digit counts
      if (r7[k] == 0) continue;
      EXPECT_GT(r7[k], r16[k]) << "example " << ex << " zero " << k;
      ratios.push_back(r16[k] > 0 ? r7[k] / r16[k] : 1e300);
    }
    ASSERT_FALSE(ratios.empty());
    std::sort(ratios.begin(), ratios.end());
    double median = ratios.size() % 2 ? ratios[ratios.size() / 2]
                                      : std::sqrt(ratios[ratios.size() / 2 - 1] * ratios[ratios.size() / 2]);
    EXPECT_GE(median, 1e8) << "example " << ex;
  }
}

TEST(Generator, RoundSignificant) {
  EXPECT_EQ(round_significant(parse_rational("1.23456789"), 3), parse_rational("1.23"));
  EXPECT_EQ(round_significant(parse_rational("-0.0012345"), 4), parse_rational("-0.001235"));
  EXPECT_EQ(round_significant(parse_rational("999.96"), 4), Rational(1000));
  EXPECT_EQ(round_significant(Rational(1, 3), 2), parse_rational("0.33"));
  EXPECT_EQ(round_significant(Rational(0), 5), Rational(0));
  EXPECT_EQ(round_significant(parse_rational("2.5"), 1), Rational(3));
  EXPECT_EQ(round_significant(parse_rational("-2.5"), 1), Rational(-3));
}

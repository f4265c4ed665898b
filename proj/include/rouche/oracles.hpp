#pragma once

#include <stdexcept>
#include <vector>

#include "rouche/bounds.hpp"

namespace rouche {

struct WindingCount {
  int count = 0;
  long samples_used = 0;
  bool trustworthy = false;
};

// Winding number of g(z) around the circle |z − center| = radius by phase
// tracking. Samples double until every phase step is below π/2. A sample
// whose enclosure of g is not far from 0 relative to its own rounding error
// marks the result untrustworthy.
WindingCount count_zeros_in_disk(const Polynomial& g, const ExactComplex& center, const Rational& radius,
                                 long samples = 64, long sample_budget = 1L << 16);

struct KnownZeroRow {
  std::size_t zero_index = 0;
  std::size_t matched = 0;
  double distance = 0;
  // distance / radius; infinite for a zero radius.
  double slack = 0;
  bool checked = false;
};

struct KnownZeroReport {
  std::vector<KnownZeroRow> rows;
  std::vector<std::size_t> violations;
  bool ok() const { return violations.empty(); }
};

class SoundnessError : public std::runtime_error {
 public:
  SoundnessError(const std::string& what, KnownZeroReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const KnownZeroReport& report() const { return report_; }

 private:
  KnownZeroReport report_;
};

// Matches each approximate zero to its nearest reference zero and checks
// |α_j − z_j| ≤ radius + oracle_error for every isolated certified result.
// Throws SoundnessError on any violation.
KnownZeroReport known_zero_check(const std::vector<ExactComplex>& true_zeros, const ApproxZeroSet& alphas,
                                 const std::vector<BoundResult>& results,
                                 const Rational& oracle_error = Rational(1, mpz_class("1" + std::string(50, '0'))));

// Simultaneous Aberth iteration at high precision, each component then rounded
// to `decimal_digits` significant digits. Throws std::runtime_error when the
// iteration does not converge or two roots are indistinguishable.
ApproxZeroSet generate_test_zeros(const Polynomial& g, int decimal_digits);

// Zeros of g at `bits` of binary precision, unrounded (oracle roots for tests).
std::vector<ExactComplex> reference_zeros(const Polynomial& g, Precision bits = 256);

// Round x to `digits` significant decimal digits.
Rational round_significant(const Rational& x, int digits);

}  // namespace rouche

#pragma once

#include <mpfr.h>

#include <string>

#include "rouche/rational.hpp"

namespace rouche {

using Precision = mpfr_prec_t;

// Owning handle for an mpfr_t. Copies keep the source precision.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const Rational& x, Precision prec, mpfr_rnd_t rnd);
  static BigFloat from_double(double x, Precision prec);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Precision precision() const { return mpfr_get_prec(value_); }

  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  // Exact value; the number must be finite.
  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits, e.g. "4.64160099338234e-15".
  std::string to_string(int digits = 15, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

bool operator<(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);
bool operator>=(const BigFloat& a, const BigFloat& b);
bool operator==(const BigFloat& a, const BigFloat& b);

}  // namespace rouche

#pragma once

#include <string>

#include "rouche/big_float.hpp"

namespace rouche {

// Closed interval [lo, hi] with endpoints rounded outward at a fixed working
// precision. Binary operations run at the larger precision of the operands.
class Interval {
 public:
  Interval(BigFloat lo, BigFloat hi);
  static Interval point(const BigFloat& x);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  Precision precision() const;

  bool contains(const Rational& x) const;
  bool contains_zero() const;
  bool strictly_positive() const { return lo_.sign() > 0; }
  bool strictly_negative() const { return hi_.sign() < 0; }
  // Upper bound on hi - lo.
  BigFloat width() const;
  BigFloat midpoint() const;
  std::string to_string(int digits = 17) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

void require_precision(Precision prec);

Interval enclose(const Rational& x, Precision prec);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Throws std::domain_error when b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval abs(const Interval& a);
Interval square(const Interval& a);
Interval pow(const Interval& a, unsigned k);
// Square root of the non-negative part; throws std::domain_error if a < 0.
Interval sqrt(const Interval& a);
Interval hull(const Interval& a, const Interval& b);

struct ComplexInterval {
  Interval re;
  Interval im;
};

ComplexInterval enclose(const ExactComplex& z, Precision prec);
ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
bool contains(const ComplexInterval& z, const ExactComplex& x);

// Enclosure of |z| as sqrt(re^2 + im^2) bounded outward at each step.
Interval modulus(const ComplexInterval& z);
// |z| for an exact z: the squared modulus is formed exactly and only the
// square root is rounded, so the enclosure is as tight as the precision allows.
Interval modulus(const ExactComplex& z, Precision prec);
Interval sqrt_of(const Rational& x, Precision prec);

}  // namespace rouche

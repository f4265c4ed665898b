#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rouche {

using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Accepts an optional sign, digits with an optional point, and an optional
// exponent ("1.5E-3", "-.25", "7") as well as an explicit fraction "p/q". The
// result is the exact value of the text.
Rational parse_rational(std::string_view text);

// Exact decimal expansion when the reduced denominator is 2^a 5^b, otherwise
// "p/q". parse_rational(to_exact_string(x)) == x for every x.
std::string to_exact_string(const Rational& x);

// Number of significant decimal digits written in a decimal literal
// ("0.02959805" -> 7, "1.0" -> 2, "30" -> 2). Fractions count as 0.
int significant_digits(std::string_view text);

struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(long r, long i = 0) : re(r), im(i) {}

  Rational norm() const { return re * re + im * im; }
  ExactComplex conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

ExactComplex operator+(const ExactComplex& a, const ExactComplex& b);
ExactComplex operator-(const ExactComplex& a, const ExactComplex& b);
ExactComplex operator-(const ExactComplex& a);
ExactComplex operator*(const ExactComplex& a, const ExactComplex& b);
bool operator==(const ExactComplex& a, const ExactComplex& b);

// Complex literals: "a", "bi", "a+bi", "a-bi", "a+ib", "i", "-i". Both parts
// are parsed with parse_rational.
ExactComplex parse_complex(std::string_view text);
std::string to_exact_string(const ExactComplex& z);

}  // namespace rouche

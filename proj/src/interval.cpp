#include "rouche/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace rouche {

namespace {

Precision common(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

BigFloat apply(BinaryOp op, const BigFloat& x, const BigFloat& y, Precision prec, mpfr_rnd_t rnd) {
  BigFloat out(prec);
  op(out.get(), x.get(), y.get(), rnd);
  return out;
}

}  // namespace

void require_precision(Precision prec) {
  if (prec < 24) throw std::invalid_argument("working precision must be at least 24 bits");
}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ <= hi_)) throw std::invalid_argument("interval endpoints out of order");
}

Interval Interval::point(const BigFloat& x) { return Interval(x, x); }

Precision Interval::precision() const { return std::max(lo_.precision(), hi_.precision()); }

bool Interval::contains(const Rational& x) const {
  return mpfr_cmp_q(lo_.get(), x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), x.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

BigFloat Interval::width() const { return apply(mpfr_sub, hi_, lo_, precision(), MPFR_RNDU); }

BigFloat Interval::midpoint() const {
  BigFloat out = apply(mpfr_add, lo_, hi_, precision(), MPFR_RNDN);
  mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
  return out;
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
}

Interval enclose(const Rational& x, Precision prec) {
  require_precision(prec);
  return Interval(BigFloat::from_rational(x, prec, MPFR_RNDD), BigFloat::from_rational(x, prec, MPFR_RNDU));
}

Interval operator+(const Interval& a, const Interval& b) {
  Precision p = common(a, b);
  return Interval(apply(mpfr_add, a.lo(), b.lo(), p, MPFR_RNDD), apply(mpfr_add, a.hi(), b.hi(), p, MPFR_RNDU));
}

Interval operator-(const Interval& a, const Interval& b) {
  Precision p = common(a, b);
  return Interval(apply(mpfr_sub, a.lo(), b.hi(), p, MPFR_RNDD), apply(mpfr_sub, a.hi(), b.lo(), p, MPFR_RNDU));
}

Interval operator-(const Interval& a) {
  BigFloat lo(a.precision()), hi(a.precision());
  mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  Precision p = common(a, b);
  const BigFloat* xs[2] = {&a.lo(), &a.hi()};
  const BigFloat* ys[2] = {&b.lo(), &b.hi()};
  BigFloat lo(p), hi(p);
  bool first = true;
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      BigFloat down = apply(mpfr_mul, *x, *y, p, MPFR_RNDD);
      BigFloat up = apply(mpfr_mul, *x, *y, p, MPFR_RNDU);
      if (first || down < lo) lo = down;
      if (first || up > hi) hi = up;
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  Precision p = common(a, b);
  BigFloat inv_lo(p), inv_hi(p);
  mpfr_ui_div(inv_lo.get(), 1, b.hi().get(), MPFR_RNDD);
  mpfr_ui_div(inv_hi.get(), 1, b.lo().get(), MPFR_RNDU);
  return a * Interval(std::move(inv_lo), std::move(inv_hi));
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  BigFloat hi(a.precision());
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  if (hi < a.hi()) hi = a.hi();
  return Interval(BigFloat(a.precision()), std::move(hi));
}

Interval square(const Interval& a) {
  Interval m = abs(a);
  Precision p = a.precision();
  return Interval(apply(mpfr_mul, m.lo(), m.lo(), p, MPFR_RNDD), apply(mpfr_mul, m.hi(), m.hi(), p, MPFR_RNDU));
}

Interval pow(const Interval& a, unsigned k) {
  Precision p = a.precision();
  Interval result = Interval::point(BigFloat::from_double(1, p));
  Interval base = a;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = square(base);
  }
  return result;
}

Interval sqrt(const Interval& a) {
  if (a.hi().sign() < 0) throw std::domain_error("square root of a negative interval");
  Precision p = a.precision();
  BigFloat lo(p), hi(p);
  if (a.lo().sign() > 0) mpfr_sqrt(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi());
}

ComplexInterval enclose(const ExactComplex& z, Precision prec) { return {enclose(z.re, prec), enclose(z.im, prec)}; }

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) { return {a.re + b.re, a.im + b.im}; }
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) { return {a.re - b.re, a.im - b.im}; }
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool contains(const ComplexInterval& z, const ExactComplex& x) { return z.re.contains(x.re) && z.im.contains(x.im); }

Interval modulus(const ComplexInterval& z) { return sqrt(square(z.re) + square(z.im)); }

Interval sqrt_of(const Rational& x, Precision prec) {
  if (sgn(x) < 0) throw std::domain_error("square root of a negative rational");
  return sqrt(enclose(x, prec));
}

Interval modulus(const ExactComplex& z, Precision prec) { return sqrt_of(z.norm(), prec); }

}  // namespace rouche

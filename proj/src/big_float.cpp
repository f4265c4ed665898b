#include "rouche/big_float.hpp"

#include <stdexcept>

namespace rouche {

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_rational(const Rational& x, Precision prec, mpfr_rnd_t rnd) {
  BigFloat out(prec);
  mpfr_set_q(out.value_, x.get_mpq_t(), rnd);
  return out;
}

BigFloat BigFloat::from_double(double x, Precision prec) {
  BigFloat out(prec);
  mpfr_set_d(out.value_, x, MPFR_RNDN);
  return out;
}

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw std::domain_error("non-finite big float has no rational value");
  if (is_zero()) return 0;
  mpz_class mantissa;
  mpfr_exp_t exp = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  Rational q(mantissa);
  if (exp >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
  return q;
}

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), value_, rnd);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string out;
  if (s.front() == '-') {
    out = "-";
    s.erase(0, 1);
  }
  out += s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  long e = static_cast<long>(exp) - 1;
  out += (e < 0 ? "e-" : "e+");
  std::string e_digits = std::to_string(e < 0 ? -e : e);
  if (e_digits.size() < 2) e_digits.insert(0, "0");
  return out + e_digits;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

}  // namespace rouche

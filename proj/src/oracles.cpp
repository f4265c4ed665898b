#include "rouche/oracles.hpp"

#include <cmath>
#include <limits>

namespace rouche {

namespace {

constexpr double kPi = 3.14159265358979323846;

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(1, p) : Rational(p);
}

double log2_of(const Rational& x) {
  BigFloat f = BigFloat::from_rational(x, 64, MPFR_RNDN);
  mpfr_log2(f.get(), f.get(), MPFR_RNDN);
  return f.to_double();
}

// Plain round-to-nearest complex big float, used only by the root finder.
struct CF {
  BigFloat re, im;
  explicit CF(Precision p) : re(p), im(p) {}
};

Precision prec_of(const CF& a) { return a.re.precision(); }

CF add(const CF& a, const CF& b) {
  CF out(prec_of(a));
  mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return out;
}

CF sub(const CF& a, const CF& b) {
  CF out(prec_of(a));
  mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return out;
}

CF mul(const CF& a, const CF& b) {
  Precision p = prec_of(a);
  CF out(p);
  BigFloat t(p);
  mpfr_mul(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(out.re.get(), out.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), out.im.get(), t.get(), MPFR_RNDN);
  return out;
}

BigFloat abs2(const CF& a) {
  BigFloat out(prec_of(a)), t(prec_of(a));
  mpfr_sqr(out.get(), a.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), a.im.get(), MPFR_RNDN);
  mpfr_add(out.get(), out.get(), t.get(), MPFR_RNDN);
  return out;
}

BigFloat absval(const CF& a) {
  BigFloat out = abs2(a);
  mpfr_sqrt(out.get(), out.get(), MPFR_RNDN);
  return out;
}

CF div(const CF& a, const CF& b) {
  Precision p = prec_of(a);
  BigFloat d = abs2(b);
  CF conj_b(p);
  conj_b.re = b.re;
  mpfr_neg(conj_b.im.get(), b.im.get(), MPFR_RNDN);
  CF out = mul(a, conj_b);
  mpfr_div(out.re.get(), out.re.get(), d.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), out.im.get(), d.get(), MPFR_RNDN);
  return out;
}

CF to_cf(const ExactComplex& z, Precision p) {
  CF out(p);
  out.re = BigFloat::from_rational(z.re, p, MPFR_RNDN);
  out.im = BigFloat::from_rational(z.im, p, MPFR_RNDN);
  return out;
}

CF one(Precision p) {
  CF out(p);
  mpfr_set_ui(out.re.get(), 1, MPFR_RNDN);
  return out;
}

std::vector<CF> aberth(const Polynomial& g, Precision p) {
  const int n = g.degree();
  if (n < 1) throw std::invalid_argument("root finding needs degree >= 1");
  std::vector<CF> a;
  for (const auto& c : g.coefficients()) a.push_back(to_cf(c, p));

  // Fujiwara-style radius for the initial circle
  double lead = std::sqrt(g.leading().norm().get_d());
  double radius = 0;
  for (int k = 1; k <= n; ++k) {
    double c = std::sqrt(g[n - k].norm().get_d()) / lead;
    if (c > 0) radius = std::max(radius, std::pow(c, 1.0 / k));
  }
  radius = radius > 0 ? 2 * radius : 1;

  std::vector<CF> z;
  for (int k = 0; k < n; ++k) {
    double theta = 2 * kPi * k / n + 0.7;
    CF w(p);
    w.re = BigFloat::from_double(radius * std::cos(theta), p);
    w.im = BigFloat::from_double(radius * std::sin(theta), p);
    z.push_back(w);
  }

  auto eval = [&](const CF& x, CF& value, CF& deriv) {
    value = a.back();
    deriv = CF(p);
    for (int k = n - 1; k >= 0; --k) {
      deriv = add(mul(deriv, x), value);
      value = add(mul(value, x), a[static_cast<std::size_t>(k)]);
    }
  };

  BigFloat threshold(p);
  CF value(p), deriv(p);
  for (int iter = 0; iter < 2000; ++iter) {
    bool converged = true;
    for (int k = 0; k < n; ++k) {
      eval(z[k], value, deriv);
      if (value.re.is_zero() && value.im.is_zero()) continue;
      if (deriv.re.is_zero() && deriv.im.is_zero()) {
        mpfr_nextabove(z[k].re.get());
        converged = false;
        continue;
      }
      CF w = div(value, deriv);
      CF s(p);
      for (int i = 0; i < n; ++i)
        if (i != k) s = add(s, div(one(p), sub(z[k], z[i])));
      CF corr = div(w, sub(one(p), mul(w, s)));
      z[k] = sub(z[k], corr);

      BigFloat scale = absval(z[k]);
      mpfr_mul_2si(scale.get(), scale.get(), -(p - 24), MPFR_RNDN);
      BigFloat floor(p);
      mpfr_set_ui_2exp(floor.get(), 1, -(p + p / 2), MPFR_RNDN);
      if (scale < floor) scale = floor;
      if (absval(corr) > scale) converged = false;
    }
    if (converged) {
      // minimum separation guard
      BigFloat biggest(p);
      for (const auto& x : z)
        if (absval(x) > biggest) biggest = absval(x);
      if (biggest < BigFloat::from_double(1, p)) biggest = BigFloat::from_double(1, p);
      mpfr_mul_2si(biggest.get(), biggest.get(), -(p / 4), MPFR_RNDN);
      for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
          if (absval(sub(z[i], z[k])) < biggest)
            throw std::runtime_error("root finder: roots are not separated (repeated root?)");
      return z;
    }
  }
  throw std::runtime_error("root finder did not converge");
}

Rational clean_component(const BigFloat& x, const BigFloat& modulus, Precision p) {
  BigFloat limit = modulus;
  mpfr_mul_2si(limit.get(), limit.get(), -(p - 40), MPFR_RNDN);
  BigFloat ax = x;
  mpfr_abs(ax.get(), ax.get(), MPFR_RNDN);
  if (ax < limit) return 0;
  return x.to_rational();
}

}  // namespace

Rational round_significant(const Rational& x, int digits) {
  if (digits < 1) throw std::invalid_argument("need at least one significant digit");
  if (sgn(x) == 0) return 0;
  Rational ax = abs(x);
  BigFloat f = BigFloat::from_rational(ax, 64, MPFR_RNDN);
  mpfr_log10(f.get(), f.get(), MPFR_RNDN);
  long e = static_cast<long>(std::floor(f.to_double()));
  while (ax < pow10(e)) --e;
  while (ax >= pow10(e + 1)) ++e;
  Rational scale = pow10(digits - 1 - e);
  Rational scaled = ax * scale;
  // round half away from zero
  mpz_class q = scaled.get_num() / scaled.get_den();
  Rational frac = scaled - Rational(q);
  if (frac >= Rational(1, 2)) q += 1;
  Rational out = Rational(q) / scale;
  out.canonicalize();
  return sgn(x) < 0 ? Rational(-out) : out;
}

std::vector<ExactComplex> reference_zeros(const Polynomial& g, Precision bits) {
  std::vector<ExactComplex> out;
  for (const auto& z : aberth(g, bits)) {
    BigFloat m = absval(z);
    out.push_back({clean_component(z.re, m, bits), clean_component(z.im, m, bits)});
  }
  return out;
}

ApproxZeroSet generate_test_zeros(const Polynomial& g, int decimal_digits) {
  if (decimal_digits < 1) throw std::invalid_argument("need at least one significant digit");
  Precision p = std::max<Precision>(256, static_cast<Precision>(8 * decimal_digits + 128));
  ApproxZeroSet out;
  out.declared_digits = decimal_digits;
  for (const auto& z : reference_zeros(g, p))
    out.zeros.push_back({round_significant(z.re, decimal_digits), round_significant(z.im, decimal_digits)});
  return out;
}

WindingCount count_zeros_in_disk(const Polynomial& g, const ExactComplex& center, const Rational& radius,
                                 long samples, long sample_budget) {
  if (samples < 64) throw std::invalid_argument("winding count needs at least 64 samples");
  if (sgn(radius) <= 0) throw std::invalid_argument("winding count needs a positive radius");

  double scale_bits = log2_of(std::max(Rational(1), Rational(std::sqrt(center.norm().get_d()) + 1))) - log2_of(radius);
  Precision base = 64 + static_cast<Precision>(std::max(0.0, std::ceil(scale_bits))) + 16;
  const Precision cap = 4096;

  WindingCount result;
  for (long n = samples;; n *= 2) {
    std::vector<double> phase(static_cast<std::size_t>(n));
    bool trusted = true;
    for (long k = 0; k < n; ++k) {
      for (Precision p = base;; p = std::min(2 * p, cap)) {
        BigFloat theta(p), c(p), s(p);
        mpfr_const_pi(theta.get(), MPFR_RNDN);
        mpfr_mul_si(theta.get(), theta.get(), 2 * k, MPFR_RNDN);
        mpfr_div_si(theta.get(), theta.get(), n, MPFR_RNDN);
        mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
        BigFloat r = BigFloat::from_rational(radius, p, MPFR_RNDN);
        BigFloat zr = BigFloat::from_rational(center.re, p, MPFR_RNDN);
        BigFloat zi = BigFloat::from_rational(center.im, p, MPFR_RNDN);
        mpfr_fma(zr.get(), r.get(), c.get(), zr.get(), MPFR_RNDN);
        mpfr_fma(zi.get(), r.get(), s.get(), zi.get(), MPFR_RNDN);
        ComplexInterval w = horner_eval(g, ComplexInterval{Interval::point(zr), Interval::point(zi)});

        // the value must sit well clear of its own rounding error
        bool clear = false;
        if (!w.re.contains_zero() || !w.im.contains_zero()) {
          BigFloat err(p), mag(p);
          mpfr_add(err.get(), w.re.width().get(), w.im.width().get(), MPFR_RNDU);
          mpfr_mul_2si(err.get(), err.get(), 8, MPFR_RNDU);
          Interval m = modulus(w);
          clear = m.lo() > err;
        }
        if (clear || p >= cap) {
          if (!clear) trusted = false;
          BigFloat angle(53);
          BigFloat wr = w.re.midpoint(), wi = w.im.midpoint();
          mpfr_atan2(angle.get(), wi.get(), wr.get(), MPFR_RNDN);
          phase[static_cast<std::size_t>(k)] = angle.to_double();
          break;
        }
      }
    }

    double total = 0;
    bool fine = true;
    for (long k = 0; k < n; ++k) {
      double d = phase[static_cast<std::size_t>((k + 1) % n)] - phase[static_cast<std::size_t>(k)];
      while (d > kPi) d -= 2 * kPi;
      while (d <= -kPi) d += 2 * kPi;
      if (std::fabs(d) >= kPi / 2) fine = false;
      total += d;
    }
    result.count = static_cast<int>(std::lround(total / (2 * kPi)));
    result.samples_used = n;
    if (fine) {
      result.trustworthy = trusted;
      return result;
    }
    if (2 * n > sample_budget) {
      result.trustworthy = false;
      return result;
    }
  }
}

KnownZeroReport known_zero_check(const std::vector<ExactComplex>& true_zeros, const ApproxZeroSet& alphas,
                                 const std::vector<BoundResult>& results, const Rational& oracle_error) {
  if (true_zeros.empty()) throw std::invalid_argument("no reference zeros supplied");
  KnownZeroReport report;
  for (const auto& res : results) {
    const ExactComplex& alpha = alphas.zeros.at(res.zero_index);
    std::size_t best = 0;
    Rational best_d2 = (true_zeros[0] - alpha).norm();
    for (std::size_t i = 1; i < true_zeros.size(); ++i) {
      Rational d2 = (true_zeros[i] - alpha).norm();
      if (d2 < best_d2) {
        best_d2 = d2;
        best = i;
      }
    }
    KnownZeroRow row;
    row.zero_index = res.zero_index;
    row.matched = best;
    row.distance = std::sqrt(best_d2.get_d());
    row.slack = sgn(res.radius) > 0 ? row.distance / res.radius.get_d() : std::numeric_limits<double>::infinity();
    row.checked = res.isolated && (res.status == Status::Certified || res.status == Status::ExactMatch);
    if (row.checked) {
      Rational limit = res.radius + oracle_error;
      if (best_d2 > limit * limit) report.violations.push_back(res.zero_index);
    }
    report.rows.push_back(row);
  }
  if (!report.ok())
    throw SoundnessError("approximate zero " + std::to_string(report.violations.front()) +
                             " lies farther from its true zero than its certified radius",
                         report);
  return report;
}

}  // namespace rouche

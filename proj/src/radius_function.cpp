#include "rouche/bounds.hpp"

#include <algorithm>

namespace rouche {

void BoundConfig::validate() const {
  if (sgn(epsilon) <= 0) throw std::invalid_argument("epsilon must be positive");
  if (sgn(nr_tolerance) <= 0) throw std::invalid_argument("Newton tolerance must be positive");
  if (nr_start && sgn(*nr_start) <= 0) throw std::invalid_argument("Newton start must be positive");
  if (nr_max_iterations < 1) throw std::invalid_argument("Newton iteration limit must be at least 1");
  require_precision(start_precision);
  if (precision_cap < start_precision) throw std::invalid_argument("precision cap below start precision");
}

RadiusFunction::RadiusFunction(const ErrorPolynomial& h, const ApproxZeroSet& alphas, const ExactComplex& leading,
                               std::size_t j)
    : j_(j) {
  const std::size_t n = alphas.size();
  if (n == 0) throw std::invalid_argument("empty zero set");
  if (h.size() != n) throw std::invalid_argument("error polynomial size does not match the zero set");
  if (j >= n) throw std::out_of_range("zero index out of range");
  if (leading.is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");

  center_ = alphas.zeros[j];
  for (const auto& b : h.coefficients()) coeff_norms_.push_back(b.norm());
  numerator_zero_ = h.is_zero();
  center_norm_ = center_.norm();
  lead_norm_ = leading.norm();
  for (std::size_t i = 0; i < n; ++i) {
    if (i == j) continue;
    others_.push_back(i);
    dist_squares_.push_back((alphas.zeros[i] - center_).norm());
  }
}

bool RadiusFunction::has_duplicate() const {
  return std::any_of(dist_squares_.begin(), dist_squares_.end(), [](const Rational& d) { return sgn(d) == 0; });
}

Interval RadiusFunction::numerator(const Interval& r) const {
  Precision p = r.precision();
  Interval t = r + sqrt_of(center_norm_, p);
  Interval acc = sqrt_of(coeff_norms_.back(), p);
  for (std::size_t k = coeff_norms_.size() - 1; k-- > 0;) acc = acc * t + sqrt_of(coeff_norms_[k], p);
  return acc;
}

Interval RadiusFunction::numerator_derivative(const Interval& r) const {
  Precision p = r.precision();
  const std::size_t n = coeff_norms_.size();
  if (n < 2) return enclose(Rational(0), p);
  Interval t = r + sqrt_of(center_norm_, p);
  auto term = [&](std::size_t k) { return enclose(Rational(static_cast<long>(k)), p) * sqrt_of(coeff_norms_[k], p); };
  Interval acc = term(n - 1);
  for (std::size_t k = n - 1; k-- > 1;) acc = acc * t + term(k);
  return acc;
}

Interval RadiusFunction::denominator(const Interval& r) const {
  Precision p = r.precision();
  Interval acc = sqrt_of(lead_norm_, p);
  for (std::size_t k = 0; k < dist_squares_.size(); ++k) acc = acc * abs(r - distance(k, p));
  return acc;
}

RadiusFunction build_radius_function(const Polynomial& g, const ApproxZeroSet& alphas, std::size_t j) {
  return RadiusFunction(error_polynomial(g, alphas), alphas, g.leading(), j);
}

Interval q_at_zero(const RadiusFunction& Q, Precision prec) {
  require_precision(prec);
  if (Q.has_duplicate())
    throw DuplicateZeroError("approximate zero " + std::to_string(Q.zero_index()) + " coincides with another zero");
  return q_value(Q, enclose(Rational(0), prec));
}

Interval q_value(const RadiusFunction& Q, const Interval& r) {
  Interval m = Q.denominator(r);
  if (m.contains_zero()) throw SingularityError("m(r) is not bounded away from zero");
  return Q.numerator(r) / m;
}

Interval q_derivative(const RadiusFunction& Q, const BigFloat& r, Precision prec) {
  require_precision(prec);
  if (r.sign() < 0) throw std::invalid_argument("q'(r) needs r >= 0");
  Interval R = enclose(r.to_rational(), prec);
  Interval zero = enclose(Rational(0), prec);
  if (Q.numerator_vanishes()) return zero;

  // q' = (l' − l Σ 1/(r − d_i)) / m, since d|r − d|/dr / |r − d| = 1/(r − d).
  Interval log_sum = zero;
  for (std::size_t k = 0; k < Q.distance_squares().size(); ++k) {
    Interval diff = R - Q.distance(k, prec);
    if (diff.contains_zero()) throw SingularityError("r coincides with a distance d_i");
    log_sum = log_sum + enclose(Rational(1), prec) / diff;
  }
  Interval m = Q.denominator(R);
  if (m.contains_zero()) throw SingularityError("m(r) is not bounded away from zero");
  return (Q.numerator_derivative(R) - Q.numerator(R) * log_sum) / m;
}

Interval fixpoint_estimate(const RadiusFunction& Q, Precision prec) {
  Interval q0 = q_at_zero(Q, prec);
  Interval qd = q_derivative(Q, BigFloat(prec), prec);
  return q0 / (enclose(Rational(1), prec) - qd);
}

Decision rouche_predicate(const RadiusFunction& Q, const Enclosure& r, const BoundConfig& cfg) {
  auto lhs = [&](Precision p) { return Q.numerator(r(p)); };
  auto rhs = [&](Precision p) {
    Interval R = r(p);
    return R * Q.denominator(R);
  };
  return certified_compare(lhs, rhs, cfg.schedule());
}

Decision rouche_predicate(const RadiusFunction& Q, const Rational& r, const BoundConfig& cfg) {
  if (sgn(r) <= 0) throw std::invalid_argument("predicate radius must be positive");
  return rouche_predicate(Q, [&](Precision p) { return enclose(r, p); }, cfg);
}

bool check_isolation(const RadiusFunction& Q, const Rational& r, const BoundConfig& cfg) {
  for (std::size_t k = 0; k < Q.distance_squares().size(); ++k) {
    Decision d = certified_compare([&](Precision p) { return enclose(r, p); },
                                   [&](Precision p) { return Q.distance(k, p); }, cfg.schedule());
    if (d != Decision::True) return false;
  }
  return true;
}

}  // namespace rouche

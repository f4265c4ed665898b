#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rouche/expr.hpp"
#include "rouche/polynomial.hpp"

namespace rouche {

class DuplicateZeroError : public std::runtime_error {
 public:
  explicit DuplicateZeroError(const std::string& what) : std::runtime_error(what) {}
};

class SingularityError : public std::domain_error {
 public:
  explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

struct BoundConfig {
  Rational epsilon{1, 10000};
  std::optional<Rational> nr_start;
  Rational nr_tolerance{1, mpz_class("1000000000000000000000000000000")};
  int nr_max_iterations = 64;
  Precision start_precision = 64;
  Precision precision_cap = 4096;
  long max_geometric_iterations = 1000000;

  PrecisionSchedule schedule() const { return {start_precision, precision_cap}; }
  void validate() const;
};

// l(r) = Σ |b_k| (r + |α_j|)^k and m(r) = |a_n| Π_{i≠j} |r − d_i| for one zero α_j.
// Only squared magnitudes are stored; every modulus is enclosed on demand.
class RadiusFunction {
 public:
  RadiusFunction(const ErrorPolynomial& h, const ApproxZeroSet& alphas, const ExactComplex& leading, std::size_t j);

  std::size_t zero_index() const { return j_; }
  std::size_t degree() const { return coeff_norms_.size(); }
  const ExactComplex& center() const { return center_; }
  bool numerator_vanishes() const { return numerator_zero_; }
  bool has_duplicate() const;

  const std::vector<Rational>& coefficient_norms() const { return coeff_norms_; }
  const Rational& center_norm() const { return center_norm_; }
  const Rational& leading_norm() const { return lead_norm_; }
  // d_i^2 for i ≠ j, increasing i.
  const std::vector<Rational>& distance_squares() const { return dist_squares_; }
  const std::vector<std::size_t>& other_indices() const { return others_; }

  // Enclosures at the precision of r.
  Interval numerator(const Interval& r) const;
  Interval numerator_derivative(const Interval& r) const;
  Interval denominator(const Interval& r) const;
  Interval distance(std::size_t k, Precision prec) const { return sqrt_of(dist_squares_[k], prec); }

 private:
  std::size_t j_;
  ExactComplex center_;
  bool numerator_zero_;
  std::vector<Rational> coeff_norms_;
  Rational center_norm_;
  Rational lead_norm_;
  std::vector<Rational> dist_squares_;
  std::vector<std::size_t> others_;
};

RadiusFunction build_radius_function(const Polynomial& g, const ApproxZeroSet& alphas, std::size_t j);

// Throws DuplicateZeroError when some d_i = 0.
Interval q_at_zero(const RadiusFunction& Q, Precision prec);
// q(r) at the precision of r; throws SingularityError when m(r) cannot be bounded away from 0.
Interval q_value(const RadiusFunction& Q, const Interval& r);
Interval q_derivative(const RadiusFunction& Q, const BigFloat& r, Precision prec);
// q(0) / (1 − q'(0)), the first-order estimate of the fixpoint ρ = q(ρ).
Interval fixpoint_estimate(const RadiusFunction& Q, Precision prec);

// Decides r·m(r) > l(r).
Decision rouche_predicate(const RadiusFunction& Q, const Rational& r, const BoundConfig& cfg);
Decision rouche_predicate(const RadiusFunction& Q, const Enclosure& r, const BoundConfig& cfg);
bool check_isolation(const RadiusFunction& Q, const Rational& r, const BoundConfig& cfg);

enum class Status { Certified, CertifiedNotIsolated, ExactMatch, FailedPrecisionCap, Failed };
enum class Algorithm { One, Two };

const char* to_string(Status s);
const char* to_string(Algorithm a);

struct BoundResult {
  std::size_t zero_index = 0;
  Status status = Status::Failed;
  Rational radius;
  // First radius tested by the geometric search.
  Rational start;
  std::optional<Interval> q0;
  long geometric_iterations = 0;
  int nr_iterations = 0;
  bool isolated = false;
  std::string diagnostic;

  bool certified() const {
    return status == Status::Certified || status == Status::CertifiedNotIsolated || status == Status::ExactMatch;
  }
};

BoundResult algorithm_one(const RadiusFunction& Q, const BoundConfig& cfg, std::optional<Rational> start = {});
BoundResult algorithm_two(const RadiusFunction& Q, const BoundConfig& cfg);

struct BoundOptions {
  unsigned threads = 1;
  // Overrides cfg.nr_start for individual zeros (Algorithm II).
  std::vector<std::optional<Rational>> nr_starts;
};

std::vector<BoundResult> bound_all_zeros(const Polynomial& g, const ApproxZeroSet& alphas, const BoundConfig& cfg,
                                         Algorithm algorithm, const BoundOptions& options = {});

}  // namespace rouche

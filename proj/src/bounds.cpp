#include "rouche/bounds.hpp"

#include <atomic>
#include <thread>

namespace rouche {

const char* to_string(Status s) {
  switch (s) {
    case Status::Certified: return "CERTIFIED";
    case Status::CertifiedNotIsolated: return "CERTIFIED_NOT_ISOLATED";
    case Status::ExactMatch: return "EXACT_MATCH";
    case Status::FailedPrecisionCap: return "FAILED_PRECISION_CAP";
    case Status::Failed: return "FAILED";
  }
  return "FAILED";
}

const char* to_string(Algorithm a) { return a == Algorithm::One ? "one" : "two"; }

namespace {

Rational rational_pow(const Rational& x, unsigned long k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

BoundResult failed(std::size_t j, Status status, std::string why) {
  BoundResult r;
  r.zero_index = j;
  r.status = status;
  r.diagnostic = std::move(why);
  return r;
}

void finish(const RadiusFunction& Q, const BoundConfig& cfg, BoundResult& res) {
  res.isolated = check_isolation(Q, res.radius, cfg);
  if (Q.numerator_vanishes())
    res.status = Status::ExactMatch;
  else
    res.status = res.isolated ? Status::Certified : Status::CertifiedNotIsolated;
}

BoundResult exact_match(const RadiusFunction& Q, const BoundConfig& cfg, Interval q0) {
  BoundResult res;
  res.zero_index = Q.zero_index();
  res.q0 = std::move(q0);
  res.radius = 0;
  res.start = 0;
  res.isolated = true;
  for (std::size_t k = 0; k < Q.distance_squares().size(); ++k)
    if (sgn(Q.distance_squares()[k]) == 0) res.isolated = false;
  res.status = Status::ExactMatch;
  res.diagnostic = "supplied zeros are exact roots";
  (void)cfg;
  return res;
}

}  // namespace

BoundResult algorithm_one(const RadiusFunction& Q, const BoundConfig& cfg, std::optional<Rational> start) {
  cfg.validate();
  const std::size_t j = Q.zero_index();
  if (Q.has_duplicate())
    return failed(j, Status::Failed, "duplicate approximate zero; clustered zeros need a multiplicity-aware bound");

  Interval q0 = q_at_zero(Q, cfg.start_precision);
  if (Q.numerator_vanishes() && !start) return exact_match(Q, cfg, q0);

  Rational r0 = start ? *start : q0.hi().to_rational();
  if (sgn(r0) <= 0) throw std::invalid_argument("Algorithm I start must be positive");

  const Rational growth = 1 + cfg.epsilon;
  BoundResult res;
  res.zero_index = j;
  res.q0 = q0;
  res.start = r0;
  for (long k = 0; k <= cfg.max_geometric_iterations; ++k) {
    auto r_k = [&](Precision p) {
      return enclose(r0, p) * pow(enclose(growth, p), static_cast<unsigned>(k));
    };
    Decision d = rouche_predicate(Q, r_k, cfg);
    if (d == Decision::Undecided) {
      res.status = Status::FailedPrecisionCap;
      res.radius = r0 * rational_pow(growth, static_cast<unsigned long>(k));
      res.geometric_iterations = k;
      res.diagnostic = "predicate undecided at " + std::to_string(cfg.precision_cap) + " bits";
      return res;
    }
    if (d == Decision::True) {
      res.radius = r0 * rational_pow(growth, static_cast<unsigned long>(k));
      res.geometric_iterations = k;
      finish(Q, cfg, res);
      return res;
    }
  }
  res.status = Status::Failed;
  res.geometric_iterations = cfg.max_geometric_iterations;
  res.diagnostic = "geometric search exceeded " + std::to_string(cfg.max_geometric_iterations) + " steps";
  return res;
}

namespace {

struct NewtonOutcome {
  std::optional<BigFloat> terminal;
  int iterations = 0;
  int perturbations = 0;
  bool hit_limit = false;
};

NewtonOutcome newton(const RadiusFunction& Q, const BoundConfig& cfg, BigFloat r) {
  const Precision p = cfg.start_precision;
  NewtonOutcome out;
  BigFloat tol = BigFloat::from_rational(cfg.nr_tolerance, p, MPFR_RNDN);
  BigFloat q(p), qd(p), delta(p), next(p), step_floor(p);
  while (out.iterations < cfg.nr_max_iterations) {
    try {
      Interval R = Interval::point(r);
      q = q_value(Q, R).midpoint();
      qd = q_derivative(Q, r, p).midpoint();
    } catch (const SingularityError&) {
      mpfr_nextabove(r.get());
      ++out.perturbations;
      if (out.perturbations > 64) return out;
      continue;
    }
    // delta = (r − q) / (1 − q')
    mpfr_sub(delta.get(), r.get(), q.get(), MPFR_RNDN);
    mpfr_ui_sub(qd.get(), 1, qd.get(), MPFR_RNDN);
    if (qd.is_zero()) {
      mpfr_nextabove(r.get());
      ++out.perturbations;
      if (out.perturbations > 64) return out;
      continue;
    }
    mpfr_div(delta.get(), delta.get(), qd.get(), MPFR_RNDN);
    mpfr_sub(next.get(), r.get(), delta.get(), MPFR_RNDN);
    ++out.iterations;
    if (!next.is_finite() || next.sign() <= 0) return out;
    r = next;
    mpfr_abs(delta.get(), delta.get(), MPFR_RNDN);
    // a step already at the rounding level of r counts as converged
    mpfr_abs(step_floor.get(), r.get(), MPFR_RNDN);
    mpfr_mul_2si(step_floor.get(), step_floor.get(), 4 - p, MPFR_RNDN);
    if (delta < tol || delta <= step_floor) {
      out.terminal = r;
      return out;
    }
  }
  out.hit_limit = true;
  out.terminal = r;
  return out;
}

}  // namespace

BoundResult algorithm_two(const RadiusFunction& Q, const BoundConfig& cfg) {
  cfg.validate();
  const std::size_t j = Q.zero_index();
  if (Q.has_duplicate())
    return failed(j, Status::Failed, "duplicate approximate zero; clustered zeros need a multiplicity-aware bound");

  const Precision p = cfg.start_precision;
  Interval q0 = q_at_zero(Q, p);
  if (Q.numerator_vanishes()) return exact_match(Q, cfg, q0);

  BigFloat fallback = q0.hi();
  BigFloat first = cfg.nr_start ? BigFloat::from_rational(*cfg.nr_start, p, MPFR_RNDN) : fallback;
  NewtonOutcome run = newton(Q, cfg, first);
  int total = run.iterations;
  std::string notes;
  if (!run.terminal) {
    notes = "Newton diverged from the given start, restarted from q(0); ";
    run = newton(Q, cfg, fallback);
    total += run.iterations;
    if (!run.terminal) {
      BoundResult res = failed(j, Status::Failed, notes + "Newton diverged again");
      res.q0 = q0;
      res.nr_iterations = total;
      return res;
    }
  }
  if (run.perturbations) notes += "perturbed " + std::to_string(run.perturbations) + " singular iterate(s); ";
  if (run.hit_limit) notes += "Newton iteration limit reached; ";

  BoundResult res = algorithm_one(Q, cfg, run.terminal->to_rational());
  res.q0 = q0;
  res.nr_iterations = total;
  if (!notes.empty()) {
    notes.resize(notes.size() - 2);
    res.diagnostic = res.diagnostic.empty() ? notes : notes + "; " + res.diagnostic;
  }
  return res;
}

std::vector<BoundResult> bound_all_zeros(const Polynomial& g, const ApproxZeroSet& alphas, const BoundConfig& cfg,
                                         Algorithm algorithm, const BoundOptions& options) {
  cfg.validate();
  if (static_cast<int>(alphas.size()) != g.degree())
    throw std::invalid_argument("number of approximate zeros must equal the degree");
  if (!options.nr_starts.empty() && options.nr_starts.size() != alphas.size())
    throw std::invalid_argument("per-zero Newton starts must match the number of zeros");

  const ErrorPolynomial h = error_polynomial(g, alphas);
  const std::size_t n = alphas.size();
  std::vector<BoundResult> results(n);

  auto solve = [&](std::size_t j) {
    try {
      RadiusFunction Q(h, alphas, g.leading(), j);
      BoundConfig local = cfg;
      if (!options.nr_starts.empty() && options.nr_starts[j]) local.nr_start = options.nr_starts[j];
      results[j] = algorithm == Algorithm::One ? algorithm_one(Q, local) : algorithm_two(Q, local);
    } catch (const std::exception& e) {
      results[j] = failed(j, Status::Failed, e.what());
    }
  };

  unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    for (std::size_t j = 0; j < n; ++j) solve(j);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t j = next++; j < n; j = next++) solve(j);
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace rouche

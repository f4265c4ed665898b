#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rouche/job.hpp"

namespace testing_support {

struct ReferenceRow {
  std::optional<std::string> q0;
  std::string bound;
  std::optional<int> iterations;
  std::optional<int> nr_iterations;
  std::optional<int> geometric_iterations;
};

struct Fixture {
  std::string name;
  int digits = 0;
  rouche::JobSpec spec;
  std::vector<ReferenceRow> rows;
};

std::string data_path(const std::string& relative);
std::string read_file(const std::string& path);
Fixture load_fixture(const std::string& name);
// Reference roots of Example k, 60 significant digits.
std::vector<rouche::ExactComplex> load_oracle_roots(int example);

double relative_error(const rouche::Rational& value, const std::string& reference);
double relative_error(double value, const std::string& reference);

// Expression tree paired with its exact value computed independently of the
// interval core. sqrt leaves only appear where the exact value is rational.
struct RandomExpr {
  rouche::Expr expr;
  rouche::Rational exact;
};

RandomExpr random_expr(std::mt19937_64& rng, int depth);
rouche::Rational random_rational(std::mt19937_64& rng, int max_digits = 6);

}  // namespace testing_support

#include "support.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace testing_support {

using rouche::Expr;
using rouche::ExactComplex;
using rouche::Rational;

std::string data_path(const std::string& relative) { return std::string(ROUCHE_DATA_DIR) + "/" + relative; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Fixture load_fixture(const std::string& name) {
  std::string text = read_file(data_path("fixtures/" + name + ".json"));
  auto doc = nlohmann::json::parse(text);
  Fixture fx{name, doc.value("digits", 0), rouche::make_job(rouche::parse_input(text)), {}};
  for (const auto& r : doc["reference"]["rows"]) {
    ReferenceRow row;
    if (r.contains("q0")) row.q0 = r["q0"].get<std::string>();
    row.bound = r["bound"].get<std::string>();
    if (r.contains("iterations")) row.iterations = r["iterations"].get<int>();
    if (r.contains("nr_iterations")) row.nr_iterations = r["nr_iterations"].get<int>();
    if (r.contains("geometric_iterations")) row.geometric_iterations = r["geometric_iterations"].get<int>();
    fx.rows.push_back(row);
  }
  return fx;
}

std::vector<ExactComplex> load_oracle_roots(int example) {
  std::istringstream in(read_file(data_path("oracle_roots/example" + std::to_string(example) + ".txt")));
  std::vector<ExactComplex> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(rouche::parse_complex(line));
  }
  return out;
}

double relative_error(const Rational& value, const std::string& reference) {
  Rational ref = rouche::parse_rational(reference);
  Rational diff = abs(value - ref) / abs(ref);
  return diff.get_d();
}

double relative_error(double value, const std::string& reference) {
  double ref = rouche::parse_rational(reference).get_d();
  return std::fabs(value - ref) / std::fabs(ref);
}

Rational random_rational(std::mt19937_64& rng, int max_digits) {
  std::uniform_int_distribution<long> digits(1, max_digits);
  long bound = 1;
  for (long k = digits(rng); k > 0; --k) bound *= 10;
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

namespace {

// Gaussian-integer multiples of Pythagorean triples have rational modulus.
ExactComplex rational_modulus_point(std::mt19937_64& rng, Rational& modulus) {
  static const int triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}};
  std::uniform_int_distribution<int> pick(0, 4);
  const int* t = triples[pick(rng)];
  Rational s = random_rational(rng, 4);
  modulus = abs(s) * t[2];
  std::uniform_int_distribution<int> sign(0, 3);
  int q = sign(rng);
  Rational a = s * t[0], b = s * t[1];
  return {q & 1 ? Rational(-a) : a, q & 2 ? Rational(-b) : b};
}

}  // namespace

RandomExpr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> choice(0, depth <= 0 ? 2 : 9);
  int c = choice(rng);
  switch (c) {
    case 0:
    case 1: {
      Rational q = random_rational(rng);
      return {Expr::constant(q), q};
    }
    case 2: {
      Rational m;
      ExactComplex z = rational_modulus_point(rng, m);
      return {Expr::modulus(z), m};
    }
    case 3:
    case 4: {
      auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
      return {a.expr + b.expr, a.exact + b.exact};
    }
    case 5: {
      auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
      return {a.expr - b.expr, a.exact - b.exact};
    }
    case 6:
    case 7: {
      auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
      return {a.expr * b.expr, a.exact * b.exact};
    }
    case 8: {
      auto a = random_expr(rng, depth - 1);
      std::uniform_int_distribution<unsigned> k(0, 4);
      unsigned e = k(rng);
      Rational v = 1;
      for (unsigned i = 0; i < e; ++i) v *= a.exact;
      return {a.expr.pow(e), v};
    }
    default: {
      auto a = random_expr(rng, depth - 1);
      return {a.expr.abs(), abs(a.exact)};
    }
  }
}

}  // namespace testing_support

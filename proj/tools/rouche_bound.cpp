// rouche-bound: certified error radii for approximate polynomial zeros.
//
//   rouche-bound [options] JOBFILE      (JOBFILE "-" reads stdin)
//
// Exit status: 0 all zeros certified, 1 some zero failed, 2 bad input or
// usage, 3 --verify found a disagreement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rouche/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Certified Rouche error bounds for approximate polynomial zeros"};

  std::string path;
  std::string algorithm, format = "table", epsilon, nr_start, nr_tol;
  long precision_start = 0, precision_cap = 0;
  int nr_max = 0;
  unsigned threads = 1;
  bool verify = false;

  app.add_option("input", path, "job file (text or json), '-' for stdin")->required();
  app.add_option("--algorithm", algorithm, "one (geometric search) or two (Newton start)")
      ->check(CLI::IsMember({"one", "two"}));
  app.add_option("--epsilon", epsilon, "growth factor minus one for the geometric search");
  app.add_option("--nr-start", nr_start, "Newton start used for every zero");
  app.add_option("--nr-tol", nr_tol, "Newton step tolerance (default 1e-30)");
  app.add_option("--nr-max-iter", nr_max, "Newton iteration limit (default 64)");
  app.add_option("--precision-start", precision_start, "starting precision in bits (default 64)");
  app.add_option("--precision-cap", precision_cap, "precision cap in bits (default 4096)");
  app.add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--verify", verify, "count zeros in each certified disk by winding number");
  app.add_option("--threads", threads, "zeros bounded concurrently (output order is unaffected)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    std::stringstream buffer;
    if (path == "-") {
      buffer << std::cin.rdbuf();
    } else {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "rouche-bound: cannot open " << path << "\n";
        return 2;
      }
      buffer << in.rdbuf();
    }

    rouche::JobSpec spec = rouche::make_job(rouche::parse_input(buffer.str()));
    if (const char* env = std::getenv("ROUCHE_PRECISION_START")) spec.config.start_precision = std::atol(env);
    if (!algorithm.empty()) spec.algorithm = algorithm == "two" ? rouche::Algorithm::Two : rouche::Algorithm::One;
    if (!epsilon.empty()) spec.config.epsilon = rouche::parse_rational(epsilon);
    if (!nr_start.empty()) {
      spec.config.nr_start = rouche::parse_rational(nr_start);
      spec.input.nr_starts.clear();
    }
    if (!nr_tol.empty()) spec.config.nr_tolerance = rouche::parse_rational(nr_tol);
    if (nr_max > 0) spec.config.nr_max_iterations = nr_max;
    if (precision_start > 0) spec.config.start_precision = precision_start;
    if (precision_cap > 0) spec.config.precision_cap = precision_cap;
    if (spec.config.precision_cap < spec.config.start_precision)
      spec.config.precision_cap = std::max<long>(spec.config.start_precision, 4096);
    spec.format = format == "json" ? rouche::OutputFormat::Json : rouche::OutputFormat::Table;
    spec.verify = verify;
    spec.threads = threads;
    spec.config.validate();

    rouche::JobReport report = rouche::run_job(spec);
    std::cout << rouche::render(spec, report);
    return report.exit_code;
  } catch (const rouche::InputError& e) {
    std::cerr << "rouche-bound: " << path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rouche-bound: " << e.what() << "\n";
    return 2;
  }
}

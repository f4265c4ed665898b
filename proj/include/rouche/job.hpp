#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rouche/bounds.hpp"
#include "rouche/oracles.hpp"

namespace rouche {

// Input rejected before any computation. line/column are 1-based; 0 when the
// position is not known (json semantic errors carry a path in the message).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct JobInput {
  Polynomial poly;
  ApproxZeroSet zeros;
  // Source text of each zero, for display.
  std::vector<std::string> zero_text;
  std::optional<Rational> epsilon;
  std::optional<Algorithm> algorithm;
  // Empty, or one optional start per zero.
  std::vector<std::optional<Rational>> nr_starts;
};

// Text format (keys may appear in any order, values run until the next key):
//   poly: c_n ... c_1 c_0     coefficients in descending powers
//   zeros:                    one complex number per line, a+bi / a-bi
//   epsilon: 1e-4             optional
//   algorithm: one|two        optional
//   nr-starts: s_1 ... s_n    optional, "-" keeps the default for a zero
// Lines starting with '#' are comments. Input whose first non-blank character
// is '{' is read as json with the keys poly, zeros, epsilon, algorithm and
// nr_starts; other keys are ignored.
JobInput parse_input(std::string_view text);

// 1e-8 for inputs written with at least 12 significant digits, 1e-4 otherwise.
Rational default_epsilon(const ApproxZeroSet& zeros);

enum class OutputFormat { Table, Json };

struct JobSpec {
  JobInput input;
  Algorithm algorithm = Algorithm::One;
  BoundConfig config;
  OutputFormat format = OutputFormat::Table;
  bool verify = false;
  unsigned threads = 1;
};

// Applies the epsilon/algorithm/Newton starts found in the input file.
JobSpec make_job(JobInput input);

struct JobReport {
  std::vector<BoundResult> results;
  std::vector<std::optional<WindingCount>> windings;
  // 0: every zero certified (or exact); 1: some zero failed; 3: --verify disagreed.
  int exit_code = 0;
};

JobReport run_job(const JobSpec& spec);
std::string render_table(const JobSpec& spec, const JobReport& report);
std::string render_json(const JobSpec& spec, const JobReport& report);
std::string render(const JobSpec& spec, const JobReport& report);

}  // namespace rouche

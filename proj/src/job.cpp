#include "rouche/job.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace rouche {

InputError::InputError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                        message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

struct Section {
  Token key;
  std::vector<Token> values;
};

std::string normalize_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";
  for (auto pos = s.find(minus); pos != std::string::npos; pos = s.find(minus, pos)) s.replace(pos, minus.size(), "-");
  return s;
}

Algorithm parse_algorithm(const std::string& s, int line, int column) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "one" || t == "1" || t == "i") return Algorithm::One;
  if (t == "two" || t == "2" || t == "ii") return Algorithm::Two;
  throw InputError("unknown algorithm '" + s + "' (expected one or two)", line, column);
}

JobInput assemble(std::vector<ExactComplex> coeffs, std::vector<ExactComplex> zeros, std::vector<std::string> zero_text,
                  std::optional<int> digits, const Token& poly_at, const Token& zeros_at) {
  if (coeffs.empty()) throw InputError("polynomial has no coefficients", poly_at.line, poly_at.column);
  if (coeffs.front().is_zero()) throw InputError("leading coefficient is zero", poly_at.line, poly_at.column);
  if (coeffs.size() < 2) throw InputError("polynomial must have degree at least 1", poly_at.line, poly_at.column);
  Polynomial g = Polynomial::from_descending(std::move(coeffs));
  if (static_cast<int>(zeros.size()) != g.degree())
    throw InputError("polynomial has degree " + std::to_string(g.degree()) + " but " + std::to_string(zeros.size()) +
                         " zeros were given",
                     zeros_at.line, zeros_at.column);
  ApproxZeroSet set{std::move(zeros), digits};
  return JobInput{std::move(g), std::move(set), std::move(zero_text), {}, {}, {}};
}

JobInput parse_text(std::string_view text) {
  std::vector<Section> sections;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line = normalize_minus(std::string(text.substr(pos, end - pos)));
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::size_t col = 0;
    auto colon = line.find(':');
    if (colon != std::string::npos) {
      std::string key = line.substr(0, colon);
      std::size_t first = key.find_first_not_of(" \t\r");
      std::size_t last = key.find_last_not_of(" \t\r");
      if (first == std::string::npos) throw InputError("missing key before ':'", line_no, static_cast<int>(colon + 1));
      key = key.substr(first, last - first + 1);
      for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      sections.push_back({{key, line_no, static_cast<int>(first + 1)}, {}});
      col = colon + 1;
    }
    while (col < line.size()) {
      while (col < line.size() && std::isspace(static_cast<unsigned char>(line[col]))) ++col;
      if (col >= line.size()) break;
      std::size_t start = col;
      while (col < line.size() && !std::isspace(static_cast<unsigned char>(line[col]))) ++col;
      if (sections.empty())
        throw InputError("value before any key (expected 'poly:')", line_no, static_cast<int>(start + 1));
      sections.back().values.push_back({line.substr(start, col - start), line_no, static_cast<int>(start + 1)});
    }
    if (end == text.size()) break;
  }

  const Section* poly = nullptr;
  const Section* zeros = nullptr;
  const Section* epsilon = nullptr;
  const Section* algorithm = nullptr;
  const Section* starts = nullptr;
  for (const auto& s : sections) {
    const Section** slot = nullptr;
    if (s.key.text == "poly") slot = &poly;
    else if (s.key.text == "zeros") slot = &zeros;
    else if (s.key.text == "epsilon") slot = &epsilon;
    else if (s.key.text == "algorithm") slot = &algorithm;
    else if (s.key.text == "nr-starts" || s.key.text == "nr_starts") slot = &starts;
    else throw InputError("unknown key '" + s.key.text + "'", s.key.line, s.key.column);
    if (*slot) throw InputError("duplicate key '" + s.key.text + "'", s.key.line, s.key.column);
    *slot = &s;
  }
  if (!poly) throw InputError("missing 'poly:' line", line_no, 1);
  if (!zeros) throw InputError("missing 'zeros:' block", line_no, 1);

  auto number = [](const Token& t) {
    try {
      return parse_complex(t.text);
    } catch (const ParseError& e) {
      throw InputError(e.what(), t.line, t.column);
    }
  };
  auto real = [](const Token& t) {
    try {
      return parse_rational(t.text);
    } catch (const ParseError& e) {
      throw InputError(e.what(), t.line, t.column);
    }
  };

  std::vector<ExactComplex> coeffs;
  for (const auto& t : poly->values) coeffs.push_back(number(t));
  std::vector<ExactComplex> zs;
  std::vector<std::string> ztext;
  int digits = 0;
  for (const auto& t : zeros->values) {
    zs.push_back(number(t));
    ztext.push_back(t.text);
    digits = std::max(digits, significant_digits(t.text));
  }
  JobInput in = assemble(std::move(coeffs), std::move(zs), std::move(ztext),
                         digits > 0 ? std::optional<int>(digits) : std::nullopt, poly->key, zeros->key);

  if (epsilon) {
    if (epsilon->values.size() != 1) throw InputError("epsilon takes one value", epsilon->key.line, epsilon->key.column);
    in.epsilon = real(epsilon->values[0]);
    if (sgn(*in.epsilon) <= 0)
      throw InputError("epsilon must be positive", epsilon->values[0].line, epsilon->values[0].column);
  }
  if (algorithm) {
    if (algorithm->values.size() != 1)
      throw InputError("algorithm takes one value", algorithm->key.line, algorithm->key.column);
    in.algorithm = parse_algorithm(algorithm->values[0].text, algorithm->values[0].line, algorithm->values[0].column);
  }
  if (starts) {
    if (starts->values.size() != in.zeros.size())
      throw InputError("nr-starts needs one value per zero", starts->key.line, starts->key.column);
    for (const auto& t : starts->values) {
      if (t.text == "-") {
        in.nr_starts.emplace_back();
        continue;
      }
      Rational s = real(t);
      if (sgn(s) <= 0) throw InputError("Newton start must be positive", t.line, t.column);
      in.nr_starts.emplace_back(s);
    }
  }
  return in;
}

using Json = nlohmann::json;

std::string json_number_text(const Json& v, const std::string& where) {
  if (v.is_string()) return normalize_minus(v.get<std::string>());
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float())
    throw InputError(where + ": non-integer numbers must be written as strings to stay exact", 0, 0);
  throw InputError(where + ": expected a number or a string", 0, 0);
}

JobInput parse_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    int line = 1, column = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(std::string("malformed json: ") + e.what(), line, column);
  }
  if (!doc.is_object()) throw InputError("json input must be an object", 1, 1);
  if (!doc.contains("poly") || !doc["poly"].is_array()) throw InputError("json input needs a 'poly' array", 0, 0);
  if (!doc.contains("zeros") || !doc["zeros"].is_array()) throw InputError("json input needs a 'zeros' array", 0, 0);

  auto complex_at = [](const Json& v, const std::string& where) {
    std::string s = json_number_text(v, where);
    try {
      return parse_complex(s);
    } catch (const ParseError& e) {
      throw InputError(where + ": " + e.what(), 0, 0);
    }
  };
  auto real_at = [](const Json& v, const std::string& where) {
    std::string s = json_number_text(v, where);
    try {
      return parse_rational(s);
    } catch (const ParseError& e) {
      throw InputError(where + ": " + e.what(), 0, 0);
    }
  };

  std::vector<ExactComplex> coeffs;
  for (std::size_t k = 0; k < doc["poly"].size(); ++k)
    coeffs.push_back(complex_at(doc["poly"][k], "poly[" + std::to_string(k) + "]"));
  std::vector<ExactComplex> zs;
  std::vector<std::string> ztext;
  int digits = 0;
  for (std::size_t k = 0; k < doc["zeros"].size(); ++k) {
    std::string where = "zeros[" + std::to_string(k) + "]";
    zs.push_back(complex_at(doc["zeros"][k], where));
    ztext.push_back(json_number_text(doc["zeros"][k], where));
    digits = std::max(digits, significant_digits(ztext.back()));
  }
  if (doc.contains("digits") && doc["digits"].is_number_integer()) digits = doc["digits"].get<int>();
  Token poly_at{"poly", 0, 0}, zeros_at{"zeros", 0, 0};
  JobInput in = [&] {
    try {
      return assemble(std::move(coeffs), std::move(zs), std::move(ztext),
                      digits > 0 ? std::optional<int>(digits) : std::nullopt, poly_at, zeros_at);
    } catch (const InputError& e) {
      throw InputError(std::string("json input: ") + e.what(), 0, 0);
    }
  }();

  if (doc.contains("epsilon")) {
    in.epsilon = real_at(doc["epsilon"], "epsilon");
    if (sgn(*in.epsilon) <= 0) throw InputError("epsilon must be positive", 0, 0);
  }
  if (doc.contains("algorithm")) {
    if (!doc["algorithm"].is_string()) throw InputError("algorithm must be a string", 0, 0);
    in.algorithm = parse_algorithm(doc["algorithm"].get<std::string>(), 0, 0);
  }
  if (doc.contains("nr_starts")) {
    const Json& s = doc["nr_starts"];
    if (!s.is_array() || s.size() != in.zeros.size())
      throw InputError("nr_starts needs one entry per zero", 0, 0);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k].is_null()) {
        in.nr_starts.emplace_back();
        continue;
      }
      Rational v = real_at(s[k], "nr_starts[" + std::to_string(k) + "]");
      if (sgn(v) <= 0) throw InputError("nr_starts[" + std::to_string(k) + "] must be positive", 0, 0);
      in.nr_starts.emplace_back(v);
    }
  }
  return in;
}

std::string display(const Rational& x, mpfr_rnd_t rnd = MPFR_RNDU) {
  if (sgn(x) == 0) return "0";
  return BigFloat::from_rational(x, 128, rnd).to_string(15, rnd);
}

std::string iterations_text(const JobSpec& spec, const BoundResult& r) {
  if (spec.algorithm == Algorithm::Two)
    return std::to_string(r.nr_iterations) + "+" + std::to_string(r.geometric_iterations);
  return std::to_string(r.geometric_iterations);
}

}  // namespace

JobInput parse_input(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

Rational default_epsilon(const ApproxZeroSet& zeros) {
  if (zeros.declared_digits && *zeros.declared_digits >= 12) return Rational(1, 100000000);
  return Rational(1, 10000);
}

JobSpec make_job(JobInput input) {
  JobSpec spec{std::move(input), Algorithm::One, BoundConfig{}};
  spec.config.epsilon = spec.input.epsilon ? *spec.input.epsilon : default_epsilon(spec.input.zeros);
  if (spec.input.algorithm) spec.algorithm = *spec.input.algorithm;
  return spec;
}

JobReport run_job(const JobSpec& spec) {
  JobReport report;
  BoundOptions options;
  options.threads = spec.threads;
  options.nr_starts = spec.input.nr_starts;
  report.results = bound_all_zeros(spec.input.poly, spec.input.zeros, spec.config, spec.algorithm, options);
  report.windings.resize(report.results.size());

  for (const auto& r : report.results)
    if (!r.certified()) report.exit_code = 1;

  if (spec.verify) {
    for (std::size_t j = 0; j < report.results.size(); ++j) {
      const auto& r = report.results[j];
      if (!r.certified() || sgn(r.radius) == 0) continue;
      WindingCount w = count_zeros_in_disk(spec.input.poly, spec.input.zeros.zeros[j], r.radius);
      report.windings[j] = w;
      if (r.status == Status::Certified && (!w.trustworthy || w.count != 1) && report.exit_code == 0)
        report.exit_code = 3;
    }
  }
  return report;
}

std::string render_table(const JobSpec& spec, const JobReport& report) {
  std::ostringstream out;
  out << "degree " << spec.input.poly.degree() << ", algorithm " << to_string(spec.algorithm) << ", epsilon "
      << to_exact_string(spec.config.epsilon) << "\n";
  const int zw = 30;
  out << std::left << std::setw(zw) << "zero" << "  " << std::setw(22) << "q(0)" << "  " << std::setw(22)
      << "bound" << "  " << std::setw(10) << (spec.algorithm == Algorithm::Two ? "NR+alg I" : "iterations") << "  "
      << std::setw(8) << "isolated" << "  " << "status";
  if (spec.verify) out << "  winding";
  out << "\n";
  for (std::size_t j = 0; j < report.results.size(); ++j) {
    const auto& r = report.results[j];
    std::string q0 = r.q0 ? (r.q0->hi().is_zero() ? "0" : r.q0->hi().to_string(15, MPFR_RNDU)) : "-";
    std::string bound = r.certified() ? display(r.radius) : "-";
    out << std::left << std::setw(zw) << spec.input.zero_text[j] << "  " << std::setw(22) << q0 << "  "
        << std::setw(22) << bound << "  " << std::setw(10) << iterations_text(spec, r) << "  " << std::setw(8)
        << (r.isolated ? "yes" : "no") << "  " << to_string(r.status);
    if (spec.verify) {
      const auto& w = report.windings[j];
      out << "  " << (w ? std::to_string(w->count) + (w->trustworthy ? "" : "?") : std::string("-"));
    }
    out << "\n";
    if (!r.diagnostic.empty()) out << "    note: " << r.diagnostic << "\n";
  }
  return out.str();
}

std::string render_json(const JobSpec& spec, const JobReport& report) {
  nlohmann::ordered_json doc;
  doc["degree"] = spec.input.poly.degree();
  doc["algorithm"] = to_string(spec.algorithm);
  doc["epsilon"] = to_exact_string(spec.config.epsilon);
  doc["precision_start"] = spec.config.start_precision;
  doc["precision_cap"] = spec.config.precision_cap;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < report.results.size(); ++j) {
    const auto& r = report.results[j];
    nlohmann::ordered_json row;
    row["index"] = j;
    row["zero"] = spec.input.zero_text[j];
    if (r.q0) {
      row["q0"] = r.q0->hi().is_zero() ? "0" : r.q0->hi().to_string(15, MPFR_RNDU);
      row["q0_enclosure"] = {to_exact_string(r.q0->lo().to_rational()), to_exact_string(r.q0->hi().to_rational())};
    } else {
      row["q0"] = nullptr;
    }
    if (r.certified()) {
      row["radius"] = to_exact_string(r.radius);
      row["radius_display"] = display(r.radius);
    } else {
      row["radius"] = nullptr;
    }
    row["geometric_iterations"] = r.geometric_iterations;
    row["nr_iterations"] = r.nr_iterations;
    row["isolated"] = r.isolated;
    row["status"] = to_string(r.status);
    if (!r.diagnostic.empty()) row["diagnostic"] = r.diagnostic;
    if (spec.verify && report.windings[j])
      row["winding"] = {{"count", report.windings[j]->count},
                        {"samples", report.windings[j]->samples_used},
                        {"trustworthy", report.windings[j]->trustworthy}};
    rows.push_back(row);
  }
  doc["results"] = rows;
  doc["exit_code"] = report.exit_code;
  return doc.dump(2) + "\n";
}

std::string render(const JobSpec& spec, const JobReport& report) {
  return spec.format == OutputFormat::Json ? render_json(spec, report) : render_table(spec, report);
}

}  // namespace rouche

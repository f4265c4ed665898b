#include "rouche/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace rouche {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed fraction " + quoted(text));
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in " + quoted(text));
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = body.substr(e + 1);
    body = body.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) throw ParseError("malformed exponent in " + quoted(text));
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = body, frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw ParseError("no digits in " + quoted(text));
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
    throw ParseError("malformed number " + quoted(text));

  std::string digits = std::string(int_part) + std::string(frac_part);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_exact_string(const Rational& x) {
  mpz_class den = x.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return x.get_num().get_str() + "/" + x.get_den().get_str();

  unsigned long k = std::max(twos, fives);
  mpz_class num = abs(x.get_num());
  mpz_class factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), 2, k - twos);
  num *= factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), 5, k - fives);
  num *= factor;

  std::string digits = num.get_str();
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  std::string out = sgn(x) < 0 ? "-" : "";
  out += digits.substr(0, digits.size() - k);
  if (k > 0) out += "." + digits.substr(digits.size() - k);
  return out;
}

int significant_digits(std::string_view text) {
  int count = 0;
  bool started = false;
  for (char c : text) {
    if (c == 'e' || c == 'E' || c == '/') break;
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (c != '0') started = true;
    if (started) ++count;
  }
  if (text.find('/') != std::string_view::npos) return 0;
  return started ? count : 1;
}

ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) { return {a.re + b.re, a.im + b.im}; }
ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) { return {a.re - b.re, a.im - b.im}; }
ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
bool operator==(const ExactComplex& a, const ExactComplex& b) { return a.re == b.re && a.im == b.im; }

namespace {

Rational parse_imaginary(std::string_view part, std::string_view whole) {
  std::string s(part);
  auto pos = s.find('i');
  if (pos == std::string::npos || s.find('i', pos + 1) != std::string::npos)
    throw ParseError("malformed complex number " + quoted(whole));
  bool leading = pos == 0 || (pos == 1 && (s[0] == '+' || s[0] == '-'));
  if (!leading && pos != s.size() - 1) throw ParseError("malformed complex number " + quoted(whole));
  s.erase(pos, 1);
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_rational(s);
}

}  // namespace

ExactComplex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty complex number");

  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') split = k;
  }
  std::string_view sv(s);
  if (split != std::string::npos) {
    auto first = sv.substr(0, split), second = sv.substr(split);
    bool first_imag = first.find('i') != std::string_view::npos;
    bool second_imag = second.find('i') != std::string_view::npos;
    if (first_imag == second_imag) throw ParseError("malformed complex number " + quoted(text));
    if (first_imag) return {parse_rational(second), parse_imaginary(first, text)};
    return {parse_rational(first), parse_imaginary(second, text)};
  }
  if (sv.find('i') != std::string_view::npos) return {0, parse_imaginary(sv, text)};
  return {parse_rational(sv), 0};
}

std::string to_exact_string(const ExactComplex& z) {
  if (sgn(z.im) == 0) return to_exact_string(z.re);
  std::string im = to_exact_string(Rational(abs(z.im)));
  return to_exact_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + im + "i";
}

}  // namespace rouche

#include "rouche/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rouche {

Polynomial::Polynomial(std::vector<ExactComplex> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  if (coeffs_.back().is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
}

Polynomial Polynomial::from_descending(std::vector<ExactComplex> descending) {
  std::reverse(descending.begin(), descending.end());
  return Polynomial(std::move(descending));
}

ExactComplex Polynomial::evaluate(const ExactComplex& z) const {
  ExactComplex acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() == 0) throw std::invalid_argument("derivative of a constant polynomial");
  std::vector<ExactComplex> d;
  for (int k = 1; k <= degree(); ++k) d.push_back(coeffs_[static_cast<std::size_t>(k)] * ExactComplex(k));
  return Polynomial(std::move(d));
}

bool ErrorPolynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactComplex& c) { return c.is_zero(); });
}

Polynomial expand_from_zeros(const ApproxZeroSet& zeros, const ExactComplex& leading) {
  if (leading.is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
  std::vector<ExactComplex> c{leading};
  for (const auto& alpha : zeros.zeros) {
    // multiply by (z - alpha)
    c.push_back(c.back());
    for (std::size_t k = c.size() - 2; k > 0; --k) c[k] = c[k - 1] - alpha * c[k];
    c[0] = -(alpha * c[0]);
  }
  return Polynomial(std::move(c));
}

ErrorPolynomial error_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("error polynomial needs equal degrees");
  if (!(f.leading() == g.leading())) throw std::invalid_argument("error polynomial needs equal leading coefficients");
  std::vector<ExactComplex> b;
  b.reserve(static_cast<std::size_t>(f.degree()));
  for (int k = 0; k < f.degree(); ++k) b.push_back(f[k] - g[k]);
  return ErrorPolynomial(std::move(b));
}

ErrorPolynomial error_polynomial(const Polynomial& g, const ApproxZeroSet& zeros) {
  if (static_cast<int>(zeros.size()) != g.degree())
    throw std::invalid_argument("number of approximate zeros must equal the degree");
  return error_polynomial(expand_from_zeros(zeros, g.leading()), g);
}

ComplexInterval horner_eval(const Polynomial& p, const ComplexInterval& z) {
  Precision prec = std::max(z.re.precision(), z.im.precision());
  ComplexInterval acc = enclose(p.leading(), prec);
  for (int k = p.degree() - 1; k >= 0; --k) acc = acc * z + enclose(p[k], prec);
  return acc;
}

}  // namespace rouche

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rouche/interval.hpp"

namespace rouche {

// Exact polynomial stored in ascending powers: coeffs[k] multiplies z^k.
class Polynomial {
 public:
  explicit Polynomial(std::vector<ExactComplex> ascending);
  static Polynomial from_descending(std::vector<ExactComplex> descending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ExactComplex& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const ExactComplex& leading() const { return coeffs_.back(); }
  std::span<const ExactComplex> coefficients() const { return coeffs_; }

  ExactComplex evaluate(const ExactComplex& z) const;
  Polynomial derivative() const;

 private:
  std::vector<ExactComplex> coeffs_;
};

struct ApproxZeroSet {
  std::vector<ExactComplex> zeros;
  // Significant decimal digits of the source text, when known.
  std::optional<int> declared_digits;

  std::size_t size() const { return zeros.size(); }
};

// h = f − g, degree at most n − 1; coefficients[k] multiplies z^k.
class ErrorPolynomial {
 public:
  explicit ErrorPolynomial(std::vector<ExactComplex> ascending) : coeffs_(std::move(ascending)) {}

  std::span<const ExactComplex> coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const;

 private:
  std::vector<ExactComplex> coeffs_;
};

// leading · Π (z − α_i), expanded exactly.
Polynomial expand_from_zeros(const ApproxZeroSet& zeros, const ExactComplex& leading);

// Both polynomials must share degree and leading coefficient.
ErrorPolynomial error_polynomial(const Polynomial& f, const Polynomial& g);

// Error polynomial of a zero set against the input polynomial it approximates.
ErrorPolynomial error_polynomial(const Polynomial& g, const ApproxZeroSet& zeros);

ComplexInterval horner_eval(const Polynomial& p, const ComplexInterval& z);

}  // namespace rouche

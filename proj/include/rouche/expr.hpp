#pragma once

#include <functional>
#include <memory>

#include "rouche/interval.hpp"

namespace rouche {

enum class Decision { True, False, Undecided };

const char* to_string(Decision d);

struct PrecisionSchedule {
  Precision start = 64;
  Precision cap = 4096;
};

// Immutable expression over exact leaves. Evaluation at a precision yields a
// guaranteed enclosure of the exact value.
class Expr {
 public:
  static Expr constant(Rational value);
  // |z| of an exact complex number.
  static Expr modulus(ExactComplex z);
  static Expr sqrt(Expr arg);

  Expr pow(unsigned k) const;
  Expr abs() const;

  Interval enclose(Precision prec) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Enclosure = std::function<Interval(Precision)>;

// Decides lhs < rhs. True once rhs.lo > lhs.hi, False once rhs.hi < lhs.lo,
// doubling the precision from schedule.start up to schedule.cap otherwise.
Decision certified_compare(const Enclosure& lhs, const Enclosure& rhs, PrecisionSchedule schedule);
Decision certified_compare(const Expr& lhs, const Expr& rhs, PrecisionSchedule schedule);

}  // namespace rouche

#include "rouche/expr.hpp"

#include <algorithm>

namespace rouche {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::True: return "TRUE";
    case Decision::False: return "FALSE";
    case Decision::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

struct Expr::Node {
  enum class Kind { Constant, Modulus, Sqrt, Add, Sub, Mul, Neg, Pow, Abs };
  Kind kind;
  Rational value;
  ExactComplex z;
  unsigned exponent = 0;
  std::shared_ptr<const Node> lhs, rhs;

  Interval enclose(Precision prec) const {
    switch (kind) {
      case Kind::Constant: return rouche::enclose(value, prec);
      case Kind::Modulus: return rouche::modulus(z, prec);
      case Kind::Sqrt: return rouche::sqrt(lhs->enclose(prec));
      case Kind::Add: return lhs->enclose(prec) + rhs->enclose(prec);
      case Kind::Sub: return lhs->enclose(prec) - rhs->enclose(prec);
      case Kind::Mul: return lhs->enclose(prec) * rhs->enclose(prec);
      case Kind::Neg: return -lhs->enclose(prec);
      case Kind::Pow: return rouche::pow(lhs->enclose(prec), exponent);
      case Kind::Abs: return rouche::abs(lhs->enclose(prec));
    }
    throw std::logic_error("unknown expression node");
  }
};

namespace {

using Kind = Expr::Node::Kind;

std::shared_ptr<Expr::Node> make(Kind kind) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = kind;
  return n;
}

}  // namespace

Expr Expr::constant(Rational value) {
  auto n = make(Kind::Constant);
  n->value = std::move(value);
  return Expr(n);
}

Expr Expr::modulus(ExactComplex z) {
  auto n = make(Kind::Modulus);
  n->z = std::move(z);
  return Expr(n);
}

Expr Expr::sqrt(Expr arg) {
  auto n = make(Kind::Sqrt);
  n->lhs = arg.node_;
  return Expr(n);
}

Expr Expr::pow(unsigned k) const {
  auto n = make(Kind::Pow);
  n->lhs = node_;
  n->exponent = k;
  return Expr(n);
}

Expr Expr::abs() const {
  auto n = make(Kind::Abs);
  n->lhs = node_;
  return Expr(n);
}

Interval Expr::enclose(Precision prec) const {
  require_precision(prec);
  return node_->enclose(prec);
}

Expr operator+(const Expr& a, const Expr& b) {
  auto n = make(Kind::Add);
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Expr(n);
}

Expr operator-(const Expr& a, const Expr& b) {
  auto n = make(Kind::Sub);
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Expr(n);
}

Expr operator*(const Expr& a, const Expr& b) {
  auto n = make(Kind::Mul);
  n->lhs = a.node_;
  n->rhs = b.node_;
  return Expr(n);
}

Expr operator-(const Expr& a) {
  auto n = make(Kind::Neg);
  n->lhs = a.node_;
  return Expr(n);
}

Decision certified_compare(const Enclosure& lhs, const Enclosure& rhs, PrecisionSchedule schedule) {
  require_precision(schedule.start);
  if (schedule.cap < schedule.start) throw std::invalid_argument("precision cap below start precision");
  for (Precision p = schedule.start;; p = std::min(2 * p, schedule.cap)) {
    Interval l = lhs(p);
    Interval r = rhs(p);
    if (r.lo() > l.hi()) return Decision::True;
    if (r.hi() < l.lo()) return Decision::False;
    if (p >= schedule.cap) return Decision::Undecided;
  }
}

Decision certified_compare(const Expr& lhs, const Expr& rhs, PrecisionSchedule schedule) {
  return certified_compare([&](Precision p) { return lhs.enclose(p); },
                           [&](Precision p) { return rhs.enclose(p); }, schedule);
}

}  // namespace rouche

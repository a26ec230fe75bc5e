#include "okakit/expression.hpp"

#include <sstream>
#include <utility>

#include "okakit/error.hpp"

namespace okakit {

Expr Expr::var(std::size_t axis) { return Expr(std::make_shared<const Node>(Node{Op::Var, {}, axis, {}, 0})); }

Expr Expr::constant(GaussianRational c) {
  return Expr(std::make_shared<const Node>(Node{Op::Const, {}, 0, std::move(c), 0}));
}

Expr Expr::add(std::vector<Expr> args) {
  if (args.empty()) throw Error(ErrorCode::InvalidProblem, "add needs at least one argument");
  return Expr(std::make_shared<const Node>(Node{Op::Add, std::move(args), 0, {}, 0}));
}

Expr Expr::mul(std::vector<Expr> args) {
  if (args.empty()) throw Error(ErrorCode::InvalidProblem, "mul needs at least one argument");
  return Expr(std::make_shared<const Node>(Node{Op::Mul, std::move(args), 0, {}, 0}));
}

Expr Expr::pow(Expr base, long exponent) {
  return Expr(std::make_shared<const Node>(Node{Op::Pow, {std::move(base)}, 0, {}, exponent}));
}

Expr Expr::neg(Expr arg) { return Expr(std::make_shared<const Node>(Node{Op::Neg, {std::move(arg)}, 0, {}, 0})); }

Expr Expr::inv(Expr arg) { return Expr(std::make_shared<const Node>(Node{Op::Inv, {std::move(arg)}, 0, {}, 0})); }

Complex Expr::evaluate(std::span<const Complex> z) const {
  switch (op()) {
    case Op::Var:
      if (axis() >= z.size()) throw Error(ErrorCode::IncompatibleOperands, "expression variable out of range");
      return z[axis()];
    case Op::Const:
      return value().to_complex();
    case Op::Add: {
      Complex s{};
      for (const auto& a : args()) s += a.evaluate(z);
      return s;
    }
    case Op::Mul: {
      Complex p{1.0, 0.0};
      for (const auto& a : args()) p *= a.evaluate(z);
      return p;
    }
    case Op::Pow: {
      const Complex b = args()[0].evaluate(z);
      Complex p{1.0, 0.0};
      const long e = exponent() < 0 ? -exponent() : exponent();
      for (long k = 0; k < e; ++k) p *= b;
      return exponent() < 0 ? 1.0 / p : p;
    }
    case Op::Neg:
      return -args()[0].evaluate(z);
    case Op::Inv:
      return 1.0 / args()[0].evaluate(z);
  }
  return {};
}

bool Expr::is_polynomial() const {
  if (op() == Op::Inv || (op() == Op::Pow && exponent() < 0)) return false;
  for (const auto& a : args())
    if (!a.is_polynomial()) return false;
  return true;
}

bool Expr::involves_axis(std::size_t k) const {
  if (op() == Op::Var) return axis() == k;
  for (const auto& a : args())
    if (a.involves_axis(k)) return true;
  return false;
}

std::size_t Expr::arity() const {
  if (op() == Op::Var) return axis() + 1;
  std::size_t m = 0;
  for (const auto& a : args()) m = std::max(m, a.arity());
  return m;
}

ExactSeries Expr::to_polynomial(std::size_t dim) const {
  if (arity() > dim) throw Error(ErrorCode::IncompatibleOperands, "expression uses more variables than the dimension");
  switch (op()) {
    case Op::Var:
      return ExactSeries::coordinate(dim, axis());
    case Op::Const:
      return ExactSeries::constant(dim, value());
    case Op::Add: {
      ExactSeries s(dim);
      for (const auto& a : args()) s += a.to_polynomial(dim);
      return s;
    }
    case Op::Mul: {
      ExactSeries p = ExactSeries::constant(dim, GaussianRational(1));
      for (const auto& a : args()) p *= a.to_polynomial(dim);
      return p;
    }
    case Op::Pow: {
      if (exponent() < 0) break;
      const ExactSeries b = args()[0].to_polynomial(dim);
      ExactSeries p = ExactSeries::constant(dim, GaussianRational(1));
      for (long k = 0; k < exponent(); ++k) p *= b;
      return p;
    }
    case Op::Neg:
      return -args()[0].to_polynomial(dim);
    case Op::Inv:
      break;
  }
  throw Error(ErrorCode::RequiresExactPolynomial, "expression is not a polynomial: " + to_string());
}

Evaluable Expr::to_evaluable(std::size_t dim, std::optional<Cuboid> domain) const {
  if (arity() > dim) throw Error(ErrorCode::IncompatibleOperands, "expression uses more variables than the dimension");
  Evaluable out;
  if (is_polynomial()) {
    out = Evaluable::polynomial(to_polynomial(dim), to_string());
  } else {
    bool parameter_free = true;
    for (std::size_t k = 0; k + 1 < dim; ++k) parameter_free = parameter_free && !involves_axis(k);
    if (parameter_free) {
      Expr self = *this;
      const std::size_t n = dim;
      out = Evaluable::cylinder(dim, {{MultiIndex(dim - 1), [self, n](Complex zn) {
                                         std::vector<Complex> z(n);
                                         z.back() = zn;
                                         return self.evaluate(z);
                                       }}},
                                std::nullopt, to_string());
    } else {
      Expr self = *this;
      out = Evaluable(dim, [self](std::span<const Complex> z) { return self.evaluate(z); }, std::nullopt, to_string());
    }
  }
  return domain ? out.with_domain(*domain) : out;
}

std::string Expr::to_string() const {
  std::ostringstream os;
  const auto join = [&](const char* sep) {
    os << '(';
    for (std::size_t i = 0; i < args().size(); ++i) os << (i ? sep : "") << args()[i].to_string();
    os << ')';
  };
  switch (op()) {
    case Op::Var:
      os << 'z' << axis() + 1;
      break;
    case Op::Const:
      os << value();
      break;
    case Op::Add:
      join(" + ");
      break;
    case Op::Mul:
      join("*");
      break;
    case Op::Pow:
      os << args()[0].to_string() << '^' << exponent();
      break;
    case Op::Neg:
      os << "-" << args()[0].to_string();
      break;
    case Op::Inv:
      os << "1/" << args()[0].to_string();
      break;
  }
  return os.str();
}

}  // namespace okakit

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "okakit/evaluable.hpp"
#include "okakit/gaussian_rational.hpp"
#include "okakit/series.hpp"

namespace okakit {

/// Closed-form expression tree over z_1, ..., z_n and Gaussian-rational
/// literals. Nodes are immutable and shared between copies.
class Expr {
 public:
  enum class Op { Var, Const, Add, Mul, Pow, Neg, Inv };

  Expr() : Expr(constant(GaussianRational(0))) {}

  /// Zero-based axis.
  static Expr var(std::size_t axis);
  static Expr constant(GaussianRational c);
  static Expr constant(Complex c) { return constant(GaussianRational::from_complex(c)); }
  static Expr add(std::vector<Expr> args);
  static Expr mul(std::vector<Expr> args);
  static Expr pow(Expr base, long exponent);
  static Expr neg(Expr arg);
  static Expr inv(Expr arg);

  Op op() const noexcept { return node_->op; }
  const std::vector<Expr>& args() const noexcept { return node_->args; }
  std::size_t axis() const noexcept { return node_->axis; }
  const GaussianRational& value() const noexcept { return node_->value; }
  long exponent() const noexcept { return node_->exponent; }

  Complex evaluate(std::span<const Complex> z) const;
  Complex evaluate(std::initializer_list<Complex> z) const {
    return evaluate(std::span<const Complex>(z.begin(), z.size()));
  }

  /// True when no inverse or negative power occurs.
  bool is_polynomial() const;
  bool involves_axis(std::size_t axis) const;
  /// One past the largest variable axis, 0 for constants.
  std::size_t arity() const;

  /// Exact expansion around the origin of C^dim. Throws
  /// RequiresExactPolynomial for non-polynomial trees.
  ExactSeries to_polynomial(std::size_t dim) const;

  /// Polynomial trees become cylinder-form polynomials; trees in z_n alone
  /// become a single cylinder term; anything else a generic closure.
  Evaluable to_evaluable(std::size_t dim, std::optional<Cuboid> domain = std::nullopt) const;

  std::string to_string() const;

 private:
  struct Node {
    Op op;
    std::vector<Expr> args;
    std::size_t axis = 0;
    GaussianRational value;
    long exponent = 0;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace okakit

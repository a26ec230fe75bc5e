#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "okakit/cuboid.hpp"
#include "okakit/multi_index.hpp"
#include "okakit/scalar.hpp"
#include "okakit/series.hpp"

namespace okakit {

using Function1D = std::function<Complex(Complex)>;

/// One term z'^mu * u(z_n) of a function polynomial in the parameters
/// z' = (z_1, ..., z_{n-1}). `exponent` has length n - 1.
struct CylinderTerm {
  MultiIndex exponent;
  Function1D profile;
};

/// Immutable holomorphic-function black box C^n -> C with a declared domain
/// of validity. Copies share the underlying closure.
///
/// Functions that are polynomial in z' keep that structure (a cylinder
/// form), so one-variable operations in z_n can act term by term. Every
/// function of one variable has a trivial cylinder form.
class Evaluable {
 public:
  using Function = std::function<Complex(std::span<const Complex>)>;

  Evaluable() = default;
  Evaluable(std::size_t dim, Function fn, std::optional<Cuboid> domain = std::nullopt, std::string tag = {});

  static Evaluable zero(std::size_t dim);
  static Evaluable constant(std::size_t dim, Complex c);
  static Evaluable cylinder(std::size_t dim, std::vector<CylinderTerm> terms, std::optional<Cuboid> domain = std::nullopt,
                            std::string tag = {});
  static Evaluable polynomial(const FloatSeries& f, std::string tag = "polynomial");
  static Evaluable polynomial(const ExactSeries& f, std::string tag = "polynomial");

  std::size_t dim() const noexcept { return dim_; }
  const Cuboid& domain() const noexcept { return domain_; }
  const std::string& tag() const noexcept { return tag_; }
  bool empty() const noexcept { return !impl_; }

  Complex operator()(std::span<const Complex> z) const;
  Complex operator()(std::initializer_list<Complex> z) const {
    return (*this)(std::span<const Complex>(z.begin(), z.size()));
  }

  std::optional<std::vector<CylinderTerm>> cylinder_terms() const;

  Evaluable with_domain(Cuboid domain) const;
  Evaluable with_tag(std::string tag) const;

  friend Evaluable operator+(const Evaluable& a, const Evaluable& b);
  friend Evaluable operator-(const Evaluable& a, const Evaluable& b);
  Evaluable operator-() const { return scaled(Complex{-1.0, 0.0}); }
  Evaluable scaled(Complex c) const;
  /// z_axis * f.
  Evaluable times_coordinate(std::size_t axis) const;

 private:
  struct Impl;
  std::size_t dim_ = 0;
  std::shared_ptr<const Impl> impl_;
  Cuboid domain_;
  std::string tag_;
};

}  // namespace okakit

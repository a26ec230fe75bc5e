#include "okakit/evaluable.hpp"

#include <map>
#include <utility>

#include "okakit/error.hpp"

namespace okakit {

struct Evaluable::Impl {
  Function generic;
  std::optional<std::vector<CylinderTerm>> terms;

  Complex eval(std::span<const Complex> z) const {
    if (!terms) return generic(z);
    Complex sum{};
    const std::size_t params = z.size() - 1;
    for (const auto& t : *terms) {
      Complex mono{1.0, 0.0};
      for (std::size_t k = 0; k < params; ++k)
        for (std::uint32_t e = 0; e < t.exponent[k]; ++e) mono *= z[k];
      if (mono == Complex{}) continue;
      sum += mono * t.profile(z[params]);
    }
    return sum;
  }
};

namespace {

void require_same_dim(const Evaluable& a, const Evaluable& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::IncompatibleOperands, "evaluable dimensions differ");
}

std::string join_tag(const std::string& a, const char* op, const std::string& b) {
  return "(" + a + op + b + ")";
}

}  // namespace

Evaluable::Evaluable(std::size_t dim, Function fn, std::optional<Cuboid> domain, std::string tag)
    : dim_(dim),
      impl_(std::make_shared<Impl>(Impl{std::move(fn), std::nullopt})),
      domain_(domain ? std::move(*domain) : Cuboid::everywhere(dim)),
      tag_(std::move(tag)) {
  if (dim == 0) throw Error(ErrorCode::IncompatibleOperands, "evaluable needs a positive dimension");
}

Evaluable Evaluable::cylinder(std::size_t dim, std::vector<CylinderTerm> terms, std::optional<Cuboid> domain,
                              std::string tag) {
  if (dim == 0) throw Error(ErrorCode::IncompatibleOperands, "evaluable needs a positive dimension");
  for (const auto& t : terms)
    if (t.exponent.dim() != dim - 1) throw Error(ErrorCode::IncompatibleOperands, "cylinder exponent length must be n-1");
  Evaluable e;
  e.dim_ = dim;
  e.impl_ = std::make_shared<Impl>(Impl{{}, std::move(terms)});
  e.domain_ = domain ? std::move(*domain) : Cuboid::everywhere(dim);
  e.tag_ = std::move(tag);
  return e;
}

Evaluable Evaluable::zero(std::size_t dim) { return cylinder(dim, {}, std::nullopt, "0"); }

Evaluable Evaluable::constant(std::size_t dim, Complex c) {
  return cylinder(dim, {{MultiIndex(dim - 1), [c](Complex) { return c; }}}, std::nullopt, "const");
}

Evaluable Evaluable::polynomial(const FloatSeries& f, std::string tag) {
  const std::size_t n = f.dim();
  // Monomials in z' are taken around the origin; z_n keeps its own center.
  FloatSeries::Point origin(n, Complex{});
  origin[n - 1] = f.center()[n - 1];
  FloatSeries g = f.is_exact_polynomial() ? f.recenter(origin) : f;
  if (!f.is_exact_polynomial()) {
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (f.center()[k] != Complex{}) throw Error(ErrorCode::RequiresExactPolynomial, "truncated series off origin");
  }
  const Complex bn = g.center()[n - 1];
  std::map<MultiIndex, std::vector<Complex>> grouped;
  for (const auto& [nu, c] : g.terms()) {
    auto& coeffs = grouped[nu.head(n - 1)];
    if (coeffs.size() <= nu[n - 1]) coeffs.resize(nu[n - 1] + 1);
    coeffs[nu[n - 1]] += c;
  }
  std::vector<CylinderTerm> terms;
  for (auto& [mu, coeffs] : grouped) {
    terms.push_back({mu, [coeffs = std::move(coeffs), bn](Complex zn) {
                       Complex acc{};
                       const Complex x = zn - bn;
                       for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
                       return acc;
                     }});
  }
  return cylinder(n, std::move(terms), std::nullopt, std::move(tag));
}

Evaluable Evaluable::polynomial(const ExactSeries& f, std::string tag) {
  if (!f.is_exact_polynomial()) return polynomial(to_floating(f), std::move(tag));
  ExactSeries::Point origin(f.dim());
  origin.back() = f.center().back();
  return polynomial(to_floating(f.recenter(origin)), std::move(tag));
}

Complex Evaluable::operator()(std::span<const Complex> z) const {
  if (!impl_) throw Error(ErrorCode::IncompatibleOperands, "empty evaluable");
  if (z.size() != dim_) throw Error(ErrorCode::IncompatibleOperands, "evaluation point has wrong dimension");
  return impl_->eval(z);
}

std::optional<std::vector<CylinderTerm>> Evaluable::cylinder_terms() const {
  if (!impl_) return std::nullopt;
  if (impl_->terms) return impl_->terms;
  if (dim_ == 1) {
    auto self = impl_;
    return std::vector<CylinderTerm>{{MultiIndex(0), [self](Complex z) {
                                        const Complex p[1] = {z};
                                        return self->eval(p);
                                      }}};
  }
  return std::nullopt;
}

Evaluable Evaluable::with_domain(Cuboid domain) const {
  Evaluable e = *this;
  e.domain_ = std::move(domain);
  return e;
}

Evaluable Evaluable::with_tag(std::string tag) const {
  Evaluable e = *this;
  e.tag_ = std::move(tag);
  return e;
}

Evaluable operator+(const Evaluable& a, const Evaluable& b) {
  require_same_dim(a, b);
  auto ta = a.impl_->terms, tb = b.impl_->terms;
  if (ta && tb) {
    auto terms = std::move(*ta);
    terms.insert(terms.end(), tb->begin(), tb->end());
    return Evaluable::cylinder(a.dim_, std::move(terms), a.domain_, join_tag(a.tag_, "+", b.tag_));
  }
  return Evaluable(
      a.dim_, [ia = a.impl_, ib = b.impl_](std::span<const Complex> z) { return ia->eval(z) + ib->eval(z); },
      a.domain_, join_tag(a.tag_, "+", b.tag_));
}

Evaluable operator-(const Evaluable& a, const Evaluable& b) {
  require_same_dim(a, b);
  auto ta = a.impl_->terms, tb = b.impl_->terms;
  if (ta && tb) {
    auto terms = std::move(*ta);
    for (const auto& t : *tb) terms.push_back({t.exponent, [u = t.profile](Complex z) { return -u(z); }});
    return Evaluable::cylinder(a.dim_, std::move(terms), a.domain_, join_tag(a.tag_, "-", b.tag_));
  }
  return Evaluable(
      a.dim_, [ia = a.impl_, ib = b.impl_](std::span<const Complex> z) { return ia->eval(z) - ib->eval(z); },
      a.domain_, join_tag(a.tag_, "-", b.tag_));
}

Evaluable Evaluable::scaled(Complex c) const {
  if (impl_->terms) {
    std::vector<CylinderTerm> terms;
    for (const auto& t : *impl_->terms) terms.push_back({t.exponent, [u = t.profile, c](Complex z) { return c * u(z); }});
    return cylinder(dim_, std::move(terms), domain_, tag_);
  }
  return Evaluable(
      dim_, [self = impl_, c](std::span<const Complex> z) { return c * self->eval(z); }, domain_, tag_);
}

Evaluable Evaluable::times_coordinate(std::size_t axis) const {
  if (axis >= dim_) throw Error(ErrorCode::IncompatibleOperands, "axis out of range");
  const std::string tag = "z" + std::to_string(axis + 1) + "*" + tag_;
  if (impl_->terms) {
    std::vector<CylinderTerm> terms;
    for (const auto& t : *impl_->terms) {
      if (axis + 1 < dim_) {
        MultiIndex up = t.exponent;
        up[axis] += 1;
        terms.push_back({up, t.profile});
      } else {
        terms.push_back({t.exponent, [u = t.profile](Complex z) { return z * u(z); }});
      }
    }
    return cylinder(dim_, std::move(terms), domain_, tag);
  }
  return Evaluable(
      dim_, [self = impl_, axis](std::span<const Complex> z) { return z[axis] * self->eval(z); }, domain_, tag);
}

}  // namespace okakit

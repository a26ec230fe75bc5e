#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "okakit/error.hpp"
#include "okakit/multi_index.hpp"
#include "okakit/scalar.hpp"

namespace okakit {

/// Multivariate power series sum_nu c_nu (z - b)^nu around a center b in C^n.
///
/// Either an exact polynomial (no truncation order) or a series known modulo
/// terms of total degree > order. Coefficients are stored sparsely and never
/// hold explicit zeros, so two series are equal iff their term maps are equal.
template <Coefficient S>
class TruncatedSeries {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;
  using Point = std::vector<S>;
  using TermMap = std::map<MultiIndex, S>;
  using Order = std::optional<std::uint32_t>;

  TruncatedSeries() = default;

  explicit TruncatedSeries(std::size_t dim, Order order = std::nullopt)
      : center_(dim, Traits::zero()), order_(order) {}

  explicit TruncatedSeries(Point center, Order order = std::nullopt)
      : center_(std::move(center)), order_(order) {}

  static TruncatedSeries constant(Point center, const S& c, Order order = std::nullopt) {
    TruncatedSeries f(std::move(center), order);
    f.add_term(MultiIndex(f.dim()), c);
    return f;
  }

  static TruncatedSeries constant(std::size_t dim, const S& c) {
    return constant(Point(dim, Traits::zero()), c);
  }

  static TruncatedSeries monomial(Point center, MultiIndex nu, const S& c = Traits::one()) {
    TruncatedSeries f(std::move(center));
    f.add_term(nu, c);
    return f;
  }

  /// The coordinate function z_axis written around `center`: (z_k - b_k) + b_k.
  static TruncatedSeries coordinate(Point center, std::size_t axis) {
    TruncatedSeries f(std::move(center));
    f.add_term(MultiIndex::unit(f.dim(), axis), Traits::one());
    f.add_term(MultiIndex(f.dim()), f.center_[axis]);
    return f;
  }

  static TruncatedSeries coordinate(std::size_t dim, std::size_t axis) {
    return coordinate(Point(dim, Traits::zero()), axis);
  }

  std::size_t dim() const noexcept { return center_.size(); }
  const Point& center() const noexcept { return center_; }
  Order order() const noexcept { return order_; }
  bool is_exact_polynomial() const noexcept { return !order_.has_value(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  S coefficient(const MultiIndex& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  /// Highest total degree among stored terms; nullopt for the zero series.
  std::optional<std::uint64_t> degree() const {
    std::optional<std::uint64_t> d;
    for (const auto& [nu, c] : terms_) d = std::max<std::uint64_t>(d.value_or(0), nu.total_degree());
    return d;
  }

  bool involves_axis(std::size_t axis) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[axis] > 0; });
  }

  double max_magnitude() const {
    double m = 0.0;
    for (const auto& [nu, c] : terms_) m = std::max(m, Traits::magnitude(c));
    return m;
  }

  /// Accumulates c into the coefficient of nu, keeping the canonical form.
  void add_term(const MultiIndex& nu, const S& c) {
    if (nu.dim() != dim()) throw Error(ErrorCode::IncompatibleOperands, "multi-index length differs from dimension");
    if (order_ && nu.total_degree() > *order_) return;
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(nu, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  TruncatedSeries truncated(std::uint32_t d) const {
    TruncatedSeries r(center_, order_ ? std::min(*order_, d) : d);
    for (const auto& [nu, c] : terms_) r.add_term(nu, c);
    return r;
  }

  /// Same terms with the truncation order replaced; used where an operation
  /// knows its result more precisely than the min-order rule.
  TruncatedSeries with_order(Order order) const {
    TruncatedSeries r(center_, order);
    for (const auto& [nu, c] : terms_) r.add_term(nu, c);
    return r;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r(center_, order_);
    for (const auto& [nu, c] : terms_) r.terms_.emplace(nu, -c);
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(a.center_, combined_order(a, b));
    for (const auto& [nu, c] : a.terms_) r.add_term(nu, c);
    for (const auto& [nu, c] : b.terms_) r.add_term(nu, c);
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(a.center_, combined_order(a, b));
    for (const auto& [nu, c] : a.terms_) r.add_term(nu, c);
    for (const auto& [nu, c] : b.terms_) r.add_term(nu, -c);
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(a.center_, combined_order(a, b));
    for (const auto& [na, ca] : a.terms_) {
      for (const auto& [nb, cb] : b.terms_) {
        MultiIndex nu = na + nb;
        if (r.order_ && nu.total_degree() > *r.order_) continue;
        r.add_term(nu, ca * cb);
      }
    }
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  TruncatedSeries scale(const S& s) const {
    TruncatedSeries r(center_, order_);
    if (Traits::is_zero(s)) return r;
    for (const auto& [nu, c] : terms_) r.add_term(nu, c * s);
    return r;
  }

  /// Multiplies by the coordinate z_axis. When the center has b_axis = 0 this
  /// is a pure exponent shift, which raises a truncation order by one.
  TruncatedSeries mul_coordinate(std::size_t axis) const {
    const bool on_axis = Traits::is_zero(center_[axis]);
    Order order = order_;
    if (order && on_axis) order = *order + 1;
    TruncatedSeries r(center_, order);
    for (const auto& [nu, c] : terms_) {
      MultiIndex up = nu;
      up[axis] += 1;
      r.add_term(up, c);
      if (!on_axis) r.add_term(nu, c * center_[axis]);
    }
    return r;
  }

  /// Value of the stored terms at z (truncated series evaluate their
  /// polynomial truncation).
  Complex evaluate(std::span<const Complex> z) const {
    if (z.size() != dim()) throw Error(ErrorCode::IncompatibleOperands, "evaluation point has wrong dimension");
    std::vector<std::vector<Complex>> powers(dim());
    for (std::size_t k = 0; k < dim(); ++k) powers[k].push_back(Complex{1.0, 0.0});
    Complex sum{};
    for (const auto& [nu, c] : terms_) {
      Complex term = Traits::to_complex(c);
      for (std::size_t k = 0; k < dim(); ++k) {
        auto& pk = powers[k];
        while (pk.size() <= nu[k]) pk.push_back(pk.back() * (z[k] - Traits::to_complex(center_[k])));
        term *= pk[nu[k]];
      }
      sum += term;
    }
    return sum;
  }

  S evaluate_exact(std::span<const S> z) const {
    if (z.size() != dim()) throw Error(ErrorCode::IncompatibleOperands, "evaluation point has wrong dimension");
    S sum = Traits::zero();
    for (const auto& [nu, c] : terms_) {
      S term = c;
      for (std::size_t k = 0; k < dim(); ++k) {
        S base = z[k] - center_[k];
        for (std::uint32_t e = 0; e < nu[k]; ++e) term *= base;
      }
      sum += term;
    }
    return sum;
  }

  /// Re-expands an exact polynomial around a new center.
  TruncatedSeries recenter(const Point& new_center) const {
    if (!is_exact_polynomial())
      throw Error(ErrorCode::RequiresExactPolynomial, "recenter needs an exact polynomial, got a truncated series");
    if (new_center.size() != dim()) throw Error(ErrorCode::IncompatibleOperands, "center has wrong dimension");
    TruncatedSeries r(new_center);
    std::vector<S> shift(dim());
    for (std::size_t k = 0; k < dim(); ++k) shift[k] = new_center[k] - center_[k];

    for (const auto& [nu, c] : terms_) {
      // (z_k - b_k)^e = sum_m C(e,m) (z_k - b'_k)^m (b'_k - b_k)^(e-m)
      std::vector<std::pair<MultiIndex, S>> partial{{MultiIndex(dim()), c}};
      for (std::size_t k = 0; k < dim(); ++k) {
        const std::uint32_t e = nu[k];
        if (e == 0) continue;
        std::vector<S> shift_pow(e + 1, Traits::one());
        for (std::uint32_t m = 1; m <= e; ++m) shift_pow[m] = shift_pow[m - 1] * shift[k];
        std::vector<std::pair<MultiIndex, S>> next;
        long binom = 1;
        for (std::uint32_t m = 0; m <= e; ++m) {
          S factor = Traits::from_int(binom) * shift_pow[e - m];
          if (!Traits::is_zero(factor)) {
            for (const auto& [mi, pc] : partial) {
              MultiIndex up = mi;
              up[k] = m;
              next.emplace_back(up, pc * factor);
            }
          }
          binom = binom * static_cast<long>(e - m) / static_cast<long>(m + 1);
        }
        partial = std::move(next);
      }
      for (const auto& [mi, pc] : partial) r.add_term(mi, pc);
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.center_ == b.center_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Coefficientwise comparison within eps (absolute); ignores truncation order.
  friend bool approx_equal(const TruncatedSeries& a, const TruncatedSeries& b, double eps) {
    if (a.dim() != b.dim()) return false;
    const TruncatedSeries d = a - b;
    return d.max_magnitude() <= eps;
  }

 private:
  static Order combined_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::IncompatibleOperands, "series dimensions differ");
    if (a.center_ != b.center_) throw Error(ErrorCode::IncompatibleOperands, "series centers differ");
    if (!a.order_) return b.order_;
    if (!b.order_) return a.order_;
    return std::min(*a.order_, *b.order_);
  }

  Point center_;
  Order order_;
  TermMap terms_;
};

using ExactSeries = TruncatedSeries<GaussianRational>;
using FloatSeries = TruncatedSeries<Complex>;

/// Exact-to-floating conversion (rounds each coefficient once).
FloatSeries to_floating(const ExactSeries& f);
/// Floating-to-exact conversion (exact binary value of every double).
ExactSeries to_exact(const FloatSeries& f);

}  // namespace okakit

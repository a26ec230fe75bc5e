#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "okakit/error.hpp"
#include "okakit/series.hpp"
#include "okakit/subspace.hpp"

namespace okakit {

template <Coefficient S>
struct AxisSplit {
  TruncatedSeries<S> quotient;   // h, with f = h * z_k + g
  TruncatedSeries<S> remainder;  // g, free of z_k
};

/// Cofactors h_1..h_q and the remainder g_q of f = sum_j h_j z_j + g_q.
template <Coefficient S>
struct CofactorVector {
  std::vector<TruncatedSeries<S>> cofactors;
  TruncatedSeries<S> remainder;
};

namespace detail {

template <Coefficient S>
void require_center_on_axis(const TruncatedSeries<S>& f, std::size_t axis) {
  if (axis >= f.dim()) throw Error(ErrorCode::InvalidArity, "axis out of range");
  if (!ScalarTraits<S>::is_zero(f.center()[axis]))
    throw Error(ErrorCode::CenterNotOnAxis, "center coordinate " + std::to_string(axis + 1) + " is not zero");
}

}  // namespace detail

/// f = h * z_k + g: terms with positive z_k exponent go to h (divided once by
/// z_k), the rest to g. For a truncated f of order d, h is known to order d-1.
template <Coefficient S>
AxisSplit<S> split_variable(const TruncatedSeries<S>& f, std::size_t axis) {
  detail::require_center_on_axis(f, axis);
  typename TruncatedSeries<S>::Order h_order;
  if (f.order()) h_order = *f.order() > 0 ? *f.order() - 1 : 0;
  AxisSplit<S> out{TruncatedSeries<S>(f.center(), h_order), TruncatedSeries<S>(f.center(), f.order())};
  for (const auto& [nu, c] : f.terms()) {
    if (nu[axis] > 0) {
      MultiIndex down = nu;
      down[axis] -= 1;
      out.quotient.add_term(down, c);
    } else {
      out.remainder.add_term(nu, c);
    }
  }
  return out;
}

/// Iterated division along z_1, ..., z_q in that order.
template <Coefficient S>
CofactorVector<S> ideal_cofactors(const TruncatedSeries<S>& f, const CoordinateSubspace& subspace) {
  if (subspace.ambient_dim() != f.dim())
    throw Error(ErrorCode::IncompatibleOperands, "subspace and series dimensions differ");
  for (std::size_t k = 0; k < subspace.codim(); ++k) detail::require_center_on_axis(f, k);
  CofactorVector<S> out;
  out.remainder = f;
  for (std::size_t k = 0; k < subspace.codim(); ++k) {
    auto split = split_variable(out.remainder, k);
    out.cofactors.push_back(std::move(split.quotient));
    out.remainder = std::move(split.remainder);
  }
  return out;
}

/// sum_j h_j z_j + g_q.
template <Coefficient S>
TruncatedSeries<S> recombine(const CofactorVector<S>& cv) {
  TruncatedSeries<S> sum = cv.remainder;
  for (std::size_t j = 0; j < cv.cofactors.size(); ++j) sum = sum + cv.cofactors[j].mul_coordinate(j);
  return sum;
}

/// Remainder test. Exact series must have a zero remainder; floating series
/// pass when every remainder coefficient is within epsilon relative to the
/// largest coefficient of the input.
template <Coefficient S>
bool is_member(const TruncatedSeries<S>& f, const CoordinateSubspace& subspace, double epsilon = 1e-12) {
  const auto cv = ideal_cofactors(f, subspace);
  if constexpr (ScalarTraits<S>::tag == BackendTag::Exact) {
    (void)epsilon;
    return cv.remainder.is_zero();
  } else {
    return cv.remainder.max_magnitude() <= epsilon * f.max_magnitude();
  }
}

}  // namespace okakit

#pragma once

#include <cmath>
#include <complex>
#include <concepts>

#include "okakit/gaussian_rational.hpp"

namespace okakit {

using Complex = std::complex<double>;

enum class BackendTag { Exact, Floating };

/// Coefficient backend. The exact backend never rounds and compares with
/// epsilon 0; the floating backend compares coefficients up to epsilon.
struct Backend {
  BackendTag tag = BackendTag::Exact;
  double epsilon = 0.0;

  static Backend exact() { return {BackendTag::Exact, 0.0}; }
  static Backend floating(double eps = 1e-12) { return {BackendTag::Floating, eps}; }
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr BackendTag tag = BackendTag::Exact;
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational from_int(long v) { return GaussianRational(v); }
  static GaussianRational from_complex(Complex z) { return GaussianRational::from_complex(z); }
  static bool is_zero(const GaussianRational& s) { return s.is_zero(); }
  static double magnitude(const GaussianRational& s) { return std::abs(s.to_complex()); }
  static Complex to_complex(const GaussianRational& s) { return s.to_complex(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr BackendTag tag = BackendTag::Floating;
  static Complex zero() { return {}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex from_complex(Complex z) { return z; }
  static bool is_zero(const Complex& s) { return s == Complex{}; }
  static double magnitude(const Complex& s) { return std::abs(s); }
  static Complex to_complex(const Complex& s) { return s; }
};

template <class S>
concept Coefficient = requires { ScalarTraits<S>::tag; };

}  // namespace okakit

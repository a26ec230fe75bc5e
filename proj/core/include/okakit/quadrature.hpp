#pragma once

#include <optional>
#include <vector>

#include "okakit/evaluable.hpp"
#include "okakit/scalar.hpp"

namespace okakit {

/// Composite Gauss-Legendre settings for integrals along straight segments.
struct QuadratureSpec {
  int panels = 16;            // initial uniform panels per segment
  int nodes = 16;             // Gauss-Legendre points per panel
  double tolerance = 1e-13;   // target for the kernel and density error estimates
  int max_depth = 20;         // bisections allowed below an initial panel
  bool adaptive = true;       // false: keep the initial uniform panels

  /// Throws InvalidProblem on non-positive counts or tolerance.
  void validate() const;
};

struct GaussLegendreRule {
  std::vector<double> x;  // nodes on [-1, 1], ascending
  std::vector<double> w;
};

/// Rule with n points; computed by Newton iteration on P_n and cached.
const GaussLegendreRule& gauss_legendre(int n);

/// Node zeta_k, complex weight w_k (including d zeta) and density phi(zeta_k).
struct QuadratureNode {
  Complex point;
  Complex weight;
  Complex density;
};

/// Where the Cauchy kernel 1/(zeta - z) will be evaluated: either at one
/// known point, or anywhere at distance >= min_distance from the segment.
struct KernelGuard {
  std::optional<Complex> point;
  double min_distance = 0.0;
};

/// A-priori relative error of an n-point Gauss-Legendre panel [a, b] applied
/// to the Cauchy kernel: rho^(-2n), rho the Bernstein-ellipse parameter of the
/// kernel singularity.
double kernel_error_estimate(Complex a, Complex b, const KernelGuard& guard, int nodes);

/// Panels on [a, b]: bisected while the kernel estimate exceeds the
/// tolerance, then while the density integral on a panel differs from the
/// sum over its halves by more than tolerance * max(1, sum |w phi|).
/// Throws QuadratureFailure when max_depth is exhausted.
std::vector<QuadratureNode> discretize_segment(Complex a, Complex b, const Function1D& density,
                                               const KernelGuard& guard, const QuadratureSpec& spec);

/// (1 / 2 pi i) sum_k w_k phi_k / (zeta_k - z).
Complex cauchy_sum(const std::vector<QuadratureNode>& nodes, Complex z);

/// Fixed composite rule for a straight segment integral of f(zeta) d zeta.
Complex line_integral(const Function1D& f, Complex a, Complex b, int panels, int nodes);

/// Euclidean distance from z to the segment [a, b].
double distance_to_segment(Complex z, Complex a, Complex b);

}  // namespace okakit

#include "okakit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "okakit/error.hpp"

namespace okakit {

void QuadratureSpec::validate() const {
  if (panels < 1) throw Error(ErrorCode::InvalidProblem, "quadrature needs at least one panel");
  if (nodes < 1) throw Error(ErrorCode::InvalidProblem, "quadrature needs at least one node per panel");
  if (!(tolerance > 0)) throw Error(ErrorCode::InvalidProblem, "quadrature tolerance must be positive");
  if (max_depth < 0) throw Error(ErrorCode::InvalidProblem, "max_depth must be non-negative");
}

const GaussLegendreRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (slot) return *slot;

  auto rule = std::make_unique<GaussLegendreRule>();
  rule->x.resize(n);
  rule->w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule->x[i] = -x;
    rule->x[n - 1 - i] = x;
    rule->w[i] = w;
    rule->w[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule->x[n / 2] = 0.0;
  slot = std::move(rule);
  return *slot;
}

double distance_to_segment(Complex z, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

double kernel_error_estimate(Complex a, Complex b, const KernelGuard& guard, int nodes) {
  const Complex half = 0.5 * (b - a);
  double rho = 0.0;
  if (guard.point) {
    const Complex w = (*guard.point - 0.5 * (a + b)) / half;
    const Complex s = std::sqrt(w - 1.0) * std::sqrt(w + 1.0);
    rho = std::max(std::abs(w + s), std::abs(w - s));
  } else {
    const double y = guard.min_distance / std::abs(half);
    rho = y + std::sqrt(y * y + 1.0);
  }
  if (rho <= 1.0) return std::numeric_limits<double>::infinity();
  return std::pow(rho, -2.0 * nodes);
}

namespace {

struct PanelBuilder {
  const Function1D& density;
  const KernelGuard& guard;
  const QuadratureSpec& spec;
  const GaussLegendreRule& rule;
  std::vector<QuadratureNode>& out;

  std::vector<QuadratureNode> evaluate(Complex a, Complex b) const {
    const Complex half = 0.5 * (b - a);
    const Complex mid = 0.5 * (a + b);
    std::vector<QuadratureNode> nodes(rule.x.size());
    for (std::size_t k = 0; k < rule.x.size(); ++k) {
      const Complex p = mid + rule.x[k] * half;
      nodes[k] = {p, rule.w[k] * half, density(p)};
    }
    return nodes;
  }

  static Complex integral(const std::vector<QuadratureNode>& nodes, double* abs_sum = nullptr) {
    Complex s{};
    double m = 0.0;
    for (const auto& n : nodes) {
      s += n.weight * n.density;
      m += std::abs(n.weight * n.density);
    }
    if (abs_sum) *abs_sum = m;
    return s;
  }

  void kernel_refine(Complex a, Complex b, int depth) {
    if (kernel_error_estimate(a, b, guard, spec.nodes) > spec.tolerance) {
      if (depth >= spec.max_depth)
        throw Error(ErrorCode::QuadratureFailure, "kernel refinement did not converge within max_depth");
      const Complex m = 0.5 * (a + b);
      kernel_refine(a, m, depth + 1);
      kernel_refine(m, b, depth + 1);
      return;
    }
    density_refine(a, b, depth, evaluate(a, b));
  }

  void density_refine(Complex a, Complex b, int depth, std::vector<QuadratureNode> whole) {
    const Complex m = 0.5 * (a + b);
    auto left = evaluate(a, m);
    auto right = evaluate(m, b);
    double scale = 0.0;
    const Complex coarse = integral(whole);
    const Complex fine = integral(left, &scale) + integral(right);
    if (std::abs(coarse - fine) <= spec.tolerance * std::max(1.0, scale)) {
      out.insert(out.end(), whole.begin(), whole.end());
      return;
    }
    if (depth >= spec.max_depth)
      throw Error(ErrorCode::QuadratureFailure, "density refinement did not converge within max_depth");
    density_refine(a, m, depth + 1, std::move(left));
    density_refine(m, b, depth + 1, std::move(right));
  }
};

}  // namespace

std::vector<QuadratureNode> discretize_segment(Complex a, Complex b, const Function1D& density,
                                               const KernelGuard& guard, const QuadratureSpec& spec) {
  spec.validate();
  const auto& rule = gauss_legendre(spec.nodes);
  std::vector<QuadratureNode> out;
  PanelBuilder builder{density, guard, spec, rule, out};
  const Complex step = (b - a) / static_cast<double>(spec.panels);
  for (int p = 0; p < spec.panels; ++p) {
    const Complex pa = a + static_cast<double>(p) * step;
    const Complex pb = (p + 1 == spec.panels) ? b : a + static_cast<double>(p + 1) * step;
    if (spec.adaptive) {
      builder.kernel_refine(pa, pb, 0);
    } else {
      auto nodes = builder.evaluate(pa, pb);
      out.insert(out.end(), nodes.begin(), nodes.end());
    }
  }
  return out;
}

Complex cauchy_sum(const std::vector<QuadratureNode>& nodes, Complex z) {
  double sr = 0.0, si = 0.0;
  for (const auto& n : nodes) {
    const double ar = n.weight.real() * n.density.real() - n.weight.imag() * n.density.imag();
    const double ai = n.weight.real() * n.density.imag() + n.weight.imag() * n.density.real();
    const double dr = n.point.real() - z.real(), di = n.point.imag() - z.imag();
    const double inv = 1.0 / (dr * dr + di * di);
    sr += (ar * dr + ai * di) * inv;
    si += (ai * dr - ar * di) * inv;
  }
  // Division by 2 pi i.
  return Complex(si, -sr) / (2.0 * std::numbers::pi);
}

Complex line_integral(const Function1D& f, Complex a, Complex b, int panels, int nodes) {
  const auto& rule = gauss_legendre(nodes);
  const Complex step = (b - a) / static_cast<double>(panels);
  Complex sum{};
  for (int p = 0; p < panels; ++p) {
    const Complex mid = a + (p + 0.5) * step;
    const Complex half = 0.5 * step;
    Complex panel{};
    for (std::size_t k = 0; k < rule.x.size(); ++k) panel += rule.w[k] * f(mid + rule.x[k] * half);
    sum += panel * half;
  }
  return sum;
}

}  // namespace okakit

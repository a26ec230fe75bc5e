#pragma once

// Seeded random instances shared by the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "okakit/chi_merge.hpp"
#include "okakit/cousin.hpp"
#include "okakit/series.hpp"
#include "okakit/syzygy.hpp"

namespace okakit::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline GaussianRational random_gaussian_rational(Rng& rng, long numerator = 20, long denominator = 9) {
  return {mpq_class(uniform_int(rng, -numerator, numerator), uniform_int(rng, 1, denominator)),
          mpq_class(uniform_int(rng, -numerator, numerator), uniform_int(rng, 1, denominator))};
}

inline MultiIndex random_exponent(Rng& rng, std::size_t dim, unsigned max_degree) {
  MultiIndex nu(dim);
  unsigned budget = static_cast<unsigned>(uniform_int(rng, 0, max_degree));
  std::vector<std::size_t> axes(dim);
  for (std::size_t k = 0; k < dim; ++k) axes[k] = k;
  std::shuffle(axes.begin(), axes.end(), rng);
  for (std::size_t k : axes) {
    const auto e = static_cast<unsigned>(uniform_int(rng, 0, budget));
    nu[k] = e;
    budget -= e;
  }
  return nu;
}

/// Sparse polynomial around the origin with up to `terms` monomials.
inline ExactSeries random_polynomial(Rng& rng, std::size_t dim, unsigned max_degree, int terms) {
  ExactSeries f(dim);
  for (int t = 0; t < terms; ++t) f.add_term(random_exponent(rng, dim, max_degree), random_gaussian_rational(rng));
  return f;
}

inline FloatSeries random_float_polynomial(Rng& rng, std::size_t dim, unsigned max_degree, int terms) {
  FloatSeries f(dim);
  for (int t = 0; t < terms; ++t)
    f.add_term(random_exponent(rng, dim, max_degree), Complex{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)});
  return f;
}

/// A relation among z_1..z_p built as a random combination of the T_ij.
inline SyzygyVector<GaussianRational> random_relation(Rng& rng, std::size_t p, std::size_t dim, unsigned degree) {
  PairCoefficients<GaussianRational> coeffs;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (uniform_int(rng, 0, 3) > 0) coeffs[{i, j}] = random_polynomial(rng, dim, degree, 4);
  return recombine_trivial(coeffs, p, ExactSeries::Point(dim));
}

/// A cuboid with a seam and margin, parameters z' drawn from small boxes.
inline SplitGeometry random_geometry(Rng& rng, std::size_t dim) {
  std::vector<Interval> re, im;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    const double c = uniform(rng, -0.5, 0.5);
    re.push_back({c - 0.3, c + 0.3});
    im.push_back({-0.2, 0.2});
  }
  const double lo = uniform(rng, -2.0, -0.5), hi = uniform(rng, 0.5, 2.0);
  const double height = uniform(rng, 0.3, 1.5), center = uniform(rng, -0.5, 0.5);
  re.push_back({lo, hi});
  im.push_back({center - height, center + height});
  const double seam = uniform(rng, lo + 0.3 * (hi - lo), hi - 0.3 * (hi - lo));
  const double margin = uniform(rng, 0.05, 0.25);
  return {Cuboid(re, im), seam, margin};
}

/// Mittag-Leffler instance on three slabs of [-1.5, 1.5] x [-1, 1] with 1-3
/// simple poles per slab and residues in [-2, 2]^2.
inline ChiProblem random_mittag_leffler(Rng& rng) {
  ChiProblem p;
  p.kind = ProblemKind::Cousin1;
  const double breaks[] = {-0.5, 0.5};
  p.partition = make_partition(Cuboid({{-1.5, 1.5}}, {{-1.0, 1.0}}), breaks);
  const double delta = p.seam_margin();
  for (std::size_t a = 0; a < 3; ++a) {
    const Interval re = p.partition.slab(a).re(0);
    PrincipalPartData data;
    const long count = uniform_int(rng, 1, 3);
    std::vector<Complex> placed;
    while (static_cast<long>(placed.size()) < count) {
      const Complex pole{uniform(rng, re.lo + 3 * delta, re.hi - 3 * delta), uniform(rng, -0.8, 0.8)};
      const bool separated = std::all_of(placed.begin(), placed.end(), [&](Complex q) { return std::abs(q - pole) > 0.1; });
      if (!separated) continue;
      placed.push_back(pole);
      data.terms.push_back(
          {1, Expr::constant(Complex{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)}), Expr::constant(pole)});
    }
    p.principal_parts.push_back(std::move(data));
  }
  return p;
}

inline Expr polynomial_expr(const ExactSeries& f) {
  std::vector<Expr> terms{Expr::constant(GaussianRational(0))};
  for (const auto& [nu, c] : f.terms()) {
    std::vector<Expr> factors{Expr::constant(c)};
    for (std::size_t k = 0; k < f.dim(); ++k)
      if (nu[k] > 0) factors.push_back(Expr::pow(Expr::var(k), nu[k]));
    terms.push_back(Expr::mul(std::move(factors)));
  }
  return Expr::add(std::move(terms));
}

/// Extension instance in C^2 with S = {z_1 = 0}: target g(z_2) of degree <= 4
/// and per-slab perturbations z_1 * (random polynomial).
inline ChiProblem random_extension(Rng& rng, std::size_t slabs = 3) {
  ChiProblem p;
  p.kind = ProblemKind::Extension;
  std::vector<double> breaks;
  for (std::size_t a = 1; a < slabs; ++a) breaks.push_back(-1.0 + 2.0 * static_cast<double>(a) / slabs);
  p.partition = make_partition(Cuboid({{-0.5, 0.5}, {-1.0, 1.0}}, {{-0.5, 0.5}, {-0.6, 0.6}}), breaks);
  p.subspace = CoordinateSubspace(2, 1);
  ExactSeries g(2);
  const long degree = uniform_int(rng, 0, 4);
  for (long e = 0; e <= degree; ++e) g.add_term(MultiIndex(std::vector<std::uint32_t>{0, static_cast<std::uint32_t>(e)}), random_gaussian_rational(rng, 4, 4));
  p.target = polynomial_expr(g);
  for (std::size_t a = 0; a < slabs; ++a) {
    const ExactSeries h = random_polynomial(rng, 2, 3, 4);
    p.perturbations.push_back(polynomial_expr(h.mul_coordinate(0)));
  }
  return p;
}

}  // namespace okakit::testing

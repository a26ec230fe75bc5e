#include <random>

#include "okakit/chi_merge.hpp"
#include "okakit/cli/cli.hpp"
#include "okakit/cousin.hpp"
#include "okakit/division.hpp"
#include "okakit/syzygy.hpp"

namespace okakit::cli {

namespace {

GaussianRational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

ExactSeries random_polynomial(std::mt19937_64& rng, std::size_t dim, unsigned degree, int terms) {
  std::uniform_int_distribution<unsigned> exp(0, degree);
  ExactSeries f(dim);
  for (int t = 0; t < terms; ++t) {
    MultiIndex nu(dim);
    unsigned budget = exp(rng);
    for (std::size_t k = 0; k < dim && budget > 0; ++k) {
      std::uniform_int_distribution<unsigned> part(0, budget);
      nu[k] = part(rng);
      budget -= nu[k];
    }
    f.add_term(nu, small_rational(rng));
  }
  return f;
}

}  // namespace

json selftest(std::uint64_t seed, std::optional<double> tolerance) {
  std::mt19937_64 rng(seed);
  VerificationReport report;
  const double tol = tolerance.value_or(1e-8);

  bool division_ok = true;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const ExactSeries f = random_polynomial(rng, n, 6, 8);
    const CoordinateSubspace s(n, 1 + rng() % n);
    const auto cv = ideal_cofactors(f, s);
    division_ok = division_ok && recombine(cv) == f;
  }
  report.add_flag("division_recombination", division_ok);

  bool syzygy_ok = true;
  for (int i = 0; i < 20; ++i) {
    const std::size_t p = 2 + rng() % 2;
    PairCoefficients<GaussianRational> coeffs;
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a + 1; b < p; ++b) coeffs[{a, b}] = random_polynomial(rng, p, 3, 3);
    const auto v = recombine_trivial(coeffs, p, ExactSeries::Point(p));
    const auto dec = decompose_relation(v);
    const auto back = recombine_trivial(dec.coefficients, p, ExactSeries::Point(p));
    for (std::size_t k = 0; k < p; ++k) syzygy_ok = syzygy_ok && back[k] == v[k];
  }
  report.add_flag("syzygy_round_trip", syzygy_ok);

  {
    const ExactSeries f = random_polynomial(rng, 1, 3, 4);
    const Evaluable phi = Evaluable::polynomial(f);
    const SplitGeometry geometry{Cuboid({{-1.0, 1.0}}, {{-1.0, 1.0}}), 0.1, 0.2};
    const CousinPair pair = cousin_split(phi, geometry);
    double worst = 0.0;
    const Cuboid overlap = geometry.overlap();
    for (const auto& u : halton_points(64, 2)) {
      const Complex z{overlap.re(0).lo + u[0] * overlap.re(0).width(), overlap.im(0).lo + u[1] * overlap.im(0).width()};
      worst = std::max(worst, std::abs(pair.left({z}) - pair.right({z}) - phi({z})));
    }
    report.add("cousin_jump_residual", worst, tol);
  }

  {
    const Cuboid box({{-1.0, 1.0}}, {{-1.0, 1.0}});
    const Evaluable square(1, [](std::span<const Complex> z) { return z[0] * z[0]; });
    const Evaluable conjugate(1, [](std::span<const Complex> z) { return std::conj(z[0]); });
    report.add("morera_entire", morera_residual(square, box, 4), 1e-10);
    report.add_flag("morera_detects_conjugate", morera_residual(conjugate, box, 4) >= 1e-3);
  }

  {
    ChiProblem problem;
    problem.kind = ProblemKind::Cousin1;
    const double breaks[] = {-1.0 / 3.0, 1.0 / 3.0};
    problem.partition = make_partition(Cuboid({{-1.0, 1.0}}, {{-0.5, 0.5}}), breaks);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (std::size_t a = 0; a < 3; ++a) {
      const Interval re = problem.partition.slab(a).re(0);
      const Complex p{re.mid() + 0.2 * re.width() * unit(rng), 0.3 * unit(rng)};
      problem.principal_parts.push_back(
          {{{1, Expr::constant(Complex{2.0 * unit(rng), 2.0 * unit(rng)}), Expr::constant(p)}}});
    }
    for (const auto& s : solve_chain(problem))
      for (const auto& c : s.report.checks) report.checks.push_back({"cousin1." + c.name, c.value, c.threshold, c.passed});
  }

  {
    ChiProblem problem;
    problem.kind = ProblemKind::Extension;
    const double breaks[] = {0.0};
    problem.partition = make_partition(Cuboid({{-0.5, 0.5}, {-1.0, 1.0}}, {{-0.5, 0.5}, {-0.5, 0.5}}), breaks);
    problem.subspace = CoordinateSubspace(2, 1);
    problem.target = Expr::add({Expr::pow(Expr::var(1), 2), Expr::constant(Complex{1.0, 0.5})});
    problem.perturbations = {Expr::mul({Expr::var(0), Expr::var(1)}), Expr::mul({Expr::var(0), Expr::constant(Complex{-2.0, 0.0})})};
    for (const auto& s : solve_chain(problem))
      for (const auto& c : s.report.checks) report.checks.push_back({"jokuiko." + c.name, c.value, c.threshold, c.passed});
  }

  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"passed", c.passed}});
  return {{"result", {{"checks_run", report.checks.size()}, {"passed", report.passed()}}}, {"checks", checks}};
}

}  // namespace okakit::cli

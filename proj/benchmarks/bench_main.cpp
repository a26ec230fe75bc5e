#include <benchmark/benchmark.h>

#include <random>

#include "okakit/chi_merge.hpp"
#include "okakit/cousin.hpp"
#include "okakit/division.hpp"
#include "okakit/syzygy.hpp"

namespace {

using namespace okakit;

ExactSeries dense_polynomial(std::size_t dim, unsigned degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  ExactSeries f(dim);
  for (unsigned t = 0; t < 4 * degree; ++t) {
    MultiIndex nu(dim);
    unsigned budget = static_cast<unsigned>(rng() % (degree + 1));
    for (std::size_t k = 0; k < dim && budget > 0; ++k) {
      nu[k] = static_cast<std::uint32_t>(rng() % (budget + 1));
      budget -= nu[k];
    }
    f.add_term(nu, {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))});
  }
  return f;
}

void BM_SeriesMultiply(benchmark::State& state) {
  const auto degree = static_cast<unsigned>(state.range(0));
  const ExactSeries f = dense_polynomial(3, degree, 1), g = dense_polynomial(3, degree, 2);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SeriesMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_IdealCofactors(benchmark::State& state) {
  const ExactSeries f = dense_polynomial(4, static_cast<unsigned>(state.range(0)), 3);
  const CoordinateSubspace s(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_cofactors(f, s));
}
BENCHMARK(BM_IdealCofactors)->Arg(6)->Arg(12);

void BM_DecomposeRelation(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  PairCoefficients<GaussianRational> coeffs;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) coeffs[{i, j}] = dense_polynomial(p, 4, 10 * i + j);
  const auto v = recombine_trivial(coeffs, p, ExactSeries::Point(p));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_relation(v));
}
BENCHMARK(BM_DecomposeRelation)->Arg(2)->Arg(4);

void BM_CousinSplit(benchmark::State& state) {
  const SplitGeometry g{Cuboid({{-1.0, 1.0}}, {{-1.0, 1.0}}), 0.0, 0.1};
  const Evaluable phi = Evaluable::polynomial(to_floating(dense_polynomial(1, 5, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(cousin_split(phi, g));
}
BENCHMARK(BM_CousinSplit)->Unit(benchmark::kMillisecond);

void BM_CousinEvaluate(benchmark::State& state) {
  const SplitGeometry g{Cuboid({{-1.0, 1.0}}, {{-1.0, 1.0}}), 0.0, 0.1};
  const CousinPair pair = cousin_split(Evaluable::polynomial(to_floating(dense_polynomial(1, 5, 4))), g);
  const Complex z[] = {{0.03, 0.2}};
  for (auto _ : state) benchmark::DoNotOptimize(pair.left(z));
}
BENCHMARK(BM_CousinEvaluate);

void BM_SolveMittagLeffler(benchmark::State& state) {
  ChiProblem p;
  const double breaks[] = {-0.5, 0.5};
  p.partition = make_partition(Cuboid({{-1.5, 1.5}}, {{-1.0, 1.0}}), breaks);
  const Complex poles[] = {{-1.0, 0.2}, {0.1, -0.3}, {0.9, 0.5}};
  for (Complex pole : poles) p.principal_parts.push_back({{{1, Expr::constant(Complex{1.0, 0.5}), Expr::constant(pole)}}});
  for (auto _ : state) benchmark::DoNotOptimize(solve_chain(p));
}
BENCHMARK(BM_SolveMittagLeffler)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "okakit/chi_merge.hpp"
#include "okakit/error.hpp"

using namespace okakit;
using okakit::testing::Rng;

namespace {

Expr c(double re, double im = 0.0) { return Expr::constant(Complex{re, im}); }

ChiProblem cousin1_problem(std::vector<double> breaks, std::vector<PrincipalPartData> data) {
  ChiProblem p;
  p.kind = ProblemKind::Cousin1;
  p.partition = make_partition(Cuboid({{-1.0, 1.0}}, {{-0.5, 0.5}}), breaks);
  p.principal_parts = std::move(data);
  return p;
}

PrincipalPartData simple_pole(Complex at, Complex residue) { return {{{1, Expr::constant(residue), Expr::constant(at)}}}; }

const CheckResult& check(const VerificationReport& r, const std::string& name) {
  for (const auto& x : r.checks)
    if (x.name == name) return x;
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("local solutions") {
  const ChiProblem p = cousin1_problem({0.0}, {simple_pole({-0.6, 0.0}, {1, 0}), simple_pole({0.5, 0.1}, {2, 0})});
  const Evaluable f = local_solution(p, 1);
  CHECK(std::abs(f({Complex{0.2, 0.0}}) - 2.0 / (Complex{0.2, 0.0} - Complex{0.5, 0.1})) < 1e-15);

  ChiProblem e;
  e.kind = ProblemKind::Extension;
  const double breaks[] = {0.0};
  e.partition = make_partition(Cuboid({{-0.5, 0.5}, {-1.0, 1.0}}, {{-0.5, 0.5}, {-0.5, 0.5}}), breaks);
  e.subspace = CoordinateSubspace(2, 1);
  e.target = Expr::constant(Complex{1.0, 0.0});
  CHECK(local_solution(e, 0)({Complex{0.3, 0.1}, Complex{-0.2, 0.4}}) == Complex{1.0, 0.0});
  e.target = Expr::pow(Expr::var(1), 2);
  const Complex z[] = {{0.0, 0.0}, {0.3, -0.2}};
  CHECK(std::abs(local_solution(e, 1)(z) - z[1] * z[1]) < 1e-15);
}

TEST_CASE("poles near a face are rejected") {
  // delta = 5% of the slab width 1 = 0.05; a pole at 0.03 sits inside the margin.
  const ChiProblem p = cousin1_problem({0.0}, {{}, simple_pole({0.03, 0.0}, {1, 0})});
  try {
    (void)local_solution(p, 1);
    FAIL("expected PoleTooCloseToSeam");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleTooCloseToSeam);
  }
}

TEST_CASE("seam differences") {
  const Cuboid overlap({{-0.1, 0.1}}, {{-0.5, 0.5}});
  const Evaluable a(1, [](std::span<const Complex> z) { return 1.0 / (z[0] - 0.5) + std::exp(z[0]); });
  CHECK(std::abs(seam_difference(a, a, overlap, 1e-8, 4)({Complex{0.05, 0.2}})) == 0.0);

  // Identical poles cancel: the difference is the closed-form polynomial z^2.
  const Evaluable b(1, [](std::span<const Complex> z) { return 1.0 / (z[0] - 0.5) + std::exp(z[0]) + z[0] * z[0]; });
  const Complex at{0.02, -0.3};
  CHECK(std::abs(seam_difference(a, b, overlap, 1e-8, 4)({at}) - at * at) < 1e-14);

  // Different residues at a pole on the overlap.
  const Evaluable r1(1, [](std::span<const Complex> z) { return 1.0 / (z[0] - Complex{0.0, 0.05}); });
  const Evaluable r2(1, [](std::span<const Complex> z) { return 2.0 / (z[0] - Complex{0.0, 0.05}); });
  try {
    (void)seam_difference(r1, r2, overlap, 1e-8, 5);
    FAIL("expected NotHolomorphicDifference");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHolomorphicDifference);
  }
}

TEST_CASE("ideal witnesses") {
  const CoordinateSubspace s1(2, 1);
  const Expr z1 = Expr::var(0), z2 = Expr::var(1);
  IdealWitness w = ideal_witness(z1.to_polynomial(2), s1);
  REQUIRE(w.cofactors.size() == 1);
  CHECK(w.cofactors[0] == Expr::constant(GaussianRational(1)).to_polynomial(2));
  CHECK(w.recombination_exact);

  w = ideal_witness(Expr::mul({z1, Expr::pow(z2, 2)}).to_polynomial(2), s1);
  CHECK(w.cofactors[0] == Expr::pow(z2, 2).to_polynomial(2));

  try {
    (void)ideal_witness(Expr::add({z1, z2}).to_polynomial(2), s1);
    FAIL("expected NotInIdeal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInIdeal);
  }

  Rng rng(61);
  const CoordinateSubspace s2(3, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const ExactSeries h = okakit::testing::random_polynomial(rng, 3, 5, 5).mul_coordinate(0) +
                          okakit::testing::random_polynomial(rng, 3, 5, 5).mul_coordinate(1);
    const IdealWitness iw = ideal_witness(h, s2);
    CHECK(iw.recombination_exact);
    CHECK(iw.cofactors[0].mul_coordinate(0) + iw.cofactors[1].mul_coordinate(1) == h);
  }
}

TEST_CASE("merging equal local solutions changes nothing") {
  ChiProblem e;
  e.kind = ProblemKind::Extension;
  const double breaks[] = {0.0};
  e.partition = make_partition(Cuboid({{-0.5, 0.5}, {-1.0, 1.0}}, {{-0.5, 0.5}, {-0.5, 0.5}}), breaks);
  e.subspace = CoordinateSubspace(2, 1);
  e.target = Expr::add({Expr::var(1), c(0.5)});
  const PartialSolution m = merge_pair(local_partial(e, 0), local_partial(e, 1), e);
  const Complex z[] = {{0.1, 0.2}, {-0.01, 0.3}};
  const Complex want = z[1] + 0.5;
  CHECK(std::abs(m.branch(0, 2, e.kind)(z) - want) < 1e-13);
  CHECK(std::abs(m.branch(1, 2, e.kind)(z) - want) < 1e-13);
}

TEST_CASE("pole in the right slab only") {
  const ChiProblem p = cousin1_problem({0.0}, {{}, simple_pole({0.5, 0.0}, {1, 0})});
  const auto sols = solve_chain(p);
  REQUIRE(sols.size() == 1);
  const ChiSolution& s = sols.front();
  CHECK(s.report.passed());
  const Evaluable correction = s.global - Evaluable(1, [](std::span<const Complex> z) { return 1.0 / (z[0] - 0.5); });
  CHECK(morera_residual(correction, p.partition.slab(1), 8) <= 1e-8);
  CHECK(morera_residual(s.global, p.partition.slab(0), 8) <= 1e-8);
  CHECK(std::abs(laurent_coefficient(s.global, {}, {0.5, 0.0}, 1, 0.2) - 1.0) <= 1e-6);
}

TEST_CASE("merged extension in C^2") {
  ChiProblem e;
  e.kind = ProblemKind::Extension;
  const double breaks[] = {0.0};
  e.partition = make_partition(Cuboid({{-0.5, 0.5}, {-1.0, 1.0}}, {{-0.5, 0.5}, {-0.5, 0.5}}), breaks);
  e.subspace = CoordinateSubspace(2, 1);
  e.target = Expr::pow(Expr::var(1), 3);
  e.perturbations = {Expr::mul({Expr::var(0), Expr::var(1)}), Expr::mul({Expr::var(0), c(0.0, 3.0)})};
  const auto sols = solve_chain(e);
  REQUIRE(sols.size() == 1);
  CHECK(check(sols[0].report, "subspace_error").value <= 1e-8);
  CHECK(check(sols[0].report, "witness_recombination_exact").passed);
  CHECK(sols[0].report.passed());
}

TEST_CASE("single slab returns the local solution") {
  const ChiProblem p = cousin1_problem({}, {simple_pole({0.1, 0.2}, {0, 1})});
  const auto sols = solve_chain(p);
  REQUIRE(sols.size() == 1);
  const Complex z[] = {{-0.4, 0.3}};
  CHECK(sols[0].global(z) == local_solution(p, 0)(z));
  CHECK(sols[0].report.passed());
}

TEST_CASE("three slabs with one pole each") {
  const ChiProblem p = cousin1_problem(
      {-1.0 / 3.0, 1.0 / 3.0},
      {simple_pole({-0.7, 0.1}, {1.0, -0.5}), simple_pole({0.05, -0.2}, {-1.5, 0.3}), simple_pole({0.6, 0.25}, {0.2, 1.8})});
  const auto sols = solve_chain(p);
  REQUIRE(sols.size() == 1);
  CHECK(check(sols[0].report, "principal_part_error").value <= 1e-6);
  CHECK(sols[0].report.passed());
}

TEST_CASE("chains split where the slabs are disconnected on S") {
  ChiProblem e;
  e.kind = ProblemKind::Extension;
  const double breaks[] = {-0.5, 0.0, 0.5};
  e.partition = make_partition(Cuboid({{-0.5, 0.5}, {-1.0, 1.0}}, {{-0.5, 0.5}, {-0.5, 0.5}}), breaks);
  e.subspace = CoordinateSubspace(2, 2);
  e.target = c(2.0, -1.0);
  const auto sols = solve_chain(e);
  REQUIRE(sols.size() == 3);
  CHECK(sols[0].chain == ConnectivityChain{0, 0});
  CHECK(sols[1].chain == ConnectivityChain{1, 2});
  CHECK(sols[2].chain == ConnectivityChain{3, 3});
  for (const auto& s : sols) CHECK(s.report.passed());
}

TEST_CASE("verification catches perturbed solutions") {
  const ChiProblem p = cousin1_problem({0.0}, {simple_pole({-0.5, 0.1}, {1.0, 0.0}), simple_pole({0.5, -0.1}, {0.0, 2.0})});
  const ChiSolution sol = solve_chain(p).front();
  CHECK(verify_solution(sol, p).passed());

  ChiSolution bent = sol;
  bent.global = sol.global + Evaluable(1, [](std::span<const Complex> z) { return 1e-3 * std::conj(z[0]); });
  const VerificationReport r = verify_solution(bent, p);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(check(r, "correction_morera[1]").passed);

  // Prescribing a residue 10% larger than the solved one.
  ChiProblem altered = p;
  altered.principal_parts[1] = simple_pole({0.5, -0.1}, {0.0, 2.2});
  const VerificationReport r2 = verify_solution(sol, altered);
  CHECK_FALSE(r2.passed());
  CHECK(check(r2, "principal_part_error").value == doctest::Approx(0.2).epsilon(1e-4));
}

TEST_CASE("gauge freedom and merge order (property)") {
  Rng rng(62);
  for (int trial = 0; trial < 3; ++trial) {
    const ChiProblem p = okakit::testing::random_mittag_leffler(rng);
    const ChiSolution lr = solve_chain(p, MergeOrder::LeftToRight).front();
    const ChiSolution rl = solve_chain(p, MergeOrder::RightToLeft).front();
    CHECK(lr.report.passed());
    CHECK(rl.report.passed());
    CHECK(morera_residual(lr.global - rl.global, lr.region, 8) <= 2e-8);

    ChiSolution shifted = lr;
    shifted.global = lr.global + Evaluable(1, [](std::span<const Complex> z) { return std::exp(z[0]) + 3.0 * z[0]; });
    CHECK(verify_solution(shifted, p).passed());
  }
}

TEST_CASE("problem validation") {
  ChiProblem p = cousin1_problem({0.0}, {{}});
  CHECK_THROWS_AS(p.validate(), Error);
  ChiProblem e;
  e.kind = ProblemKind::Extension;
  const double breaks[] = {0.0};
  e.partition = make_partition(Cuboid({{-0.5, 0.5}, {-1.0, 1.0}}, {{-0.5, 0.5}, {-0.5, 0.5}}), breaks);
  e.subspace = CoordinateSubspace(2, 1);
  e.target = Expr::var(0);
  CHECK_THROWS_AS(e.validate(), Error);
}

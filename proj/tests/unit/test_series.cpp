#include <doctest.h>

#include "generators.hpp"
#include "okakit/error.hpp"
#include "okakit/series.hpp"

using namespace okakit;
using okakit::testing::Rng;

namespace {

ExactSeries z(std::size_t dim, std::size_t axis) { return ExactSeries::coordinate(dim, axis); }
ExactSeries c(std::size_t dim, long v) { return ExactSeries::constant(dim, GaussianRational(v)); }

std::vector<GaussianRational> random_point(Rng& rng, std::size_t dim) {
  std::vector<GaussianRational> p;
  for (std::size_t k = 0; k < dim; ++k) p.push_back(okakit::testing::random_gaussian_rational(rng, 5, 4));
  return p;
}

}  // namespace

TEST_CASE("gaussian rationals") {
  const GaussianRational a = GaussianRational::parse("3/4", "-1/2");
  CHECK(a.real() == mpq_class(3, 4));
  CHECK(a.imag() == mpq_class(-1, 2));
  CHECK(a * a.conj() == GaussianRational(mpq_class(13, 16)));
  CHECK((a / a) == GaussianRational(1));
  CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
  CHECK(GaussianRational::from_double(0.1).real() == mpq_class(3602879701896397, mpz_class("36028797018963968")));
}

TEST_CASE("additive inverse and monomial product") {
  CHECK((z(2, 0) + (-z(2, 0))).is_zero());
  const ExactSeries p = z(2, 0) * z(2, 1);
  CHECK(p.term_count() == 1);
  CHECK(p.coefficient(MultiIndex(std::vector<std::uint32_t>{1, 1})) == GaussianRational(1));
}

TEST_CASE("truncated product keeps the minimum order") {
  const ExactSeries a = (c(1, 1) + z(1, 0)).truncated(2);
  const ExactSeries b = (c(1, 1) - z(1, 0)).truncated(2);
  const ExactSeries full = (c(1, 1) + z(1, 0)) * (c(1, 1) - z(1, 0));
  CHECK(a * b == full.truncated(2));
  CHECK((a * b).order() == 2u);
  CHECK((a * b.truncated(1)).order() == 1u);
  CHECK((a + c(1, 3)).order() == 2u);
}

TEST_CASE("operand mismatches are rejected") {
  CHECK_THROWS_AS(z(2, 0) + z(3, 0), Error);
  const ExactSeries shifted = ExactSeries::coordinate(ExactSeries::Point{GaussianRational(1), GaussianRational(0)}, 0);
  try {
    (void)(z(2, 0) * shifted);
    FAIL("expected IncompatibleOperands");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleOperands);
  }
}

TEST_CASE("canonical form never stores zeros") {
  ExactSeries f(2);
  f.add_term(MultiIndex(2), GaussianRational(0));
  CHECK(f.is_zero());
  f.add_term(MultiIndex::unit(2, 0), GaussianRational(2));
  f.add_term(MultiIndex::unit(2, 0), GaussianRational(-2));
  CHECK(f.term_count() == 0);
  CHECK(f == ExactSeries(2));
}

TEST_CASE("evaluate") {
  CHECK(ExactSeries(3).evaluate(std::vector<Complex>{{1, 2}, {3, 4}, {5, 6}}) == Complex{});
  CHECK((z(2, 0) * z(2, 1)).evaluate(std::vector<Complex>{2.0, 3.0}) == Complex{6.0, 0.0});
  const ExactSeries cube = (c(1, 1) + z(1, 0)) * (c(1, 1) + z(1, 0)) * (c(1, 1) + z(1, 0));
  CHECK(cube.evaluate(std::vector<Complex>{0.5}) == Complex{3.375, 0.0});
}

TEST_CASE("recenter") {
  const ExactSeries::Point b{GaussianRational(1), GaussianRational(0)};
  const ExactSeries lin = z(2, 0).recenter(b);
  CHECK(lin.center() == b);
  CHECK(lin.coefficient(MultiIndex::unit(2, 0)) == GaussianRational(1));
  CHECK(lin.coefficient(MultiIndex(2)) == GaussianRational(1));
  CHECK(c(2, 5).recenter(b) == ExactSeries::constant(b, GaussianRational(5)));

  const ExactSeries sq = (z(2, 0) * z(2, 0)).recenter(b);
  CHECK(sq.coefficient(MultiIndex(std::vector<std::uint32_t>{2, 0})) == GaussianRational(1));
  CHECK(sq.coefficient(MultiIndex(std::vector<std::uint32_t>{1, 0})) == GaussianRational(2));
  CHECK(sq.coefficient(MultiIndex(2)) == GaussianRational(1));
  CHECK(sq.term_count() == 3);

  try {
    (void)z(2, 0).truncated(3).recenter(b);
    FAIL("expected RequiresExactPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RequiresExactPolynomial);
  }
}

TEST_CASE("recenter is evaluation-invariant (property)") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    const ExactSeries f = okakit::testing::random_polynomial(rng, dim, 6, 6);
    const auto b = random_point(rng, dim);
    const ExactSeries g = f.recenter(b);
    for (int s = 0; s < 3; ++s) {
      const auto p = random_point(rng, dim);
      CHECK(g.evaluate_exact(p) == f.evaluate_exact(p));
    }
    CHECK(g.recenter(f.center()) == f);
  }
}

TEST_CASE("ring laws hold exactly (property)") {
  Rng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    const auto f = okakit::testing::random_polynomial(rng, dim, 8, 5);
    const auto g = okakit::testing::random_polynomial(rng, dim, 8, 5);
    const auto h = okakit::testing::random_polynomial(rng, dim, 8, 5);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK((f + g) - g == f);
    const auto p = random_point(rng, dim);
    CHECK((f * g).evaluate_exact(p) == f.evaluate_exact(p) * g.evaluate_exact(p));
  }
}

TEST_CASE("floating arithmetic agrees with pointwise evaluation (property)") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const auto f = okakit::testing::random_float_polynomial(rng, dim, 5, 6);
    const auto g = okakit::testing::random_float_polynomial(rng, dim, 5, 6);
    std::vector<Complex> p;
    for (std::size_t k = 0; k < dim; ++k) p.push_back({okakit::testing::uniform(rng, -1, 1), okakit::testing::uniform(rng, -1, 1)});
    CHECK(std::abs((f * g).evaluate(p) - f.evaluate(p) * g.evaluate(p)) < 1e-11);
    CHECK(approx_equal(to_floating(to_exact(f)), f, 0.0));
  }
}

TEST_CASE("mul_coordinate raises the order on the axis") {
  const ExactSeries f = (c(2, 1) + z(2, 1)).truncated(3);
  const ExactSeries g = f.mul_coordinate(0);
  CHECK(g.order() == 4u);
  CHECK(g == (z(2, 0) * (c(2, 1) + z(2, 1))).truncated(4));
}

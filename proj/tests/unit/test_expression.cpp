#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "okakit/error.hpp"
#include "okakit/expression.hpp"

using namespace okakit;

TEST_CASE("evaluation of the basic operators") {
  const Expr z1 = Expr::var(0), z2 = Expr::var(1);
  const Expr e = Expr::add({Expr::mul({z1, z2}), Expr::pow(z2, 2), Expr::neg(Expr::constant(Complex{1.0, 0.0}))});
  const Complex z[] = {{1.0, 2.0}, {-0.5, 0.25}};
  CHECK(std::abs(e.evaluate(z) - (z[0] * z[1] + z[1] * z[1] - 1.0)) < 1e-15);
  const Expr r = Expr::inv(Expr::add({z1, Expr::constant(Complex{-0.2, 0.0})}));
  CHECK(std::abs(r.evaluate({Complex{0.7, 0.0}}) - 2.0) < 1e-14);
  CHECK(std::abs(Expr::pow(z1, -2).evaluate({Complex{0.0, 2.0}}) - Complex{-0.25, 0.0}) < 1e-15);
}

TEST_CASE("structural queries") {
  const Expr e = Expr::mul({Expr::var(2), Expr::inv(Expr::var(0))});
  CHECK(e.arity() == 3);
  CHECK(e.involves_axis(0));
  CHECK_FALSE(e.involves_axis(1));
  CHECK_FALSE(e.is_polynomial());
  CHECK(Expr::pow(Expr::var(0), 3).is_polynomial());
  CHECK_FALSE(Expr::pow(Expr::var(0), -1).is_polynomial());
  CHECK(Expr::constant(Complex{2.0, 0.0}).arity() == 0);
}

TEST_CASE("exact expansion of polynomial trees") {
  // (z1 + z2)^2 - z1^2 = 2 z1 z2 + z2^2
  const Expr e = Expr::add({Expr::pow(Expr::add({Expr::var(0), Expr::var(1)}), 2), Expr::neg(Expr::pow(Expr::var(0), 2))});
  ExactSeries expected(2);
  expected.add_term(MultiIndex(std::vector<std::uint32_t>{1, 1}), GaussianRational(2));
  expected.add_term(MultiIndex(std::vector<std::uint32_t>{0, 2}), GaussianRational(1));
  CHECK(e.to_polynomial(2) == expected);
  try {
    (void)Expr::inv(Expr::var(0)).to_polynomial(1);
    FAIL("expected RequiresExactPolynomial");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::RequiresExactPolynomial);
  }
}

TEST_CASE("round trip through series and evaluables (property)") {
  okakit::testing::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const ExactSeries f = okakit::testing::random_polynomial(rng, n, 6, 6);
    const Expr e = okakit::testing::polynomial_expr(f);
    CHECK(e.to_polynomial(n) == f);
    const Evaluable ev = e.to_evaluable(n);
    CHECK(ev.cylinder_terms().has_value());
    std::vector<Complex> z(n);
    for (auto& c : z) c = {okakit::testing::uniform(rng, -1, 1), okakit::testing::uniform(rng, -1, 1)};
    const Complex want = e.evaluate(z);
    CHECK(std::abs(ev(z) - want) <= 1e-12 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("non-polynomial trees in the last variable keep a cylinder form") {
  const Expr e = Expr::inv(Expr::add({Expr::var(1), Expr::constant(Complex{-0.3, 0.0})}));
  CHECK(e.to_evaluable(2).cylinder_terms().has_value());
  const Expr mixed = Expr::inv(Expr::add({Expr::var(1), Expr::var(0)}));
  const Evaluable ev = mixed.to_evaluable(2);
  CHECK_FALSE(ev.cylinder_terms().has_value());
  CHECK(std::abs(ev({Complex{0.5, 0.0}, Complex{0.5, 0.0}}) - 1.0) < 1e-15);
}

TEST_CASE("to_string is readable") {
  const Expr e = Expr::add({Expr::var(0), Expr::pow(Expr::var(1), 2)});
  const std::string s = e.to_string();
  CHECK(s.find("z1") != std::string::npos);
  CHECK(s.find("z2") != std::string::npos);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "okakit/cousin.hpp"
#include "okakit/error.hpp"

using namespace okakit;
using okakit::testing::Rng;

namespace {

const Complex I{0.0, 1.0};

// Closed forms of (1 / 2 pi i) int_a^b phi(zeta) / (zeta - z) d zeta.
Complex constant_density_oracle(Complex a, Complex b, Complex z) {
  return std::log((b - z) / (a - z)) / (2.0 * std::numbers::pi * I);
}
Complex linear_density_oracle(Complex a, Complex b, Complex z) {
  return ((b - a) + z * std::log((b - z) / (a - z))) / (2.0 * std::numbers::pi * I);
}

// Segment from -i to i: base Im range [-1 + delta, 1 - delta] with delta = 0.5.
SplitGeometry unit_segment() { return {Cuboid({{-3.0, 3.0}}, {{-0.5, 0.5}}), 0.0, 0.5}; }

double max_jump(const CousinPair& pair, const Evaluable& phi, const SplitGeometry& g, std::size_t samples) {
  const Cuboid o = g.overlap();
  const std::size_t n = o.ambient_dim();
  double worst = 0.0;
  for (const auto& u : halton_points(samples, 2 * n)) {
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k)
      z[k] = {o.re(k).lo + u[2 * k] * o.re(k).width(), o.im(k).lo + u[2 * k + 1] * o.im(k).width()};
    worst = std::max(worst, std::abs(pair.left(z) - pair.right(z) - phi(z)));
  }
  return worst;
}

}  // namespace

TEST_CASE("cauchy_segment_integral against closed forms") {
  const SplitGeometry g = unit_segment();
  const Complex a = g.lower_end(), b = g.upper_end();
  CHECK(a == Complex{0, -1});
  CHECK(b == Complex{0, 1});
  const Evaluable one = Evaluable::constant(1, 1.0);
  const Evaluable zeta(1, [](std::span<const Complex> z) { return z[0]; });
  const Complex z2[] = {{2.0, 0.0}};

  // Frozen values of the closed forms at z = 2 (computed to 30 digits).
  CHECK(std::abs(cauchy_segment_integral(one, g, z2) - Complex{-0.147583617650433274, 0.0}) < 1e-13);
  CHECK(std::abs(cauchy_segment_integral(zeta, g, z2) - Complex{0.0231426508829241232, 0.0}) < 1e-13);
  CHECK(std::abs(constant_density_oracle(a, b, 2.0) - Complex{-0.147583617650433274, 0.0}) < 1e-15);

  const Complex off[] = {{0.3, 0.7}};
  CHECK(std::abs(cauchy_segment_integral(one, g, off) - Complex{-0.347200056107107410, 0.223351818495794816}) < 1e-12);
  for (Complex z : {Complex{-0.01, 0.2}, Complex{1e-4, -0.9}, Complex{0.0, 1.5}, Complex{-2.0, -3.0}}) {
    const Complex p[] = {z};
    CHECK(std::abs(cauchy_segment_integral(one, g, p) - constant_density_oracle(a, b, z)) < 1e-11);
    CHECK(std::abs(cauchy_segment_integral(zeta, g, p) - linear_density_oracle(a, b, z)) < 1e-11);
  }
  const Complex zero_pt[] = {{0.7, 0.1}};
  CHECK(cauchy_segment_integral(Evaluable::zero(1), g, zero_pt) == Complex{});
}

TEST_CASE("points on the segment are rejected") {
  const Complex on[] = {{0.0, 0.25}};
  try {
    (void)cauchy_segment_integral(Evaluable::constant(1, 1.0), unit_segment(), on);
    FAIL("expected OnContour");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OnContour);
  }
}

TEST_CASE("geometry validation") {
  SplitGeometry g = unit_segment();
  g.margin = 0.0;
  CHECK_THROWS_AS(g.validate(), Error);
  g = unit_segment();
  g.seam = 3.0;
  CHECK_THROWS_AS(g.validate(), Error);
  g = unit_segment();
  CHECK(g.left_slab().re(0) == Interval{-3.0, 0.5});
  CHECK(g.right_slab().re(0) == Interval{-0.5, 3.0});
  CHECK(g.overlap().re(0) == Interval{-0.5, 0.5});
}

TEST_CASE("constant density calibrates the jump sign") {
  const SplitGeometry g = unit_segment();
  const Evaluable one = Evaluable::constant(1, 1.0);
  const CousinPair pair = cousin_split(one, g);
  CHECK(max_jump(pair, one, g, 200) < 1e-12);
  // Far left the left piece is the plain Cauchy integral.
  const Complex far[] = {{-2.5, 0.1}};
  CHECK(std::abs(pair.left(far) - constant_density_oracle(g.lower_end(), g.upper_end(), far[0])) < 1e-12);
  const Complex right_far[] = {{2.5, -0.3}};
  CHECK(std::abs(pair.right(right_far) - constant_density_oracle(g.lower_end(), g.upper_end(), right_far[0])) < 1e-12);
}

TEST_CASE("zero density splits into zeros") {
  const CousinPair pair = cousin_split(Evaluable::zero(1), unit_segment());
  const Complex z[] = {{0.1, 0.2}};
  CHECK(pair.left(z) == Complex{});
  CHECK(pair.right(z) == Complex{});
}

TEST_CASE("contour routing keeps a quarter margin") {
  const SplitGeometry g = unit_segment();
  const OneVariableSplit split([](Complex) { return Complex{1, 0}; }, 0.0, 0.5, -0.5, 0.5, QuadratureSpec{});
  for (double x = -0.5; x <= 0.5; x += 0.01) {
    for (double y = -0.5; y <= 0.5; y += 0.1) {
      CHECK(split.choose({x, y}, SplitSide::Left).distance >= 0.125 * (1 - 1e-9));
      CHECK(split.choose({x, y}, SplitSide::Right).distance >= 0.125 * (1 - 1e-9));
    }
  }
  // Left and right pieces use different contours on most of the overlap.
  CHECK(split.choose({0.0, 0.0}, SplitSide::Left).shift > 0);
  CHECK(split.choose({0.0, 0.0}, SplitSide::Right).shift < 0);
}

TEST_CASE("jump identity, linearity and refinement on random densities (property)") {
  Rng rng(51);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const SplitGeometry g = okakit::testing::random_geometry(rng, n);
    const auto fs = okakit::testing::random_float_polynomial(rng, n, 5, 6);
    const auto gs = okakit::testing::random_float_polynomial(rng, n, 5, 6);
    const Evaluable phi = Evaluable::polynomial(fs), psi = Evaluable::polynomial(gs);
    const CousinPair p1 = cousin_split(phi, g), p2 = cousin_split(psi, g);
    const double tol = 1e-8;
    CHECK(max_jump(p1, phi, g, 40) <= tol);

    const Complex a{0.7, -0.2}, b{-1.1, 0.4};
    const Evaluable combo = phi.scaled(a) + psi.scaled(b);
    const CousinPair pc = cousin_split(combo, g);
    const Cuboid o = g.overlap();
    for (const auto& u : halton_points(10, 2 * n)) {
      std::vector<Complex> z(n);
      for (std::size_t k = 0; k < n; ++k)
        z[k] = {o.re(k).lo + u[2 * k] * o.re(k).width(), o.im(k).lo + u[2 * k + 1] * o.im(k).width()};
      CHECK(std::abs(pc.left(z) - (a * p1.left(z) + b * p2.left(z))) <= 2 * tol);
      CHECK(std::abs(pc.right(z) - (a * p1.right(z) + b * p2.right(z))) <= 2 * tol);
    }

    // Tighter quadrature never loses more than a factor of two.
    QuadratureSpec fine;
    fine.panels = 32;
    fine.tolerance = 1e-14;
    const double coarse_r = max_jump(p1, phi, g, 40);
    const double fine_r = max_jump(cousin_split(phi, g, fine), phi, g, 40);
    CHECK(fine_r <= std::max(2.0 * coarse_r, 1e-13));
  }
}

TEST_CASE("split pieces are holomorphic on their slabs") {
  Rng rng(52);
  const SplitGeometry g = okakit::testing::random_geometry(rng, 1);
  const Evaluable phi = Evaluable::polynomial(okakit::testing::random_float_polynomial(rng, 1, 4, 5));
  const CousinPair pair = cousin_split(phi, g);
  CHECK(morera_residual(pair.left, g.left_slab(), 6) < 1e-10);
  CHECK(morera_residual(pair.right, g.right_slab(), 6) < 1e-10);
}

TEST_CASE("generic densities are split per parameter value") {
  // exp(z1 * z2) has no cylinder form.
  const Evaluable phi(2, [](std::span<const Complex> z) { return std::exp(z[0] * z[1]); });
  const SplitGeometry g{Cuboid({{-0.3, 0.3}, {-1.0, 1.0}}, {{-0.2, 0.2}, {-0.5, 0.5}}), 0.1, 0.2};
  const CousinPair pair = cousin_split(phi, g);
  CHECK(max_jump(pair, phi, g, 16) < 1e-10);
}

TEST_CASE("morera_residual separates holomorphic from anti-holomorphic") {
  const Cuboid box({{-1.0, 1.0}}, {{-0.5, 1.5}});
  CHECK(morera_residual(Evaluable::constant(1, {2.0, -1.0}), box, 5) <= 1e-12);
  const Evaluable square(1, [](std::span<const Complex> z) { return z[0] * z[0]; });
  CHECK(morera_residual(square, box, 5) <= 1e-10);
  const Evaluable bar(1, [](std::span<const Complex> z) { return std::conj(z[0]); });
  // |contour integral of conj(z)| = 2 * area of one 0.4 x 0.4 test rectangle.
  CHECK(morera_residual(bar, box, 5) == doctest::Approx(2 * 0.4 * 0.4).epsilon(1e-12));

  const Cuboid box2({{-1.0, 1.0}, {0.0, 1.0}}, {{-1.0, 1.0}, {0.0, 1.0}});
  const Evaluable mixed(2, [](std::span<const Complex> z) { return z[0] * z[1] + std::exp(z[1]); });
  CHECK(morera_residual(mixed, box2, 4) <= 1e-10);
  const Evaluable bad(2, [](std::span<const Complex> z) { return z[0] + 1e-3 * std::conj(z[1]); });
  CHECK(morera_residual(bad, box2, 4) >= 1e-5);
}

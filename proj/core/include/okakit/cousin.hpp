#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "okakit/cuboid.hpp"
#include "okakit/evaluable.hpp"
#include "okakit/quadrature.hpp"

namespace okakit {

/// Geometry of one Cousin decomposition along the last complex axis.
///
/// The segment runs upward from s + i(im_lo - delta) to s + i(im_hi + delta),
/// where [im_lo, im_hi] is the base cuboid's Im z_n range. The density must
/// be holomorphic on the margin strip |Re z_n - s| <= delta,
/// im_lo - delta <= Im z_n <= im_hi + delta.
struct SplitGeometry {
  Cuboid base;
  double seam = 0.0;
  double margin = 0.0;

  /// Throws InvalidProblem unless margin > 0 and the seam lies strictly inside
  /// the base cuboid's Re z_n range.
  void validate() const;

  std::size_t axis() const { return base.ambient_dim() - 1; }
  Complex lower_end() const;
  Complex upper_end() const;
  Cuboid left_slab() const;    // Re z_n in [lo, s + delta]
  Cuboid right_slab() const;   // Re z_n in [s - delta, hi]
  Cuboid overlap() const;      // intersection of the two slabs
  Cuboid margin_strip() const;
};

enum class SplitSide { Left, Right };

/// Which deformed contour serves an evaluation point.
struct ContourChoice {
  double shift = 0.0;      // offset of the vertical part from the seam
  double distance = 0.0;   // distance from z to the contour
  bool add_density = false;
};

/// Cousin decomposition of a density of one variable.
///
/// The segment and two copies bulged left and right by delta/2 are
/// discretized once. Each side evaluates the Cauchy integral over the first
/// contour in its preference order that stays delta/4 away from z, then adds
/// (left side) or subtracts (right side) the density when z lies across that
/// contour from its own side.
class OneVariableSplit {
 public:
  OneVariableSplit(Function1D density, double seam, double margin, double im_lo, double im_hi,
                   const QuadratureSpec& spec);

  Complex left(Complex z) const;
  Complex right(Complex z) const;
  ContourChoice choose(Complex z, SplitSide side) const;
  std::size_t node_count() const;

 private:
  struct Contour {
    double shift;
    std::vector<std::array<Complex, 2>> segments;
    std::vector<QuadratureNode> nodes;
  };
  double contour_distance(const Contour& c, Complex z) const;
  Complex evaluate(Complex z, SplitSide side) const;

  Function1D density_;
  double seam_, margin_, im_lo_, im_hi_;
  std::array<Contour, 3> contours_;  // shifts -delta/2, 0, +delta/2
};

/// (1 / 2 pi i) * integral over the segment of phi(z', zeta) / (zeta - z_n).
/// Throws OnContour when z_n lies on the segment and QuadratureFailure when
/// refinement does not converge.
Complex cauchy_segment_integral(const Evaluable& density, const SplitGeometry& geometry, std::span<const Complex> z,
                                const QuadratureSpec& spec = {});

struct CousinPair {
  Evaluable left;   // holomorphic on the left slab
  Evaluable right;  // holomorphic on the right slab; left - right = density on the overlap
};

/// Splits a density into a left and a right piece whose difference is the
/// density on the overlap of the two slabs. Densities polynomial in z' (and
/// every density when n = 1) are split term by term with eager contour
/// discretizations; other densities are split per z' on first use.
CousinPair cousin_split(const Evaluable& density, const SplitGeometry& geometry, const QuadratureSpec& spec = {});

/// Largest |contour integral of f dz| over grid x grid axis-parallel test
/// rectangles tiling each complex axis of the region that has positive Re
/// and Im width; the remaining coordinates are frozen at three diagonal
/// sample points (low corner, center, high corner) of their own ranges.
double morera_residual(const Evaluable& f, const Cuboid& region, int grid, int nodes = 16);

}  // namespace okakit

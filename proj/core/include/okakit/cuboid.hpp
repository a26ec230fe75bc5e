#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "okakit/scalar.hpp"
#include "okakit/subspace.hpp"

namespace okakit {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  double mid() const noexcept { return 0.5 * (lo + hi); }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed cuboid in C^n with sides parallel to the real and imaginary axes:
/// one real interval for Re z_k and one for Im z_k per complex axis.
class Cuboid {
 public:
  Cuboid() = default;
  /// Throws InvalidPartition when an interval is empty or the lists differ in length.
  Cuboid(std::vector<Interval> re, std::vector<Interval> im);

  /// Unbounded box used as the domain of entire functions.
  static Cuboid everywhere(std::size_t dim);

  std::size_t ambient_dim() const noexcept { return re_.size(); }
  const Interval& re(std::size_t axis) const { return re_[axis]; }
  const Interval& im(std::size_t axis) const { return im_[axis]; }
  const std::vector<Interval>& re_intervals() const noexcept { return re_; }
  const std::vector<Interval>& im_intervals() const noexcept { return im_; }

  /// Number of intervals of positive width.
  std::size_t dim() const noexcept;
  bool contains(std::span<const Complex> z, double slack = 0.0) const;
  std::vector<Complex> center() const;

  Cuboid with_re(std::size_t axis, Interval iv) const;
  Cuboid with_im(std::size_t axis, Interval iv) const;
  /// The cuboid enlarged by `margin` on every side of the listed axis.
  Cuboid widened(std::size_t axis, double re_margin, double im_margin) const;

  std::optional<Cuboid> intersect(const Cuboid& other) const;
  /// True iff the cuboid meets {z_1 = ... = z_q = 0}.
  bool meets(const CoordinateSubspace& s) const;
  /// Axes reordered so that new axis k is old axis perm[k].
  Cuboid permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const Cuboid&, const Cuboid&) = default;

 private:
  std::vector<Interval> re_;
  std::vector<Interval> im_;
};

/// E_t = {z in E : Re z_n = t}.
Cuboid slice(const Cuboid& e, double t);

/// Slabs E_alpha = {t_{alpha-1} <= Re z_n <= t_alpha} of a cuboid, sliced
/// along the last complex axis.
class SlabPartition {
 public:
  const Cuboid& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return ts_.size() - 1; }
  /// t_0 < t_1 < ... < t_L.
  const std::vector<double>& breakpoints() const noexcept { return ts_; }
  /// Zero-based slab index.
  Cuboid slab(std::size_t alpha) const;
  /// Abscissa of the face shared by slab alpha and alpha + 1.
  double seam(std::size_t alpha) const { return ts_.at(alpha + 1); }
  double min_width() const;
  /// Slab whose Re z_n range contains x; ties go to the lower index.
  std::size_t locate(double x) const;

 private:
  friend SlabPartition make_partition(const Cuboid& e, std::span<const double> interior);
  Cuboid base_;
  std::vector<double> ts_;
};

/// `interior` must be strictly increasing and strictly inside the Re z_n range.
SlabPartition make_partition(const Cuboid& e, std::span<const double> interior);

/// Zero-based inclusive range of slabs pairwise connected on S.
struct ConnectivityChain {
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const ConnectivityChain&, const ConnectivityChain&) = default;
};

std::vector<ConnectivityChain> connected_chains(const SlabPartition& p, const CoordinateSubspace& s);

}  // namespace okakit

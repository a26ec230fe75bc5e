#include "okakit/cuboid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "okakit/error.hpp"

namespace okakit {

Cuboid::Cuboid(std::vector<Interval> re, std::vector<Interval> im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.size() != im_.size()) throw Error(ErrorCode::InvalidPartition, "re and im interval lists differ in length");
  if (re_.empty()) throw Error(ErrorCode::InvalidPartition, "cuboid needs at least one axis");
  for (std::size_t k = 0; k < re_.size(); ++k) {
    if (!(re_[k].lo <= re_[k].hi) || !(im_[k].lo <= im_[k].hi))
      throw Error(ErrorCode::InvalidPartition, "empty interval on axis " + std::to_string(k + 1));
  }
}

Cuboid Cuboid::everywhere(std::size_t dim) {
  const double inf = std::numeric_limits<double>::infinity();
  return {std::vector<Interval>(dim, {-inf, inf}), std::vector<Interval>(dim, {-inf, inf})};
}

std::size_t Cuboid::dim() const noexcept {
  std::size_t d = 0;
  for (std::size_t k = 0; k < re_.size(); ++k) d += (re_[k].width() > 0) + (im_[k].width() > 0);
  return d;
}

bool Cuboid::contains(std::span<const Complex> z, double slack) const {
  if (z.size() != re_.size()) return false;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k].real() < re_[k].lo - slack || z[k].real() > re_[k].hi + slack) return false;
    if (z[k].imag() < im_[k].lo - slack || z[k].imag() > im_[k].hi + slack) return false;
  }
  return true;
}

std::vector<Complex> Cuboid::center() const {
  std::vector<Complex> c;
  for (std::size_t k = 0; k < re_.size(); ++k) c.emplace_back(re_[k].mid(), im_[k].mid());
  return c;
}

Cuboid Cuboid::with_re(std::size_t axis, Interval iv) const {
  auto re = re_;
  re.at(axis) = iv;
  return {std::move(re), im_};
}

Cuboid Cuboid::with_im(std::size_t axis, Interval iv) const {
  auto im = im_;
  im.at(axis) = iv;
  return {re_, std::move(im)};
}

Cuboid Cuboid::widened(std::size_t axis, double re_margin, double im_margin) const {
  return with_re(axis, {re_[axis].lo - re_margin, re_[axis].hi + re_margin})
      .with_im(axis, {im_[axis].lo - im_margin, im_[axis].hi + im_margin});
}

std::optional<Cuboid> Cuboid::intersect(const Cuboid& other) const {
  if (other.ambient_dim() != ambient_dim()) return std::nullopt;
  std::vector<Interval> re(re_.size()), im(im_.size());
  for (std::size_t k = 0; k < re_.size(); ++k) {
    re[k] = {std::max(re_[k].lo, other.re_[k].lo), std::min(re_[k].hi, other.re_[k].hi)};
    im[k] = {std::max(im_[k].lo, other.im_[k].lo), std::min(im_[k].hi, other.im_[k].hi)};
    if (re[k].lo > re[k].hi || im[k].lo > im[k].hi) return std::nullopt;
  }
  return Cuboid(std::move(re), std::move(im));
}

bool Cuboid::meets(const CoordinateSubspace& s) const {
  if (s.ambient_dim() != ambient_dim()) return false;
  for (std::size_t k = 0; k < s.codim(); ++k)
    if (!re_[k].contains(0.0) || !im_[k].contains(0.0)) return false;
  return true;
}

Cuboid Cuboid::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != re_.size()) throw Error(ErrorCode::InvalidPartition, "permutation length differs from dimension");
  std::vector<bool> seen(perm.size(), false);
  std::vector<Interval> re, im;
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw Error(ErrorCode::InvalidPartition, "not a permutation");
    seen[p] = true;
    re.push_back(re_[p]);
    im.push_back(im_[p]);
  }
  return {std::move(re), std::move(im)};
}

Cuboid slice(const Cuboid& e, double t) {
  const std::size_t last = e.ambient_dim() - 1;
  if (!e.re(last).contains(t)) throw Error(ErrorCode::InvalidPartition, "slice position outside the cuboid");
  return e.with_re(last, {t, t});
}

Cuboid SlabPartition::slab(std::size_t alpha) const {
  if (alpha >= size()) throw Error(ErrorCode::InvalidPartition, "slab index out of range");
  return base_.with_re(base_.ambient_dim() - 1, {ts_[alpha], ts_[alpha + 1]});
}

double SlabPartition::min_width() const {
  double w = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < size(); ++a) w = std::min(w, ts_[a + 1] - ts_[a]);
  return w;
}

std::size_t SlabPartition::locate(double x) const {
  for (std::size_t a = 0; a + 1 < size(); ++a)
    if (x <= ts_[a + 1]) return a;
  return size() - 1;
}

SlabPartition make_partition(const Cuboid& e, std::span<const double> interior) {
  const Interval range = e.re(e.ambient_dim() - 1);
  if (!(range.width() > 0)) throw Error(ErrorCode::InvalidPartition, "sliced axis has zero real width");
  SlabPartition p;
  p.base_ = e;
  p.ts_.push_back(range.lo);
  for (double t : interior) {
    if (!(t > p.ts_.back()) || !(t < range.hi))
      throw Error(ErrorCode::InvalidPartition, "breakpoints must be strictly increasing and interior");
    p.ts_.push_back(t);
  }
  p.ts_.push_back(range.hi);
  return p;
}

std::vector<ConnectivityChain> connected_chains(const SlabPartition& p, const CoordinateSubspace& s) {
  const Cuboid& e = p.base();
  const std::size_t last = e.ambient_dim() - 1;
  std::vector<ConnectivityChain> chains;
  ConnectivityChain current{0, 0};
  for (std::size_t a = 0; a + 1 < p.size(); ++a) {
    // E_a and E_{a+1} share the face {Re z_n = t}; it meets S iff every
    // constrained axis admits 0.
    bool connected = e.meets(s);
    if (connected && s.constrains(last)) connected = p.seam(a) == 0.0;
    if (connected) {
      current.last = a + 1;
    } else {
      chains.push_back(current);
      current = {a + 1, a + 1};
    }
  }
  chains.push_back(current);
  return chains;
}

}  // namespace okakit

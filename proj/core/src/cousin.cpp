#include "okakit/cousin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "okakit/error.hpp"
#include "okakit/parallel.hpp"

namespace okakit {

void SplitGeometry::validate() const {
  if (!(margin > 0)) throw Error(ErrorCode::InvalidProblem, "split margin must be positive");
  const Interval re = base.re(axis());
  if (!(seam > re.lo && seam < re.hi)) throw Error(ErrorCode::InvalidProblem, "seam must lie strictly inside the cuboid");
}

Complex SplitGeometry::lower_end() const { return {seam, base.im(axis()).lo - margin}; }
Complex SplitGeometry::upper_end() const { return {seam, base.im(axis()).hi + margin}; }

Cuboid SplitGeometry::left_slab() const { return base.with_re(axis(), {base.re(axis()).lo, seam + margin}); }
Cuboid SplitGeometry::right_slab() const { return base.with_re(axis(), {seam - margin, base.re(axis()).hi}); }
Cuboid SplitGeometry::overlap() const { return base.with_re(axis(), {seam - margin, seam + margin}); }

Cuboid SplitGeometry::margin_strip() const {
  const Interval im = base.im(axis());
  return overlap().with_im(axis(), {im.lo - margin, im.hi + margin});
}

OneVariableSplit::OneVariableSplit(Function1D density, double seam, double margin, double im_lo, double im_hi,
                                   const QuadratureSpec& spec)
    : density_(std::move(density)), seam_(seam), margin_(margin), im_lo_(im_lo), im_hi_(im_hi) {
  spec.validate();
  const Complex a{seam, im_lo - margin};
  const Complex b{seam, im_hi + margin};
  const double height = im_hi - im_lo + 2.0 * margin;
  const KernelGuard guard{std::nullopt, 0.25 * margin};
  const double shifts[3] = {-0.5 * margin, 0.0, 0.5 * margin};
  for (int c = 0; c < 3; ++c) {
    Contour& contour = contours_[c];
    contour.shift = shifts[c];
    const Complex dx{shifts[c], 0.0};
    if (shifts[c] == 0.0) {
      contour.segments = {{a, b}};
    } else {
      contour.segments = {{a, a + dx}, {a + dx, b + dx}, {b + dx, b}};
    }
    for (const auto& seg : contour.segments) {
      QuadratureSpec local = spec;
      const double len = std::abs(seg[1] - seg[0]);
      local.panels = std::max(1, static_cast<int>(std::ceil(spec.panels * len / height)));
      auto nodes = discretize_segment(seg[0], seg[1], density_, guard, local);
      contour.nodes.insert(contour.nodes.end(), nodes.begin(), nodes.end());
    }
  }
}

double OneVariableSplit::contour_distance(const Contour& c, Complex z) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& seg : c.segments) d = std::min(d, distance_to_segment(z, seg[0], seg[1]));
  return d;
}

ContourChoice OneVariableSplit::choose(Complex z, SplitSide side) const {
  static constexpr int kLeftOrder[3] = {2, 1, 0};
  static constexpr int kRightOrder[3] = {0, 1, 2};
  const int* order = side == SplitSide::Left ? kLeftOrder : kRightOrder;
  const double clearance = 0.25 * margin_ * (1.0 - 1e-9);
  int pick = -1;
  double best = -1.0;
  int fallback = order[0];
  for (int i = 0; i < 3; ++i) {
    const double d = contour_distance(contours_[order[i]], z);
    if (d >= clearance) {
      pick = order[i];
      best = d;
      break;
    }
    if (d > best) {
      best = d;
      fallback = order[i];
    }
  }
  if (pick < 0) pick = fallback;
  const double x = seam_ + contours_[pick].shift;
  const bool in_band = z.imag() > im_lo_ - margin_ && z.imag() < im_hi_ + margin_;
  const bool across = side == SplitSide::Left ? z.real() > x : z.real() < x;
  return {contours_[pick].shift, best, in_band && across};
}

Complex OneVariableSplit::evaluate(Complex z, SplitSide side) const {
  const ContourChoice choice = choose(z, side);
  const int index = choice.shift < 0 ? 0 : (choice.shift == 0 ? 1 : 2);
  Complex value = cauchy_sum(contours_[index].nodes, z);
  if (choice.add_density) value += side == SplitSide::Left ? density_(z) : -density_(z);
  return value;
}

Complex OneVariableSplit::left(Complex z) const { return evaluate(z, SplitSide::Left); }
Complex OneVariableSplit::right(Complex z) const { return evaluate(z, SplitSide::Right); }

std::size_t OneVariableSplit::node_count() const {
  std::size_t n = 0;
  for (const auto& c : contours_) n += c.nodes.size();
  return n;
}

Complex cauchy_segment_integral(const Evaluable& density, const SplitGeometry& geometry, std::span<const Complex> z,
                                const QuadratureSpec& spec) {
  geometry.validate();
  spec.validate();
  const std::size_t n = geometry.base.ambient_dim();
  if (z.size() != n || density.dim() != n)
    throw Error(ErrorCode::IncompatibleOperands, "point, density and geometry dimensions differ");
  const Complex a = geometry.lower_end();
  const Complex b = geometry.upper_end();
  const Complex zn = z[n - 1];
  if (distance_to_segment(zn, a, b) <= 1e-15 * std::abs(b - a))
    throw Error(ErrorCode::OnContour, "evaluation point lies on the integration segment");
  std::vector<Complex> point(z.begin(), z.end());
  Function1D profile = [&density, point](Complex zeta) mutable {
    point.back() = zeta;
    return density(point);
  };
  const auto nodes = discretize_segment(a, b, profile, KernelGuard{zn, 0.0}, spec);
  return cauchy_sum(nodes, zn);
}

namespace {

/// Per-z' splits for densities without a cylinder form.
class ParametricSplit {
 public:
  ParametricSplit(Evaluable density, SplitGeometry geometry, QuadratureSpec spec)
      : density_(std::move(density)), geometry_(std::move(geometry)), spec_(spec) {}

  Complex evaluate(std::span<const Complex> z, SplitSide side) const {
    auto split = for_parameters(z);
    const Complex zn = z.back();
    return side == SplitSide::Left ? split->left(zn) : split->right(zn);
  }

 private:
  std::shared_ptr<const OneVariableSplit> for_parameters(std::span<const Complex> z) const {
    std::vector<double> key;
    for (std::size_t k = 0; k + 1 < z.size(); ++k) {
      key.push_back(z[k].real());
      key.push_back(z[k].imag());
    }
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    std::vector<Complex> point(z.begin(), z.end());
    const Interval im = geometry_.base.im(geometry_.axis());
    auto split = std::make_shared<const OneVariableSplit>(
        [density = density_, point](Complex zeta) mutable {
          point.back() = zeta;
          return density(point);
        },
        geometry_.seam, geometry_.margin, im.lo, im.hi, spec_);
    std::lock_guard lock(mutex_);
    if (cache_.size() >= kCacheLimit) cache_.clear();
    cache_.emplace(std::move(key), split);
    return split;
  }

  static constexpr std::size_t kCacheLimit = 4096;
  Evaluable density_;
  SplitGeometry geometry_;
  QuadratureSpec spec_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<double>, std::shared_ptr<const OneVariableSplit>> cache_;
};

}  // namespace

CousinPair cousin_split(const Evaluable& density, const SplitGeometry& geometry, const QuadratureSpec& spec) {
  geometry.validate();
  spec.validate();
  const std::size_t n = geometry.base.ambient_dim();
  if (density.dim() != n) throw Error(ErrorCode::IncompatibleOperands, "density and geometry dimensions differ");
  const Interval im = geometry.base.im(geometry.axis());
  const std::string tag = density.tag();

  if (auto terms = density.cylinder_terms()) {
    std::map<MultiIndex, std::vector<Function1D>> grouped;
    for (auto& t : *terms) grouped[t.exponent].push_back(std::move(t.profile));
    std::vector<CylinderTerm> left, right;
    for (auto& [mu, profiles] : grouped) {
      Function1D profile = profiles.front();
      if (profiles.size() > 1) {
        profile = [ps = std::move(profiles)](Complex z) {
          Complex s{};
          for (const auto& u : ps) s += u(z);
          return s;
        };
      }
      auto split = std::make_shared<const OneVariableSplit>(profile, geometry.seam, geometry.margin, im.lo, im.hi, spec);
      left.push_back({mu, [split](Complex z) { return split->left(z); }});
      right.push_back({mu, [split](Complex z) { return split->right(z); }});
    }
    return {Evaluable::cylinder(n, std::move(left), geometry.left_slab(), "cousin-left[" + tag + "]"),
            Evaluable::cylinder(n, std::move(right), geometry.right_slab(), "cousin-right[" + tag + "]")};
  }

  auto shared = std::make_shared<const ParametricSplit>(density, geometry, spec);
  return {Evaluable(
              n, [shared](std::span<const Complex> z) { return shared->evaluate(z, SplitSide::Left); },
              geometry.left_slab(), "cousin-left[" + tag + "]"),
          Evaluable(
              n, [shared](std::span<const Complex> z) { return shared->evaluate(z, SplitSide::Right); },
              geometry.right_slab(), "cousin-right[" + tag + "]")};
}

double morera_residual(const Evaluable& f, const Cuboid& region, int grid, int nodes) {
  if (grid < 1) throw Error(ErrorCode::InvalidProblem, "morera grid must be positive");
  const std::size_t n = region.ambient_dim();
  if (f.dim() != n) throw Error(ErrorCode::IncompatibleOperands, "function and region dimensions differ");

  struct Task {
    std::size_t axis;
    std::vector<Complex> frozen;
    Complex corner;
    double w, h;
  };
  std::vector<Task> tasks;
  for (std::size_t axis = 0; axis < n; ++axis) {
    const Interval re = region.re(axis), im = region.im(axis);
    if (!(re.width() > 0 && im.width() > 0)) continue;
    // Frozen coordinates: low corner, center, high corner of every other axis.
    std::vector<std::vector<Complex>> frozen{region.center()};
    for (std::size_t other = 0; other < n; ++other) {
      if (other == axis) continue;
      std::vector<std::vector<Complex>> next;
      const Interval ore = region.re(other), oim = region.im(other);
      const Complex samples[3] = {{ore.lo, oim.lo}, {ore.mid(), oim.mid()}, {ore.hi, oim.hi}};
      for (const auto& base : frozen)
        for (const auto& s : samples) {
          auto p = base;
          p[other] = s;
          next.push_back(std::move(p));
        }
      frozen = std::move(next);
    }
    std::sort(frozen.begin(), frozen.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](Complex u, Complex v) {
        return std::pair(u.real(), u.imag()) < std::pair(v.real(), v.imag());
      });
    });
    frozen.erase(std::unique(frozen.begin(), frozen.end()), frozen.end());
    const double w = re.width() / grid, h = im.width() / grid;
    for (const auto& fz : frozen)
      for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) tasks.push_back({axis, fz, Complex(re.lo + i * w, im.lo + j * h), w, h});
  }

  std::vector<double> residuals(tasks.size(), 0.0);
  parallel_for(tasks.size(), [&](std::size_t t) {
    const Task& task = tasks[t];
    std::vector<Complex> point = task.frozen;
    Function1D along = [&](Complex zeta) {
      point[task.axis] = zeta;
      return f(point);
    };
    const double side = std::min(task.w, task.h);
    const auto panels_for = [side](double len) { return std::max(1, static_cast<int>(std::ceil(len / side - 1e-9))); };
    const Complex c0 = task.corner, c1 = c0 + Complex(task.w, 0.0), c2 = c1 + Complex(0.0, task.h),
                  c3 = c0 + Complex(0.0, task.h);
    Complex loop = line_integral(along, c0, c1, panels_for(task.w), nodes);
    loop += line_integral(along, c1, c2, panels_for(task.h), nodes);
    loop += line_integral(along, c2, c3, panels_for(task.w), nodes);
    loop += line_integral(along, c3, c0, panels_for(task.h), nodes);
    residuals[t] = std::abs(loop);
  });
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  return worst;
}

}  // namespace okakit

#include "okakit/series.hpp"

namespace okakit {

FloatSeries to_floating(const ExactSeries& f) {
  FloatSeries::Point center;
  center.reserve(f.dim());
  for (const auto& b : f.center()) center.push_back(b.to_complex());
  FloatSeries r(std::move(center), f.order());
  for (const auto& [nu, c] : f.terms()) r.add_term(nu, c.to_complex());
  return r;
}

ExactSeries to_exact(const FloatSeries& f) {
  ExactSeries::Point center;
  center.reserve(f.dim());
  for (const auto& b : f.center()) center.push_back(GaussianRational::from_complex(b));
  ExactSeries r(std::move(center), f.order());
  for (const auto& [nu, c] : f.terms()) r.add_term(nu, GaussianRational::from_complex(c));
  return r;
}

}  // namespace okakit

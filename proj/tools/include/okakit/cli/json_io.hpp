#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "okakit/chi_merge.hpp"
#include "okakit/cuboid.hpp"
#include "okakit/expression.hpp"
#include "okakit/gaussian_rational.hpp"
#include "okakit/quadrature.hpp"
#include "okakit/series.hpp"

namespace okakit::cli {

using nlohmann::json;

/// Throws Error(SchemaViolation) naming the offending JSON path.
[[noreturn]] void schema_error(const std::string& path, const std::string& what);

const json& require(const json& j, const std::string& key, const std::string& path);

/// Numbers convert exactly from their double value; strings are read as
/// exact rationals ("3", "-2/7") or decimals ("0.125", "1e-3").
mpq_class parse_rational(const json& j, const std::string& path);
/// A real number, a rational/decimal string, or [re, im].
GaussianRational parse_scalar(const json& j, const std::string& path);

/// {"dim", "center"?, "terms": [{"exp", "re", "im"}], "order"?} or
/// {"dim", "expr": tree}. Missing order means an exact polynomial.
ExactSeries parse_series(const json& j, const std::string& path);
json series_to_json(const ExactSeries& f);
json series_to_json(const FloatSeries& f);

/// {"var": k} (1-based), {"const": scalar}, a bare scalar, or
/// {"op": "add"|"mul"|"pow"|"neg"|"inv", "args": [...]}.
Expr parse_expr(const json& j, const std::string& path);

/// {"re": [[lo, hi], ...], "im": [[lo, hi], ...]}
Cuboid parse_cuboid(const json& j, const std::string& path);
json cuboid_to_json(const Cuboid& c);

QuadratureSpec parse_quadrature(const json& j, const std::string& path);
json quadrature_to_json(const QuadratureSpec& q);

json complex_to_json(Complex z);
json report_to_json(const VerificationReport& r);

}  // namespace okakit::cli

#include "okakit/cli/json_io.hpp"

#include <cctype>
#include <optional>

#include "okakit/error.hpp"

namespace okakit::cli {

void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, (path.empty() ? std::string("<root>") : path) + ": " + what);
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, "missing key \"" + key + "\"");
  return *it;
}

namespace {

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string join(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

std::optional<mpq_class> parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++], any = true;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++], --scale, any = true;
  }
  if (!any) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    try {
      scale += std::stol(s.substr(i), &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    i += used;
  }
  if (i != s.size()) return std::nullopt;
  mpz_class num(digits), ten(10), factor;
  mpz_pow_ui(factor.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(num, factor) : mpq_class(num * factor);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

template <class S>
json series_json_impl(const TruncatedSeries<S>& f, bool exact) {
  json terms = json::array();
  const auto scalar = [exact](const S& c) {
    const Complex z = ScalarTraits<S>::to_complex(c);
    if constexpr (std::is_same_v<S, GaussianRational>) {
      if (exact) return json{{"re", to_decimal_string(c.real())}, {"im", to_decimal_string(c.imag())}};
    }
    return json{{"re", z.real()}, {"im", z.imag()}};
  };
  for (const auto& [nu, c] : f.terms()) {
    json t = scalar(c);
    t["exp"] = json(std::vector<std::uint32_t>(nu.exponents().begin(), nu.exponents().end()));
    terms.push_back(std::move(t));
  }
  json center = json::array();
  for (const auto& b : f.center()) {
    const json s = scalar(b);
    center.push_back(json::array({s["re"], s["im"]}));
  }
  json out{{"dim", f.dim()}, {"center", center}, {"terms", terms}};
  out["order"] = f.order() ? json(*f.order()) : json("exact");
  return out;
}

}  // namespace

mpq_class parse_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_number()) return GaussianRational::from_double(j.get<double>()).real();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('/') != std::string::npos) {
      try {
        return GaussianRational::parse(s).real();
      } catch (const std::exception& e) {
        schema_error(path, "bad rational \"" + s + "\"");
      }
    }
    if (auto q = parse_decimal(s)) return *q;
    schema_error(path, "bad number \"" + s + "\"");
  }
  schema_error(path, "expected a number or a numeric string");
}

GaussianRational parse_scalar(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) schema_error(path, "complex literal must be [re, im]");
    return {parse_rational(j[0], join(path, 0)), parse_rational(j[1], join(path, 1))};
  }
  return {parse_rational(j, path), 0};
}

ExactSeries parse_series(const json& j, const std::string& path) {
  const json& dim_j = require(j, "dim", path);
  if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() == 0) schema_error(join(path, "dim"), "expected a positive integer");
  const auto dim = dim_j.get<std::size_t>();

  if (j.contains("expr")) {
    if (j.contains("terms")) schema_error(path, "give either \"expr\" or \"terms\", not both");
    const Expr e = parse_expr(j["expr"], join(path, "expr"));
    if (e.arity() > dim) schema_error(join(path, "expr"), "uses variables beyond dim");
    if (!e.is_polynomial()) schema_error(join(path, "expr"), "series expressions must be polynomials");
    return e.to_polynomial(dim);
  }

  ExactSeries::Point center(dim);
  if (j.contains("center")) {
    const json& c = j["center"];
    if (!c.is_array() || c.size() != dim) schema_error(join(path, "center"), "expected " + std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < dim; ++k) center[k] = parse_scalar(c[k], join(join(path, "center"), k));
  }
  ExactSeries::Order order;
  if (j.contains("order") && !(j["order"].is_string() && j["order"] == "exact")) {
    if (!j["order"].is_number_unsigned()) schema_error(join(path, "order"), "expected a non-negative integer or \"exact\"");
    order = j["order"].get<std::uint32_t>();
  }
  ExactSeries f(center, order);
  const json& terms = require(j, "terms", path);
  if (!terms.is_array()) schema_error(join(path, "terms"), "expected an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = join(join(path, "terms"), t);
    const json& e = require(terms[t], "exp", tp);
    if (!e.is_array() || e.size() != dim) schema_error(join(tp, "exp"), "expected " + std::to_string(dim) + " exponents");
    MultiIndex nu(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!e[k].is_number_unsigned()) schema_error(join(join(tp, "exp"), k), "expected a non-negative integer");
      nu[k] = e[k].get<std::uint32_t>();
    }
    mpq_class re = terms[t].contains("re") ? parse_rational(terms[t]["re"], join(tp, "re")) : mpq_class(0);
    mpq_class im = terms[t].contains("im") ? parse_rational(terms[t]["im"], join(tp, "im")) : mpq_class(0);
    f.add_term(nu, GaussianRational(re, im));
  }
  return f;
}

json series_to_json(const ExactSeries& f) { return series_json_impl(f, true); }
json series_to_json(const FloatSeries& f) { return series_json_impl(f, false); }

Expr parse_expr(const json& j, const std::string& path) {
  if (j.is_number() || j.is_string() || j.is_array()) return Expr::constant(parse_scalar(j, path));
  if (!j.is_object()) schema_error(path, "expected an expression");
  if (j.contains("var")) {
    const json& v = j["var"];
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) schema_error(join(path, "var"), "expected a 1-based index");
    return Expr::var(v.get<std::size_t>() - 1);
  }
  if (j.contains("const")) return Expr::constant(parse_scalar(j["const"], join(path, "const")));
  const json& op_j = require(j, "op", path);
  if (!op_j.is_string()) schema_error(join(path, "op"), "expected a string");
  const std::string op = op_j.get<std::string>();
  const json& args_j = require(j, "args", path);
  if (!args_j.is_array() || args_j.empty()) schema_error(join(path, "args"), "expected a non-empty array");
  const std::string ap = join(path, "args");
  const auto unary = [&]() -> Expr {
    if (args_j.size() != 1) schema_error(ap, "\"" + op + "\" takes one argument");
    return parse_expr(args_j[0], join(ap, 0));
  };
  if (op == "add" || op == "mul") {
    std::vector<Expr> args;
    for (std::size_t i = 0; i < args_j.size(); ++i) args.push_back(parse_expr(args_j[i], join(ap, i)));
    return op == "add" ? Expr::add(std::move(args)) : Expr::mul(std::move(args));
  }
  if (op == "neg") return Expr::neg(unary());
  if (op == "inv") return Expr::inv(unary());
  if (op == "pow") {
    if (args_j.size() != 2 || !args_j[1].is_number_integer()) schema_error(ap, "\"pow\" takes [base, integer exponent]");
    return Expr::pow(parse_expr(args_j[0], join(ap, 0)), args_j[1].get<long>());
  }
  schema_error(join(path, "op"), "unknown operator \"" + op + "\"");
}

Cuboid parse_cuboid(const json& j, const std::string& path) {
  const auto intervals = [&](const char* key) {
    const json& a = require(j, key, path);
    const std::string p = join(path, key);
    if (!a.is_array() || a.empty()) schema_error(p, "expected a non-empty array of [lo, hi]");
    std::vector<Interval> out;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!a[k].is_array() || a[k].size() != 2 || !a[k][0].is_number() || !a[k][1].is_number())
        schema_error(join(p, k), "expected [lo, hi]");
      out.push_back({a[k][0].get<double>(), a[k][1].get<double>()});
    }
    return out;
  };
  auto re = intervals("re");
  auto im = intervals("im");
  if (re.size() != im.size()) schema_error(path, "\"re\" and \"im\" must list the same number of axes");
  try {
    return Cuboid(std::move(re), std::move(im));
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

json cuboid_to_json(const Cuboid& c) {
  json re = json::array(), im = json::array();
  for (std::size_t k = 0; k < c.ambient_dim(); ++k) {
    re.push_back({c.re(k).lo, c.re(k).hi});
    im.push_back({c.im(k).lo, c.im(k).hi});
  }
  return {{"re", re}, {"im", im}};
}

QuadratureSpec parse_quadrature(const json& j, const std::string& path) {
  QuadratureSpec q;
  if (j.is_null()) return q;
  if (!j.is_object()) schema_error(path, "expected an object");
  const auto integer = [&](const char* key, int& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer() || j[key].get<long>() <= 0) schema_error(join(path, key), "expected a positive integer");
    out = j[key].get<int>();
  };
  integer("panels", q.panels);
  integer("nodes", q.nodes);
  integer("max_depth", q.max_depth);
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number() || !(j["tolerance"].get<double>() > 0))
      schema_error(join(path, "tolerance"), "expected a positive number");
    q.tolerance = j["tolerance"].get<double>();
  }
  if (j.contains("adaptive")) {
    if (!j["adaptive"].is_boolean()) schema_error(join(path, "adaptive"), "expected a boolean");
    q.adaptive = j["adaptive"].get<bool>();
  }
  return q;
}

json quadrature_to_json(const QuadratureSpec& q) {
  return {{"panels", q.panels}, {"nodes", q.nodes}, {"tolerance", q.tolerance}, {"max_depth", q.max_depth},
          {"adaptive", q.adaptive}};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"passed", c.passed}});
  return {{"passed", r.passed()}, {"checks", checks}};
}

}  // namespace okakit::cli

#include "okakit/cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "okakit/chi_merge.hpp"
#include "okakit/cli/json_io.hpp"
#include "okakit/cousin.hpp"
#include "okakit/division.hpp"
#include "okakit/error.hpp"
#include "okakit/syzygy.hpp"

namespace okakit::cli {

namespace {

struct Outcome {
  json result;
  VerificationReport verification;
  std::string csv;
};

json pair_to_json(const IndexPair& p) { return json::array({p.i + 1, p.j + 1}); }

template <class S>
TruncatedSeries<S> convert(const ExactSeries& f) {
  if constexpr (std::is_same_v<S, GaussianRational>)
    return f;
  else
    return to_floating(f);
}

template <class S>
json vector_to_json(const SyzygyVector<S>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(series_to_json(c));
  return out;
}

template <class S>
double vector_distance(const SyzygyVector<S>& a, const SyzygyVector<S>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, (a[k] - b[k]).max_magnitude());
  return d;
}

template <class S>
bool vectors_equal(const SyzygyVector<S>& a, const SyzygyVector<S>& b, double eps) {
  if (a.size() != b.size()) return false;
  if constexpr (std::is_same_v<S, GaussianRational>) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(a[k] - b[k]).is_zero()) return false;
    return true;
  } else {
    return vector_distance(a, b) <= eps;
  }
}

std::vector<ExactSeries> parse_series_list(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a non-empty array of series");
  std::vector<ExactSeries> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_series(j[k], path + "/" + std::to_string(k)));
  return out;
}

std::size_t get_count(const json& j, const char* key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_number_unsigned()) schema_error(path + "/" + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

template <class S>
Outcome divide_impl(const ExactSeries& exact, std::size_t q, double eps) {
  const TruncatedSeries<S> f = convert<S>(exact);
  const CoordinateSubspace s(f.dim(), q);
  const auto cv = ideal_cofactors(f, s);
  Outcome out;
  json cofactors = json::array();
  for (const auto& h : cv.cofactors) cofactors.push_back(series_to_json(h));
  const auto recombined = recombine(cv);
  bool free = true;
  for (std::size_t k = 0; k < q; ++k) free = free && !cv.remainder.involves_axis(k);
  out.result = {{"cofactors", cofactors}, {"remainder", series_to_json(cv.remainder)}};
  if constexpr (std::is_same_v<S, GaussianRational>) {
    const bool exact_ok = recombined == f;
    out.result["member"] = cv.remainder.is_zero();
    out.result["recombination_exact"] = exact_ok;
    out.verification.add_flag("recombination_exact", exact_ok);
  } else {
    const double residual = (recombined - f).max_magnitude();
    out.result["member"] = is_member(f, s, eps);
    out.result["recombination_residual"] = residual;
    out.verification.add("recombination_residual", residual, eps * std::max(1.0, f.max_magnitude()));
  }
  out.verification.add_flag("remainder_free_of_generators", free);
  return out;
}

Outcome run_divide(const json& in, const RunConfig& cfg) {
  const ExactSeries f = parse_series(require(in, "series", ""), "/series");
  const std::size_t q = get_count(in, "q", "");
  if (q > f.dim()) schema_error("/q", "q exceeds the series dimension");
  if (cfg.backend == "floating") return divide_impl<Complex>(f, q, cfg.tolerance.value_or(1e-12));
  return divide_impl<GaussianRational>(f, q, 0.0);
}

template <class S>
Outcome syzygy_impl(const json& in, const std::string& mode, double eps) {
  Outcome out;
  if (mode == "trivial") {
    const std::size_t p = get_count(in, "p", "");
    const std::size_t dim = in.contains("dim") ? get_count(in, "dim", "") : p;
    if (dim == 0) schema_error("/dim", "expected a positive integer");
    json basis = json::array();
    double worst = 0.0;
    for (const auto& t : trivial_solutions<S>(static_cast<long>(p), dim)) {
      worst = std::max(worst, verify_relation(t.vector, eps).residual.max_magnitude());
      basis.push_back({{"pair", pair_to_json(t.pair)}, {"vector", vector_to_json(t.vector)}});
    }
    out.result = {{"basis", basis}};
    out.verification.add("annihilation_residual", worst, eps);
    return out;
  }

  if (mode == "decompose") {
    SyzygyVector<S> v;
    for (const auto& f : parse_series_list(require(in, "vector", ""), "/vector")) v.push_back(convert<S>(f));
    const auto dec = decompose_relation(v, eps);
    json coeffs = json::array();
    for (const auto& [pair, b] : dec.coefficients)
      coeffs.push_back({{"pair", pair_to_json(pair)}, {"coefficient", series_to_json(b)}});
    const auto back = recombine_trivial(dec.coefficients, v.size(), v.front().center());
    const double residual = vector_distance(back, v);
    out.result = {{"coefficients", coeffs}, {"rounds", dec.rounds}};
    out.result["verification"] = {{"recombined_equals_input", vectors_equal(back, v, eps)}, {"residual_norm", residual}};
    out.verification.add_flag("recombined_equals_input", vectors_equal(back, v, eps));
    return out;
  }

  if (mode == "general") {
    GeneratorPresentation<S> pres;
    pres.q = get_count(in, "q", "");
    const std::size_t dim = get_count(in, "dim", "");
    pres.center.assign(dim, ScalarTraits<S>::zero());
    const json& rows = in.contains("a") ? in["a"] : json::array();
    if (!rows.is_array()) schema_error("/a", "expected an array of rows");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<TruncatedSeries<S>> row;
      for (const auto& f : parse_series_list(rows[r], "/a/" + std::to_string(r))) row.push_back(convert<S>(f));
      pres.a.push_back(std::move(row));
    }
    pres.count = pres.q + pres.a.size();
    const auto basis = general_syzygy_generators(pres);
    const auto sigma = pres.generators();
    double worst = 0.0;
    json tau = json::array(), phi = json::array();
    for (const auto& [pair, v] : basis.tau) {
      worst = std::max(worst, verify_relation(v, sigma, eps).residual.max_magnitude());
      tau.push_back({{"pair", pair_to_json(pair)}, {"vector", vector_to_json(v)}});
    }
    for (const auto& [i, v] : basis.phi) {
      worst = std::max(worst, verify_relation(v, sigma, eps).residual.max_magnitude());
      phi.push_back({{"index", i + 1}, {"vector", vector_to_json(v)}});
    }
    out.result = {{"tau", tau}, {"phi", phi}};
    out.verification.add("annihilation_residual", worst, eps);
    if (in.contains("relation")) {
      SyzygyVector<S> f;
      for (const auto& s : parse_series_list(in["relation"], "/relation")) f.push_back(convert<S>(s));
      const auto dec = decompose_general_relation(f, pres, eps);
      json tc = json::array(), pc = json::array();
      for (const auto& [pair, b] : dec.tau_coefficients)
        tc.push_back({{"pair", pair_to_json(pair)}, {"coefficient", series_to_json(b)}});
      for (std::size_t i = 0; i < dec.phi_coefficients.size(); ++i)
        pc.push_back({{"index", pres.q + i + 1}, {"coefficient", series_to_json(dec.phi_coefficients[i])}});
      const auto back = recombine_general(dec, pres);
      out.result["decomposition"] = {{"tau_coefficients", tc}, {"phi_coefficients", pc}};
      out.result["verification"] = {{"recombined_equals_input", vectors_equal(back, f, eps)},
                                    {"residual_norm", vector_distance(back, f)}};
      out.verification.add_flag("recombined_equals_input", vectors_equal(back, f, eps));
    }
    return out;
  }
  schema_error("/mode", "expected trivial, decompose or general");
}

Outcome run_syzygy(const json& in, const RunConfig& cfg) {
  const json& mode = require(in, "mode", "");
  if (!mode.is_string()) schema_error("/mode", "expected a string");
  if (cfg.backend == "floating") return syzygy_impl<Complex>(in, mode.get<std::string>(), cfg.tolerance.value_or(1e-12));
  return syzygy_impl<GaussianRational>(in, mode.get<std::string>(), 0.0);
}

QuadratureSpec quadrature_of(const json& in, const RunConfig& cfg) {
  QuadratureSpec q = parse_quadrature(in.contains("quadrature") ? in["quadrature"] : json(), "/quadrature");
  if (cfg.panels) q.panels = *cfg.panels;
  return q;
}

int grid_of(const json& in, int fallback) {
  if (!in.contains("grid")) return fallback;
  if (!in["grid"].is_number_integer() || in["grid"].get<int>() < 2) schema_error("/grid", "expected an integer >= 2");
  return in["grid"].get<int>();
}

std::string csv_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

Outcome run_cousin_split(const json& in, const RunConfig& cfg) {
  const json& g = require(in, "geometry", "");
  const Cuboid base = parse_cuboid(require(g, "cuboid", "/geometry"), "/geometry/cuboid");
  const json& seam = require(g, "seam", "/geometry");
  const json& margin = require(g, "margin", "/geometry");
  if (!seam.is_number() || !margin.is_number()) schema_error("/geometry", "seam and margin must be numbers");
  const SplitGeometry geometry{base, seam.get<double>(), margin.get<double>()};
  const std::size_t n = base.ambient_dim();
  const Expr phi_expr = parse_expr(require(in, "function", ""), "/function");
  if (phi_expr.arity() > n) schema_error("/function", "uses variables beyond the cuboid dimension");
  const QuadratureSpec quad = quadrature_of(in, cfg);
  const int grid = grid_of(in, 11);
  const double tol = cfg.tolerance.value_or(1e-8);

  const Evaluable phi = phi_expr.to_evaluable(n);
  const CousinPair pair = cousin_split(phi, geometry, quad);

  Outcome out;
  std::ostringstream csv;
  csv << "re,im,phi1_re,phi1_im,phi2_re,phi2_im,residual\n";
  const Cuboid overlap = geometry.overlap();
  const Interval re = overlap.re(n - 1), im = overlap.im(n - 1);
  std::vector<Complex> z = base.center();
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      z[n - 1] = {re.lo + re.width() * i / (grid - 1), im.lo + im.width() * j / (grid - 1)};
      const Complex a = pair.left(z), b = pair.right(z);
      const double r = std::abs(a - b - phi(z));
      worst = std::max(worst, r);
      csv << csv_number(z[n - 1].real()) << ',' << csv_number(z[n - 1].imag()) << ',' << csv_number(a.real()) << ','
          << csv_number(a.imag()) << ',' << csv_number(b.real()) << ',' << csv_number(b.imag()) << ',' << csv_number(r)
          << '\n';
    }
  }
  const double morera_left = morera_residual(pair.left, geometry.left_slab(), 4);
  const double morera_right = morera_residual(pair.right, geometry.right_slab(), 4);
  out.result = {{"samples", grid * grid},
                {"max_jump_residual", worst},
                {"morera_left", morera_left},
                {"morera_right", morera_right},
                {"quadrature", quadrature_to_json(quad)}};
  out.verification.add("jump_residual", worst, tol);
  out.verification.add("morera_left", morera_left, tol);
  out.verification.add("morera_right", morera_right, tol);
  out.csv = csv.str();
  return out;
}

SlabPartition parse_partition(const json& in) {
  const Cuboid e = parse_cuboid(require(in, "cuboid", ""), "/cuboid");
  const json& b = in.contains("breakpoints") ? in["breakpoints"] : json::array();
  if (!b.is_array()) schema_error("/breakpoints", "expected an array of numbers");
  std::vector<double> ts;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (!b[k].is_number()) schema_error("/breakpoints/" + std::to_string(k), "expected a number");
    ts.push_back(b[k].get<double>());
  }
  try {
    return make_partition(e, ts);
  } catch (const Error& err) {
    schema_error("/breakpoints", err.what());
  }
}

void parse_common(const json& in, const RunConfig& cfg, ChiProblem& p) {
  p.quadrature = quadrature_of(in, cfg);
  if (in.contains("margin")) {
    if (!in["margin"].is_number()) schema_error("/margin", "expected a number");
    p.margin = in["margin"].get<double>();
  }
  if (in.contains("tolerances")) {
    const json& t = in["tolerances"];
    const auto number = [&](const char* key, double& out) {
      if (!t.contains(key)) return;
      if (!t[key].is_number()) schema_error(std::string("/tolerances/") + key, "expected a number");
      out = t[key].get<double>();
    };
    number("morera", p.tolerances.morera);
    number("residue", p.tolerances.residue);
    number("subspace", p.tolerances.subspace);
    if (t.contains("grid")) {
      if (!t["grid"].is_number_integer()) schema_error("/tolerances/grid", "expected an integer");
      p.tolerances.morera_grid = t["grid"].get<int>();
    }
  }
  if (cfg.tolerance) p.tolerances.morera = p.tolerances.subspace = *cfg.tolerance;
}

MergeOrder order_of(const json& in) {
  if (!in.contains("order")) return MergeOrder::LeftToRight;
  if (in["order"] == "left-to-right") return MergeOrder::LeftToRight;
  if (in["order"] == "right-to-left") return MergeOrder::RightToLeft;
  schema_error("/order", "expected left-to-right or right-to-left");
}

Outcome solve_and_report(const ChiProblem& problem, const json& in) {
  const auto solutions = solve_chain(problem, order_of(in));
  Outcome out;
  json chains = json::array();
  for (const auto& s : solutions) {
    chains.push_back({{"first_slab", s.chain.first + 1},
                      {"last_slab", s.chain.last + 1},
                      {"region", cuboid_to_json(s.region)},
                      {"verification", report_to_json(s.report)}});
    for (const auto& c : s.report.checks)
      out.verification.checks.push_back(
          {"chain[" + std::to_string(s.chain.first + 1) + "-" + std::to_string(s.chain.last + 1) + "]." + c.name,
           c.value, c.threshold, c.passed});
  }
  out.result = {{"chains", chains}, {"margin", problem.seam_margin()}, {"quadrature", quadrature_to_json(problem.quadrature)}};

  const int grid = grid_of(in, 21);
  const std::size_t n = problem.dim();
  std::ostringstream csv;
  csv << "chain,re,im,f_re,f_im\n";
  for (const auto& s : solutions) {
    std::vector<Complex> z = s.region.center();
    for (std::size_t k = 0; k < problem.subspace.codim() && problem.kind == ProblemKind::Extension; ++k) z[k] = Complex{};
    const Interval re = s.region.re(n - 1), im = s.region.im(n - 1);
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        z[n - 1] = {re.lo + re.width() * i / (grid - 1), im.lo + im.width() * j / (grid - 1)};
        const Complex f = s.global(z);
        csv << s.chain.first + 1 << ',' << csv_number(z[n - 1].real()) << ',' << csv_number(z[n - 1].imag()) << ','
            << csv_number(f.real()) << ',' << csv_number(f.imag()) << '\n';
      }
    }
  }
  out.csv = csv.str();
  return out;
}

Outcome run_cousin1(const json& in, const RunConfig& cfg) {
  ChiProblem p;
  p.kind = ProblemKind::Cousin1;
  p.partition = parse_partition(in);
  parse_common(in, cfg, p);
  const json& slabs = require(in, "slabs", "");
  if (!slabs.is_array() || slabs.size() != p.partition.size())
    schema_error("/slabs", "expected one entry per slab (" + std::to_string(p.partition.size()) + ")");
  for (std::size_t a = 0; a < slabs.size(); ++a) {
    const std::string sp = "/slabs/" + std::to_string(a);
    PrincipalPartData data;
    const json& poles = slabs[a].contains("poles") ? slabs[a]["poles"] : json::array();
    if (!poles.is_array()) schema_error(sp + "/poles", "expected an array");
    for (std::size_t t = 0; t < poles.size(); ++t) {
      const std::string tp = sp + "/poles/" + std::to_string(t);
      PoleTerm term;
      if (poles[t].contains("order")) {
        if (!poles[t]["order"].is_number_unsigned() || poles[t]["order"].get<unsigned>() == 0)
          schema_error(tp + "/order", "expected a positive integer");
        term.order = poles[t]["order"].get<unsigned>();
      }
      term.coefficient = parse_expr(require(poles[t], "coefficient", tp), tp + "/coefficient");
      term.locus = parse_expr(require(poles[t], "locus", tp), tp + "/locus");
      data.terms.push_back(std::move(term));
    }
    p.principal_parts.push_back(std::move(data));
  }
  return solve_and_report(p, in);
}

Outcome run_jokuiko(const json& in, const RunConfig& cfg) {
  ChiProblem p;
  p.kind = ProblemKind::Extension;
  p.partition = parse_partition(in);
  parse_common(in, cfg, p);
  const std::size_t q = get_count(in, "q", "");
  if (q > p.dim()) schema_error("/q", "q exceeds the dimension");
  p.subspace = CoordinateSubspace(p.dim(), q);
  p.target = parse_expr(require(in, "target", ""), "/target");
  if (in.contains("perturbations")) {
    const json& ps = in["perturbations"];
    if (!ps.is_array()) schema_error("/perturbations", "expected an array");
    for (std::size_t a = 0; a < ps.size(); ++a)
      p.perturbations.push_back(parse_expr(ps[a], "/perturbations/" + std::to_string(a)));
  }
  return solve_and_report(p, in);
}

json base_report(const RunConfig& cfg, const json& input) {
  json config{{"backend", cfg.backend}};
  config["tolerance"] = cfg.tolerance ? json(*cfg.tolerance) : json();
  config["panels"] = cfg.panels ? json(*cfg.panels) : json();
  return {{"command", cfg.command}, {"version", OKAKIT_VERSION}, {"seed", cfg.seed}, {"config", config},
          {"input", input}};
}

}  // namespace

RunResult run(const RunConfig& cfg, const json& input) {
  RunResult rr;
  rr.report = base_report(cfg, input);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (cfg.backend != "exact" && cfg.backend != "floating") schema_error("--backend", "expected exact or floating");
    if (cfg.tolerance && !(*cfg.tolerance > 0)) schema_error("--tol", "tolerance must be positive");
    if (cfg.panels && *cfg.panels <= 0) schema_error("--panels", "panel count must be positive");
    if (cfg.command != "selftest" && !input.is_object()) schema_error("", "expected a JSON object");
    Outcome out;
    if (cfg.command == "divide") {
      out = run_divide(input, cfg);
    } else if (cfg.command == "syzygy") {
      out = run_syzygy(input, cfg);
    } else if (cfg.command == "cousin-split") {
      out = run_cousin_split(input, cfg);
    } else if (cfg.command == "cousin1") {
      out = run_cousin1(input, cfg);
    } else if (cfg.command == "jokuiko") {
      out = run_jokuiko(input, cfg);
    } else if (cfg.command == "selftest") {
      json st = selftest(cfg.seed, cfg.tolerance);
      out.result = st["result"];
      for (const auto& c : st["checks"])
        out.verification.checks.push_back({c["name"], c["value"], c["threshold"], c["passed"]});
    } else {
      schema_error("", "unknown command \"" + cfg.command + "\"");
    }
    rr.report["result"] = std::move(out.result);
    rr.report["verification"] = report_to_json(out.verification);
    rr.csv = std::move(out.csv);
    rr.exit_code = out.verification.passed() ? 0 : 1;
    if (rr.exit_code != 0) rr.diagnostic = "verification failed";
  } catch (const Error& e) {
    rr.exit_code = e.code() == ErrorCode::SchemaViolation ? 2 : 1;
    rr.diagnostic = e.what();
    rr.report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (const auto* nr = dynamic_cast<const NotARelation<GaussianRational>*>(&e))
      rr.report["error"]["residual"] = series_to_json(nr->residual());
    else if (const auto* nf = dynamic_cast<const NotARelation<Complex>*>(&e))
      rr.report["error"]["residual"] = series_to_json(nf->residual());
    rr.report["verification"] = {{"passed", false}, {"checks", json::array()}};
  } catch (const json::exception& e) {
    rr.exit_code = 2;
    rr.diagnostic = std::string("SchemaViolation: ") + e.what();
    rr.report["error"] = {{"code", "SchemaViolation"}, {"message", e.what()}};
    rr.report["verification"] = {{"passed", false}, {"checks", json::array()}};
  } catch (const std::exception& e) {
    rr.exit_code = 1;
    rr.diagnostic = e.what();
    rr.report["error"] = {{"code", "InternalError"}, {"message", e.what()}};
    rr.report["verification"] = {{"passed", false}, {"checks", json::array()}};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rr.report["timings_ms"] = {{"total", ms}};
  return rr;
}

int run(const RunConfig& cfg) {
  json input = json::object();
  if (cfg.command != "selftest" || cfg.input) {
    if (!cfg.input) {
      std::cerr << "okakit " << cfg.command << ": --input is required\n";
      return 2;
    }
    std::ifstream file(*cfg.input);
    if (!file) {
      std::cerr << "okakit " << cfg.command << ": cannot open " << *cfg.input << "\n";
      return 2;
    }
    try {
      input = json::parse(file);
    } catch (const json::parse_error& e) {
      std::cerr << "okakit " << cfg.command << ": malformed JSON in " << *cfg.input << ": " << e.what() << "\n";
      return 2;
    }
  }

  RunResult rr = run(cfg, input);
  if (!rr.diagnostic.empty()) std::cerr << "okakit " << cfg.command << ": " << rr.diagnostic << "\n";
  const std::string text = rr.report.dump(2) + "\n";
  if (cfg.output) {
    std::ofstream out(*cfg.output);
    if (!out) {
      std::cerr << "okakit: cannot write " << *cfg.output << "\n";
      return 1;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (cfg.csv && !rr.csv.empty()) {
    std::ofstream out(*cfg.csv);
    if (!out) {
      std::cerr << "okakit: cannot write " << *cfg.csv << "\n";
      return 1;
    }
    out << rr.csv;
  }
  return rr.exit_code;
}

int main(int argc, char** argv) {
  CLI::App app{"Coordinate-ideal division, syzygies, Cousin splits and slab merging"};
  app.require_subcommand(1);
  app.set_version_flag("--version", OKAKIT_VERSION);

  RunConfig cfg;
  std::string input, output, csv;
  double tol = 0.0;
  int panels = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Problem instance (JSON)")->check(CLI::ExistingFile);
    sub->add_option("--output", output, "Report path (default: stdout)");
    sub->add_option("--csv", csv, "Sample-grid CSV path");
    sub->add_option("--tol", tol, "Verification tolerance override")->check(CLI::PositiveNumber);
    sub->add_option("--panels", panels, "Initial quadrature panels per segment")->check(CLI::PositiveNumber);
    sub->add_option("--backend", cfg.backend, "Coefficient backend")->check(CLI::IsMember({"exact", "floating"}));
    sub->add_option("--seed", cfg.seed, "Random seed (recorded in the report)");
  };
  for (const char* name : {"divide", "syzygy", "cousin-split", "cousin1", "jokuiko", "selftest"}) {
    static const std::map<std::string, std::string> help{
        {"divide", "Divide a series by z_1..z_q with explicit cofactors"},
        {"syzygy", "Trivial solutions, relation decomposition, general generators"},
        {"cousin-split", "Split a function across a vertical segment"},
        {"cousin1", "Solve a Cousin-I (Mittag-Leffler) instance on slabs"},
        {"jokuiko", "Extend a function from a coordinate subspace across slabs"},
        {"selftest", "Run the built-in randomized battery"}};
    add_common(app.add_subcommand(name, help.at(name)));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--input")) cfg.input = input;
  if (sub->count("--output")) cfg.output = output;
  if (sub->count("--csv")) cfg.csv = csv;
  if (sub->count("--tol")) cfg.tolerance = tol;
  if (sub->count("--panels")) cfg.panels = panels;
  return run(cfg);
}

}  // namespace okakit::cli

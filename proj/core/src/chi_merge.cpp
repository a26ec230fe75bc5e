#include "okakit/chi_merge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "okakit/error.hpp"
#include "okakit/parallel.hpp"

namespace okakit {

namespace {

std::size_t generator_count(const ChiProblem& p) {
  return p.kind == ProblemKind::Cousin1 ? 1 : p.subspace.codim();
}

Cuboid slab_range(const ChiProblem& p, std::size_t first, std::size_t last) {
  const auto& ts = p.partition.breakpoints();
  const std::size_t n = p.dim();
  return p.partition.base().with_re(n - 1, {ts[first], ts[last + 1]});
}

/// z' sample points for data depending on the parameters.
std::vector<std::vector<Complex>> parameter_samples(const Cuboid& box, std::size_t count) {
  const std::size_t n = box.ambient_dim();
  if (n == 1) return {std::vector<Complex>(1)};
  std::vector<std::vector<Complex>> out{box.center()};
  for (const auto& u : halton_points(count, 2 * (n - 1))) {
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const Interval re = box.re(k), im = box.im(k);
      z[k] = {re.lo + u[2 * k] * re.width(), im.lo + u[2 * k + 1] * im.width()};
    }
    out.push_back(std::move(z));
  }
  return out;
}

/// Halton points of a cuboid (every axis sampled, degenerate intervals fixed).
std::vector<std::vector<Complex>> box_samples(const Cuboid& box, std::size_t count) {
  const std::size_t n = box.ambient_dim();
  std::vector<std::vector<Complex>> out;
  for (const auto& u : halton_points(count, 2 * n)) {
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Interval re = box.re(k), im = box.im(k);
      z[k] = {re.lo + u[2 * k] * re.width(), im.lo + u[2 * k + 1] * im.width()};
    }
    out.push_back(std::move(z));
  }
  return out;
}

double radical_inverse(std::size_t index, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

double ChiProblem::seam_margin() const { return margin.value_or(0.05 * partition.min_width()); }

void ChiProblem::validate() const {
  const std::size_t n = dim();
  const std::size_t slabs = partition.size();
  if (n == 0 || slabs == 0) throw Error(ErrorCode::InvalidProblem, "problem needs a non-empty partition");
  const double delta = seam_margin();
  if (!(delta > 0) || !(delta < 0.5 * partition.min_width()))
    throw Error(ErrorCode::InvalidProblem, "margin must be positive and below half the narrowest slab width");
  quadrature.validate();
  if (!(tolerances.morera > 0 && tolerances.residue > 0 && tolerances.subspace > 0) || tolerances.morera_grid < 1)
    throw Error(ErrorCode::InvalidProblem, "tolerances must be positive");

  if (kind == ProblemKind::Cousin1) {
    if (principal_parts.size() != slabs)
      throw Error(ErrorCode::InvalidProblem, "need one principal-part datum per slab");
    for (const auto& data : principal_parts) {
      for (const auto& t : data.terms) {
        if (t.order < 1) throw Error(ErrorCode::InvalidProblem, "pole order must be at least 1");
        if (t.coefficient.arity() > n || t.locus.arity() > n)
          throw Error(ErrorCode::InvalidProblem, "pole term uses more variables than the dimension");
        if (t.coefficient.involves_axis(n - 1) || t.locus.involves_axis(n - 1))
          throw Error(ErrorCode::InvalidProblem, "pole coefficients and loci may only depend on z_1..z_{n-1}");
      }
    }
    return;
  }

  if (subspace.ambient_dim() != n) throw Error(ErrorCode::InvalidProblem, "subspace dimension differs from the cuboid");
  if (target.arity() > n) throw Error(ErrorCode::InvalidProblem, "target uses more variables than the dimension");
  for (std::size_t k = 0; k < subspace.codim(); ++k)
    if (target.involves_axis(k))
      throw Error(ErrorCode::InvalidProblem, "target must not depend on z_" + std::to_string(k + 1));
  if (!perturbations.empty() && perturbations.size() != slabs)
    throw Error(ErrorCode::InvalidProblem, "need one perturbation per slab or none");
  for (const auto& p : perturbations) {
    if (p.arity() > n) throw Error(ErrorCode::InvalidProblem, "perturbation uses more variables than the dimension");
    if (!p.is_polynomial()) throw Error(ErrorCode::InvalidProblem, "perturbations must be polynomials");
  }
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::add(std::string name, double value, double threshold) {
  checks.push_back({std::move(name), value, threshold, value <= threshold});
}

void VerificationReport::add_flag(std::string name, bool ok) {
  checks.push_back({std::move(name), ok ? 0.0 : 1.0, 0.0, ok});
}

IdealWitness ideal_witness(const ExactSeries& h, const CoordinateSubspace& s) {
  auto cv = ideal_cofactors(h, s);
  if (!cv.remainder.is_zero())
    throw Error(ErrorCode::NotInIdeal, "seam difference does not vanish on the subspace");
  IdealWitness w;
  w.recombination_exact = recombine(cv) == h;
  w.cofactors = std::move(cv.cofactors);
  return w;
}

Evaluable PartialSolution::branch(std::size_t alpha, std::size_t dim, ProblemKind kind) const {
  const std::size_t i = alpha - first;
  Evaluable v = locals.at(i);
  for (std::size_t j = 0; j < cofactors[i].size(); ++j)
    v = v + (kind == ProblemKind::Cousin1 ? cofactors[i][j] : cofactors[i][j].times_coordinate(j));
  (void)dim;
  return v.with_domain(locals[i].domain());
}

Evaluable local_solution(const ChiProblem& problem, std::size_t alpha) {
  const std::size_t n = problem.dim();
  const Cuboid slab = problem.partition.slab(alpha);
  const double delta = problem.seam_margin();
  const Cuboid domain = slab.widened(n - 1, delta, 0.0);
  const std::string tag = "local[" + std::to_string(alpha + 1) + "]";

  if (problem.kind == ProblemKind::Extension) {
    Evaluable g = problem.target.to_evaluable(n);
    if (!problem.perturbations.empty()) g = g + problem.perturbations[alpha].to_evaluable(n);
    return g.with_domain(domain).with_tag(tag);
  }

  const auto& terms = problem.principal_parts.at(alpha).terms;
  const Interval re = slab.re(n - 1), im = slab.im(n - 1);
  for (const auto& zp : parameter_samples(slab, 32)) {
    for (const auto& t : terms) {
      const Complex p = t.locus.evaluate(zp);
      const bool inside = p.real() > re.lo + delta && p.real() < re.hi - delta && p.imag() > im.lo && p.imag() < im.hi;
      if (!inside)
        throw Error(ErrorCode::PoleTooCloseToSeam, "pole at " + std::to_string(p.real()) + "+" +
                                                       std::to_string(p.imag()) + "i is not inside slab " +
                                                       std::to_string(alpha + 1) + " by the margin");
    }
  }
  if (terms.empty()) return Evaluable::zero(n).with_domain(domain).with_tag(tag);
  auto f = [terms, n](std::span<const Complex> z) {
    Complex s{};
    for (const auto& t : terms) {
      const Complex d = z[n - 1] - t.locus.evaluate(z);
      Complex pk{1.0, 0.0};
      for (unsigned k = 0; k < t.order; ++k) pk *= d;
      s += t.coefficient.evaluate(z) / pk;
    }
    return s;
  };
  return Evaluable(n, f, domain, tag);
}

Evaluable seam_difference(const Evaluable& a, const Evaluable& b, const Cuboid& overlap, double tolerance, int grid) {
  Evaluable h = (b - a).with_domain(overlap);
  const double r = morera_residual(h, overlap, grid);
  if (!(r <= tolerance))
    throw Error(ErrorCode::NotHolomorphicDifference,
                "seam difference has Morera residual " + std::to_string(r) + " above " + std::to_string(tolerance));
  return h;
}

PartialSolution local_partial(const ChiProblem& problem, std::size_t alpha) {
  const std::size_t n = problem.dim();
  PartialSolution p;
  p.first = alpha;
  p.locals.push_back(local_solution(problem, alpha));
  ExactSeries ideal(n);
  if (problem.kind == ProblemKind::Extension && !problem.perturbations.empty())
    ideal = problem.perturbations[alpha].to_polynomial(n);
  p.ideal_parts.push_back(std::move(ideal));
  p.cofactors.emplace_back(generator_count(problem), Evaluable::zero(n));
  return p;
}

PartialSolution merge_pair(const PartialSolution& left, const PartialSolution& right, const ChiProblem& problem) {
  if (left.last() + 1 != right.first) throw Error(ErrorCode::InvalidProblem, "partial solutions are not adjacent");
  const std::size_t n = problem.dim();
  const SplitGeometry geometry{slab_range(problem, left.first, right.last()), problem.partition.seam(left.last()),
                               problem.seam_margin()};
  geometry.validate();

  const Evaluable a = left.branch(left.last(), n, problem.kind);
  const Evaluable b = right.branch(right.first, n, problem.kind);
  const Evaluable h =
      seam_difference(a, b, geometry.overlap(), problem.tolerances.morera, problem.tolerances.morera_grid);

  PartialSolution merged;
  merged.first = left.first;
  merged.witnesses = left.witnesses;

  std::vector<Evaluable> witness;
  if (problem.kind == ProblemKind::Cousin1) {
    witness.push_back(h);
  } else {
    IdealWitness w = ideal_witness(right.ideal_parts.front() - left.ideal_parts.back(), problem.subspace);
    for (std::size_t j = 0; j < w.cofactors.size(); ++j)
      witness.push_back(Evaluable::polynomial(w.cofactors[j]) + (right.cofactors.front()[j] - left.cofactors.back()[j]));
    merged.witnesses.push_back(std::move(w));
  }
  merged.witnesses.insert(merged.witnesses.end(), right.witnesses.begin(), right.witnesses.end());

  std::vector<CousinPair> splits;
  for (const auto& a_j : witness) splits.push_back(cousin_split(a_j, geometry, problem.quadrature));

  const auto absorb = [&](const PartialSolution& part, bool is_left) {
    for (std::size_t i = 0; i < part.locals.size(); ++i) {
      merged.locals.push_back(part.locals[i]);
      merged.ideal_parts.push_back(part.ideal_parts[i]);
      std::vector<Evaluable> cs = part.cofactors[i];
      for (std::size_t j = 0; j < cs.size(); ++j) cs[j] = cs[j] + (is_left ? splits[j].left : splits[j].right);
      merged.cofactors.push_back(std::move(cs));
    }
  };
  absorb(left, true);
  absorb(right, false);
  return merged;
}

ChiSolution assemble(const PartialSolution& merged, const ChiProblem& problem, const ConnectivityChain& chain) {
  const std::size_t n = problem.dim();
  ChiSolution sol;
  sol.chain = chain;
  sol.region = slab_range(problem, chain.first, chain.last);
  for (std::size_t a = chain.first; a <= chain.last; ++a) {
    sol.branches.push_back(merged.branch(a, n, problem.kind));
    sol.locals.push_back(merged.locals[a - merged.first]);
  }
  sol.witnesses = merged.witnesses;
  auto branches = sol.branches;
  const SlabPartition partition = problem.partition;
  sol.global = Evaluable(
      n,
      [branches, partition, chain, n](std::span<const Complex> z) {
        const std::size_t a = std::clamp(partition.locate(z[n - 1].real()), chain.first, chain.last);
        return branches[a - chain.first](z);
      },
      sol.region, "solution");
  return sol;
}

std::vector<ChiSolution> solve_chain(const ChiProblem& problem, MergeOrder order) {
  problem.validate();
  const std::size_t slabs = problem.partition.size();
  const std::vector<ConnectivityChain> chains = problem.kind == ProblemKind::Cousin1
                                                    ? std::vector<ConnectivityChain>{{0, slabs - 1}}
                                                    : connected_chains(problem.partition, problem.subspace);
  std::vector<std::optional<ChiSolution>> results(chains.size());
  parallel_for(chains.size(), [&](std::size_t c) {
    const auto& chain = chains[c];
    PartialSolution acc;
    if (order == MergeOrder::LeftToRight) {
      acc = local_partial(problem, chain.first);
      for (std::size_t a = chain.first + 1; a <= chain.last; ++a) acc = merge_pair(acc, local_partial(problem, a), problem);
    } else {
      acc = local_partial(problem, chain.last);
      for (std::size_t a = chain.last; a-- > chain.first;) acc = merge_pair(local_partial(problem, a), acc, problem);
    }
    ChiSolution sol = assemble(acc, problem, chain);
    sol.report = verify_solution(sol, problem);
    results[c] = std::move(sol);
  });
  std::vector<ChiSolution> out;
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

Complex laurent_coefficient(const Evaluable& f, std::span<const Complex> z_prime, Complex p, unsigned k, double radius,
                            int points) {
  const std::size_t n = f.dim();
  std::vector<Complex> z(z_prime.begin(), z_prime.end());
  z.resize(n);
  Complex sum{};
  for (int m = 0; m < points; ++m) {
    const Complex w = std::polar(radius, 2.0 * std::numbers::pi * m / points);
    z[n - 1] = p + w;
    Complex wk{1.0, 0.0};
    for (unsigned e = 0; e < k; ++e) wk *= w;
    sum += f(z) * wk;
  }
  return sum / static_cast<double>(points);
}

std::vector<std::vector<double>> halton_points(std::size_t count, std::size_t dims) {
  static constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (dims > std::size(kPrimes)) throw Error(ErrorCode::InvalidProblem, "too many Halton dimensions");
  std::vector<std::vector<double>> out(count, std::vector<double>(dims));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t d = 0; d < dims; ++d) out[i][d] = radical_inverse(i + 1, kPrimes[d]);
  return out;
}

namespace {

void verify_principal_parts(const ChiSolution& sol, const ChiProblem& problem, VerificationReport& report) {
  const std::size_t n = problem.dim();
  const auto& tol = problem.tolerances;
  double worst = 0.0;
  for (std::size_t a = sol.chain.first; a <= sol.chain.last; ++a) {
    const Cuboid slab = problem.partition.slab(a);
    const Interval re = slab.re(n - 1), im = slab.im(n - 1);
    const auto& terms = problem.principal_parts[a].terms;
    const std::size_t samples = n == 1 ? 0 : 2;
    for (const auto& zp : parameter_samples(slab, samples)) {
      std::vector<Complex> poles;
      for (const auto& t : terms) poles.push_back(t.locus.evaluate(zp));
      std::vector<bool> done(terms.size(), false);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (done[i]) continue;
        const Complex p = poles[i];
        const auto same = [&](std::size_t j) { return std::abs(poles[j] - p) <= 1e-12 * (1.0 + std::abs(p)); };
        unsigned max_order = 0;
        std::vector<Complex> prescribed;
        double radius = std::min({p.real() - re.lo, re.hi - p.real(), p.imag() - im.lo, im.hi - p.imag()});
        for (std::size_t j = 0; j < terms.size(); ++j) {
          if (same(j)) {
            done[j] = true;
            max_order = std::max(max_order, terms[j].order);
            if (prescribed.size() < terms[j].order) prescribed.resize(terms[j].order);
            prescribed[terms[j].order - 1] += terms[j].coefficient.evaluate(zp);
          } else {
            radius = std::min(radius, std::abs(poles[j] - p));
          }
        }
        radius *= 0.5;
        for (unsigned k = 1; k <= max_order; ++k) {
          const Complex got = laurent_coefficient(sol.global, std::span<const Complex>(zp.data(), n - 1), p, k, radius);
          worst = std::max(worst, std::abs(got - prescribed[k - 1]));
        }
      }
    }
    report.add("correction_morera[" + std::to_string(a + 1) + "]",
               morera_residual(sol.global - sol.locals[a - sol.chain.first], slab, tol.morera_grid), tol.morera);
  }
  report.add("principal_part_error", worst, tol.residue);
}

void verify_extension(const ChiSolution& sol, const ChiProblem& problem, VerificationReport& report) {
  const std::size_t n = problem.dim();
  const auto& tol = problem.tolerances;
  const std::size_t q = problem.subspace.codim();
  if (sol.region.meets(problem.subspace)) {
    const Evaluable g = problem.target.to_evaluable(n);
    double worst = 0.0;
    for (auto z : box_samples(sol.region, 101)) {
      for (std::size_t k = 0; k < q; ++k) z[k] = Complex{};
      worst = std::max(worst, std::abs(sol.global(z) - g(z)));
    }
    report.add("subspace_error", worst, tol.subspace);
  }
  report.add("morera", morera_residual(sol.global, sol.region, tol.morera_grid), tol.morera);
  bool exact = true;
  for (const auto& w : sol.witnesses) exact = exact && w.recombination_exact;
  report.add_flag("witness_recombination_exact", exact);
}

}  // namespace

VerificationReport verify_solution(const ChiSolution& solution, const ChiProblem& problem) {
  VerificationReport report;
  if (problem.kind == ProblemKind::Cousin1)
    verify_principal_parts(solution, problem, report);
  else
    verify_extension(solution, problem, report);

  const std::size_t n = problem.dim();
  const double delta = problem.seam_margin();
  double seam_gap = 0.0;
  for (std::size_t a = solution.chain.first; a < solution.chain.last; ++a) {
    const double s = problem.partition.seam(a);
    const Cuboid strip = problem.partition.base().with_re(n - 1, {s - delta, s + delta});
    const auto& left = solution.branches[a - solution.chain.first];
    const auto& right = solution.branches[a + 1 - solution.chain.first];
    for (const auto& z : box_samples(strip, 64)) seam_gap = std::max(seam_gap, std::abs(left(z) - right(z)));
  }
  report.add("seam_agreement", seam_gap, 2.0 * problem.tolerances.morera);
  return report;
}

}  // namespace okakit

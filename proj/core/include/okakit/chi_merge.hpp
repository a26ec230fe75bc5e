#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "okakit/cousin.hpp"
#include "okakit/cuboid.hpp"
#include "okakit/division.hpp"
#include "okakit/evaluable.hpp"
#include "okakit/expression.hpp"
#include "okakit/quadrature.hpp"
#include "okakit/series.hpp"
#include "okakit/subspace.hpp"

namespace okakit {

enum class ProblemKind { Cousin1, Extension };

/// c(z') * (z_n - p(z'))^(-order).
struct PoleTerm {
  unsigned order = 1;
  Expr coefficient;
  Expr locus;
};

/// Principal-part datum of one slab.
struct PrincipalPartData {
  std::vector<PoleTerm> terms;
};

struct ChiTolerances {
  double morera = 1e-8;
  double residue = 1e-6;
  double subspace = 1e-8;
  int morera_grid = 8;
};

/// A Cousin-I or extension instance on the slabs of one cuboid.
struct ChiProblem {
  ProblemKind kind = ProblemKind::Cousin1;
  SlabPartition partition;
  std::vector<PrincipalPartData> principal_parts;  // cousin1, one per slab
  CoordinateSubspace subspace{1, 0};               // extension
  Expr target;                                     // extension: g, free of z_1..z_q
  std::vector<Expr> perturbations;                 // extension: optional, one per slab, in the ideal of S
  std::optional<double> margin;
  QuadratureSpec quadrature;
  ChiTolerances tolerances;

  std::size_t dim() const { return partition.base().ambient_dim(); }
  /// The configured margin, or 5% of the narrowest slab.
  double seam_margin() const;
  /// Throws InvalidProblem on size mismatches, on a target that involves
  /// z_1..z_q and on non-polynomial perturbations.
  void validate() const;
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(std::string name, double value, double threshold);
  void add_flag(std::string name, bool ok);
};

/// H = sum_j a_j z_j computed by coordinate division of an exact polynomial.
struct IdealWitness {
  std::vector<ExactSeries> cofactors;
  bool recombination_exact = false;
};

/// Throws NotInIdeal when the division remainder is non-zero.
IdealWitness ideal_witness(const ExactSeries& h, const CoordinateSubspace& s);

/// Contiguous run of slabs carrying one branch per slab. A branch is the
/// local solution plus sum_j sigma_j c_j, where sigma = (1) for Cousin-I and
/// sigma = (z_1, ..., z_q) for extensions.
struct PartialSolution {
  std::size_t first = 0;
  std::vector<Evaluable> locals;
  std::vector<ExactSeries> ideal_parts;          // extension: exact perturbation per slab
  std::vector<std::vector<Evaluable>> cofactors;  // per slab, one per generator
  std::vector<IdealWitness> witnesses;            // extension: one per merged seam

  std::size_t last() const { return first + locals.size() - 1; }
  Evaluable branch(std::size_t alpha, std::size_t dim, ProblemKind kind) const;
};

/// Cousin-I: the principal-part sum. Extension: g plus the slab's
/// perturbation. Throws PoleTooCloseToSeam when a pole locus comes within the
/// margin of a slab face.
Evaluable local_solution(const ChiProblem& problem, std::size_t alpha);

/// b - a on the overlap; throws NotHolomorphicDifference when its Morera
/// residual on the overlap exceeds the tolerance.
Evaluable seam_difference(const Evaluable& a, const Evaluable& b, const Cuboid& overlap, double tolerance, int grid);

PartialSolution local_partial(const ChiProblem& problem, std::size_t alpha);

/// Merges two adjacent partial solutions across the seam between them.
PartialSolution merge_pair(const PartialSolution& left, const PartialSolution& right, const ChiProblem& problem);

struct ChiSolution {
  ConnectivityChain chain;
  Cuboid region;                 // union of the chain's slabs
  std::vector<Evaluable> branches;
  std::vector<Evaluable> locals;
  std::vector<IdealWitness> witnesses;
  Evaluable global;              // branch of the slab containing Re z_n (ties to the lower slab)
  VerificationReport report;
};

enum class MergeOrder { LeftToRight, RightToLeft };

ChiSolution assemble(const PartialSolution& merged, const ChiProblem& problem, const ConnectivityChain& chain);

/// One verified solution per maximal chain of slabs connected on S (the
/// whole partition for Cousin-I).
std::vector<ChiSolution> solve_chain(const ChiProblem& problem, MergeOrder order = MergeOrder::LeftToRight);

/// Cousin-I: Laurent coefficients at every prescribed pole extracted by
/// circle quadrature, and Morera residuals of F - f_alpha on every slab.
/// Extension: max |G - g| on 101 Halton points of S and the Morera
/// residual of G on the chain. Both: branch agreement on seam strips.
VerificationReport verify_solution(const ChiSolution& solution, const ChiProblem& problem);

/// Laurent coefficient of (z_n - p)^(-k) of f at z' from an M-point
/// trapezoid rule on the circle |z_n - p| = radius.
Complex laurent_coefficient(const Evaluable& f, std::span<const Complex> z_prime, Complex p, unsigned k, double radius,
                            int points = 64);

/// Points of the unit box [0,1)^d from the Halton sequence (bases 2, 3, 5, ...).
std::vector<std::vector<double>> halton_points(std::size_t count, std::size_t dims);

}  // namespace okakit

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "okakit/division.hpp"
#include "okakit/error.hpp"
#include "okakit/series.hpp"

namespace okakit {

/// Components (f_1, ..., f_p) of a candidate relation sum_j f_j sigma_j = 0.
template <Coefficient S>
using SyzygyVector = std::vector<TruncatedSeries<S>>;

/// Zero-based pair (i, j) with i < j.
struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

template <Coefficient S>
using PairCoefficients = std::map<IndexPair, TruncatedSeries<S>>;

/// T_ij: -z_j in slot i, z_i in slot j.
template <Coefficient S>
struct TrivialSolution {
  IndexPair pair;
  SyzygyVector<S> vector;
};

template <Coefficient S>
struct RelationCheck {
  bool holds = false;
  TruncatedSeries<S> residual;
};

template <Coefficient S>
class NotARelation : public Error {
 public:
  NotARelation(TruncatedSeries<S> residual, const std::string& what)
      : Error(ErrorCode::NotARelation, what), residual_(std::move(residual)) {}
  const TruncatedSeries<S>& residual() const noexcept { return residual_; }

 private:
  TruncatedSeries<S> residual_;
};

template <Coefficient S>
struct RelationDecomposition {
  PairCoefficients<S> coefficients;
  std::size_t rounds = 0;
};

namespace detail {

template <Coefficient S>
bool negligible(const TruncatedSeries<S>& r, double epsilon, double scale) {
  if constexpr (ScalarTraits<S>::tag == BackendTag::Exact) {
    (void)epsilon;
    (void)scale;
    return r.is_zero();
  } else {
    return r.max_magnitude() <= epsilon * std::max(scale, 1.0);
  }
}

template <Coefficient S>
double max_magnitude(const SyzygyVector<S>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, c.max_magnitude());
  return m;
}

template <Coefficient S>
const typename TruncatedSeries<S>::Point& common_center(const SyzygyVector<S>& v) {
  if (v.empty()) throw Error(ErrorCode::InvalidArity, "empty syzygy vector");
  for (const auto& c : v)
    if (c.center() != v.front().center())
      throw Error(ErrorCode::IncompatibleOperands, "syzygy components have different centers");
  return v.front().center();
}

}  // namespace detail

template <Coefficient S>
SyzygyVector<S> zero_vector(const typename TruncatedSeries<S>::Point& center, std::size_t length) {
  return SyzygyVector<S>(length, TruncatedSeries<S>(center));
}

/// The p(p-1)/2 trivial solutions in lexicographic (i, j) order. For p = 1
/// the trivial solution is 0 by convention, so the list is empty.
template <Coefficient S>
std::vector<TrivialSolution<S>> trivial_solutions(long p, const typename TruncatedSeries<S>::Point& center) {
  if (p <= 0) throw Error(ErrorCode::InvalidArity, "arity must be at least 1, got " + std::to_string(p));
  const auto count = static_cast<std::size_t>(p);
  if (count > center.size()) throw Error(ErrorCode::InvalidArity, "arity exceeds ambient dimension");
  std::vector<TrivialSolution<S>> out;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      auto v = zero_vector<S>(center, count);
      v[i] = -TruncatedSeries<S>::coordinate(center, j);
      v[j] = TruncatedSeries<S>::coordinate(center, i);
      out.push_back({{i, j}, std::move(v)});
    }
  }
  return out;
}

template <Coefficient S>
std::vector<TrivialSolution<S>> trivial_solutions(long p, std::size_t dim) {
  return trivial_solutions<S>(p, typename TruncatedSeries<S>::Point(dim, ScalarTraits<S>::zero()));
}

/// Residual sum_j v_j sigma_j against explicit generators.
template <Coefficient S>
RelationCheck<S> verify_relation(const SyzygyVector<S>& v, const std::vector<TruncatedSeries<S>>& generators,
                                 double epsilon = 1e-12) {
  if (v.size() != generators.size())
    throw Error(ErrorCode::InvalidArity, "relation length differs from generator count");
  const auto& center = detail::common_center(v);
  TruncatedSeries<S> residual(center);
  double scale = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    auto term = v[j] * generators[j];
    scale = std::max(scale, term.max_magnitude());
    residual = residual + term;
  }
  return {detail::negligible(residual, epsilon, scale), residual};
}

/// Residual sum_j v_j z_j.
template <Coefficient S>
RelationCheck<S> verify_relation(const SyzygyVector<S>& v, double epsilon = 1e-12) {
  const auto& center = detail::common_center(v);
  if (v.size() > center.size()) throw Error(ErrorCode::InvalidArity, "relation longer than ambient dimension");
  std::vector<TruncatedSeries<S>> gens;
  for (std::size_t j = 0; j < v.size(); ++j) gens.push_back(TruncatedSeries<S>::coordinate(center, j));
  return verify_relation(v, gens, epsilon);
}

/// sum_{i<j} b_ij T_ij as a vector of length p.
template <Coefficient S>
SyzygyVector<S> recombine_trivial(const PairCoefficients<S>& coeffs, std::size_t p,
                                  const typename TruncatedSeries<S>::Point& center) {
  auto out = zero_vector<S>(center, p);
  for (const auto& [pair, b] : coeffs) {
    if (pair.i >= pair.j || pair.j >= p) throw Error(ErrorCode::InvalidArity, "pair index out of range");
    out[pair.i] = out[pair.i] - b * TruncatedSeries<S>::coordinate(center, pair.j);
    out[pair.j] = out[pair.j] + b * TruncatedSeries<S>::coordinate(center, pair.i);
  }
  return out;
}

/// Writes a relation among z_1..z_p as sum b_ij T_ij.
///
/// Round k splits every remaining component along z_k, removes the
/// quotients with T_kj and continues with the z_k-free remainders, which form
/// a relation among z_{k+1}..z_p. The identity that the k-th slot then
/// vanishes is checked at every round.
template <Coefficient S>
RelationDecomposition<S> decompose_relation(const SyzygyVector<S>& v, double epsilon = 1e-12) {
  const auto& center = detail::common_center(v);
  const std::size_t p = v.size();
  for (std::size_t k = 0; k < p; ++k) detail::require_center_on_axis(v[k], k);
  auto check = verify_relation(v, epsilon);
  if (!check.holds) throw NotARelation<S>(check.residual, "input is not a relation among z_1..z_p");
  const double scale = detail::max_magnitude(v);

  RelationDecomposition<S> out;
  SyzygyVector<S> current = v;
  for (std::size_t k = 0; k + 1 < p; ++k) {
    std::vector<AxisSplit<S>> splits;
    splits.reserve(p - k);
    for (std::size_t j = k; j < p; ++j) splits.push_back(split_variable(current[j], k));

    TruncatedSeries<S> forced = current[k];
    for (std::size_t j = k + 1; j < p; ++j) {
      const auto& h = splits[j - k].quotient;
      forced = forced + h.mul_coordinate(j);
      if (!h.is_zero()) {
        auto [it, inserted] = out.coefficients.try_emplace(IndexPair{k, j}, h);
        if (!inserted) it->second = it->second + h;
      }
      current[j] = splits[j - k].remainder;
    }
    if (!detail::negligible(forced, epsilon, scale))
      throw NotARelation<S>(forced, "slot " + std::to_string(k + 1) + " did not vanish after removing T_" +
                                        std::to_string(k + 1) + "j");
    current[k] = TruncatedSeries<S>(center, current[k].order());
    ++out.rounds;
  }
  // Last level: g_p z_p = 0 forces g_p = 0.
  if (!detail::negligible(current[p - 1], epsilon, scale))
    throw NotARelation<S>(current[p - 1], "last component did not vanish");
  return out;
}

/// Local decomposition away from the subspace: when the center has b_k != 0,
/// z_k is a unit and v = sum_{j != k} +-(v_j / z_k) T_kj. The inverse of z_k is
/// expanded to `order`, so the identity holds modulo degree > order.
template <Coefficient S>
PairCoefficients<S> off_axis_decomposition(const SyzygyVector<S>& v, std::size_t pivot, std::uint32_t order) {
  const auto& center = detail::common_center(v);
  const std::size_t p = v.size();
  if (pivot >= p) throw Error(ErrorCode::InvalidArity, "pivot outside the relation");
  using Traits = ScalarTraits<S>;
  const S b = center[pivot];
  if (Traits::is_zero(b)) throw Error(ErrorCode::InvalidProblem, "center lies on {z_k = 0}; z_k is not a unit");

  // 1/z_k = sum_m (-1)^m (z_k - b_k)^m / b_k^(m+1)
  TruncatedSeries<S> inverse(center, order);
  S coeff = Traits::one() / b;
  for (std::uint32_t m = 0; m <= order; ++m) {
    MultiIndex nu(center.size());
    nu[pivot] = m;
    inverse.add_term(nu, coeff);
    coeff = -(coeff / b);
  }

  PairCoefficients<S> out;
  for (std::size_t j = 0; j < p; ++j) {
    if (j == pivot) continue;
    auto q = v[j] * inverse;
    if (q.is_zero()) continue;
    if (pivot < j)
      out.emplace(IndexPair{pivot, j}, q);
    else
      out.emplace(IndexPair{j, pivot}, -q);
  }
  return out;
}

/// sigma_j = z_j for j <= q and sigma_i = sum_j a_ij z_j for q < i <= N.
template <Coefficient S>
struct GeneratorPresentation {
  std::size_t q = 0;
  std::size_t count = 0;  // N
  typename TruncatedSeries<S>::Point center;
  std::vector<std::vector<TruncatedSeries<S>>> a;  // rows q+1..N, columns 1..q

  void validate() const {
    if (q == 0 || q > center.size()) throw Error(ErrorCode::InvalidArity, "q must satisfy 1 <= q <= n");
    if (count < q) throw Error(ErrorCode::InvalidArity, "N must be at least q");
    if (a.size() != count - q) throw Error(ErrorCode::InvalidArity, "need N - q rows of coefficients");
    for (const auto& row : a) {
      if (row.size() != q) throw Error(ErrorCode::InvalidArity, "each coefficient row needs q entries");
      for (const auto& c : row)
        if (c.center() != center) throw Error(ErrorCode::IncompatibleOperands, "coefficient center mismatch");
    }
    for (std::size_t k = 0; k < q; ++k)
      if (!ScalarTraits<S>::is_zero(center[k])) throw Error(ErrorCode::CenterNotOnAxis, "center must lie on S");
  }

  std::vector<TruncatedSeries<S>> generators() const {
    std::vector<TruncatedSeries<S>> sigma;
    for (std::size_t j = 0; j < q; ++j) sigma.push_back(TruncatedSeries<S>::coordinate(center, j));
    for (const auto& row : a) {
      TruncatedSeries<S> s(center);
      for (std::size_t j = 0; j < q; ++j) s = s + row[j].mul_coordinate(j);
      sigma.push_back(std::move(s));
    }
    return sigma;
  }
};

/// tau_jk (1 <= j < k <= q) and phi_i (q < i <= N); tau first, each in
/// lexicographic order.
template <Coefficient S>
struct GeneralSyzygyBasis {
  std::vector<std::pair<IndexPair, SyzygyVector<S>>> tau;
  std::vector<std::pair<std::size_t, SyzygyVector<S>>> phi;
};

template <Coefficient S>
struct GeneralDecomposition {
  PairCoefficients<S> tau_coefficients;
  std::vector<TruncatedSeries<S>> phi_coefficients;  // f_i for i = q+1..N
};

template <Coefficient S>
GeneralSyzygyBasis<S> general_syzygy_generators(const GeneratorPresentation<S>& pres) {
  pres.validate();
  GeneralSyzygyBasis<S> basis;
  for (auto& t : trivial_solutions<S>(static_cast<long>(pres.q), pres.center)) {
    auto v = t.vector;
    v.resize(pres.count, TruncatedSeries<S>(pres.center));
    basis.tau.emplace_back(t.pair, std::move(v));
  }
  for (std::size_t i = pres.q; i < pres.count; ++i) {
    auto v = zero_vector<S>(pres.center, pres.count);
    for (std::size_t j = 0; j < pres.q; ++j) v[j] = -pres.a[i - pres.q][j];
    v[i] = TruncatedSeries<S>::constant(pres.center, ScalarTraits<S>::one());
    basis.phi.emplace_back(i, std::move(v));
  }
  return basis;
}

template <Coefficient S>
SyzygyVector<S> recombine_general(const GeneralDecomposition<S>& dec, const GeneratorPresentation<S>& pres) {
  auto out = recombine_trivial(dec.tau_coefficients, pres.q, pres.center);
  out.resize(pres.count, TruncatedSeries<S>(pres.center));
  if (dec.phi_coefficients.size() != pres.count - pres.q)
    throw Error(ErrorCode::InvalidArity, "phi coefficient count differs from N - q");
  for (std::size_t i = pres.q; i < pres.count; ++i) {
    const auto& f = dec.phi_coefficients[i - pres.q];
    for (std::size_t j = 0; j < pres.q; ++j) out[j] = out[j] - f * pres.a[i - pres.q][j];
    out[i] = out[i] + f;
  }
  return out;
}

/// Reduces a relation among sigma_1..sigma_N to one among z_1..z_q by
/// folding the extra generators into the first q slots, decomposes that over
/// tau_jk, and keeps f_i itself as the coefficient of phi_i.
template <Coefficient S>
GeneralDecomposition<S> decompose_general_relation(const SyzygyVector<S>& f, const GeneratorPresentation<S>& pres,
                                                   double epsilon = 1e-12) {
  pres.validate();
  if (f.size() != pres.count) throw Error(ErrorCode::InvalidArity, "relation length differs from N");
  auto check = verify_relation(f, pres.generators(), epsilon);
  if (!check.holds) throw NotARelation<S>(check.residual, "input does not annihilate sigma_1..sigma_N");

  SyzygyVector<S> folded(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(pres.q));
  for (std::size_t j = 0; j < pres.q; ++j)
    for (std::size_t i = pres.q; i < pres.count; ++i) folded[j] = folded[j] + f[i] * pres.a[i - pres.q][j];

  GeneralDecomposition<S> out;
  out.tau_coefficients = decompose_relation(folded, epsilon).coefficients;
  out.phi_coefficients.assign(f.begin() + static_cast<std::ptrdiff_t>(pres.q), f.end());
  return out;
}

}  // namespace okakit

#pragma once

#include <cstddef>

#include "okakit/error.hpp"

namespace okakit {

/// S = {z_1 = ... = z_q = 0} inside C^n. Codimension 0 denotes the whole
/// space, which geometry code uses for problems without a constraint.
class CoordinateSubspace {
 public:
  CoordinateSubspace(std::size_t ambient_dim, std::size_t codim) : n_(ambient_dim), q_(codim) {
    if (n_ == 0) throw Error(ErrorCode::InvalidArity, "ambient dimension must be positive");
    if (q_ > n_) throw Error(ErrorCode::InvalidArity, "codimension exceeds ambient dimension");
  }

  static CoordinateSubspace whole_space(std::size_t ambient_dim) { return {ambient_dim, 0}; }

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t codim() const noexcept { return q_; }
  bool constrains(std::size_t axis) const noexcept { return axis < q_; }

 private:
  std::size_t n_;
  std::size_t q_;
};

}  // namespace okakit

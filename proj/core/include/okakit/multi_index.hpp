#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace okakit {

/// Exponent vector nu in Z_+^n.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : exps_(dim, 0) {}
  MultiIndex(std::initializer_list<std::uint32_t> e) : exps_(e) {}
  explicit MultiIndex(std::vector<std::uint32_t> e) : exps_(std::move(e)) {}

  static MultiIndex unit(std::size_t dim, std::size_t axis) {
    MultiIndex m(dim);
    m.exps_[axis] = 1;
    return m;
  }

  std::size_t dim() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t k) const { return exps_[k]; }
  std::uint32_t& operator[](std::size_t k) { return exps_[k]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex r = *this;
    for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += o.exps_[k];
    return r;
  }

  /// Drops the listed leading axes (used to key z' exponents).
  MultiIndex head(std::size_t count) const {
    return MultiIndex(std::vector<std::uint32_t>(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(count)));
  }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  friend std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
    os << '[';
    for (std::size_t k = 0; k < m.exps_.size(); ++k) os << (k ? "," : "") << m.exps_[k];
    return os << ']';
  }

 private:
  std::vector<std::uint32_t> exps_;
};

}  // namespace okakit

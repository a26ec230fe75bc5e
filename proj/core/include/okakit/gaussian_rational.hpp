#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace okakit {

/// Exact element of Q(i): a pair of arbitrary-precision rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// Exact binary value of the doubles, no rounding.
  static GaussianRational from_double(double re, double im = 0.0);
  static GaussianRational from_complex(std::complex<double> z) { return from_double(z.real(), z.imag()); }
  /// Parses "p/q" or "p" decimal rational strings.
  static GaussianRational parse(const std::string& re, const std::string& im = "0");

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::string to_decimal_string(const mpq_class& q);

}  // namespace okakit

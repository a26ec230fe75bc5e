#include "okakit/gaussian_rational.hpp"

#include <stdexcept>

namespace okakit {

namespace {

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_double(double re, double im) {
  mpq_class r(re);
  mpq_class i(im);
  return {r, i};
}

GaussianRational GaussianRational::parse(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational division by zero");
  mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / den;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_decimal_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  os << '(' << to_decimal_string(z.re_) << ", " << to_decimal_string(z.im_) << ')';
  return os;
}

}  // namespace okakit

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace iwasawa {

using Rational = mpq_class;

/// Element p/q + (r/s) i of the Gaussian rationals Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit embedding Q -> Q(i)
  Gaussian(int re) : re_(re) {}                   // NOLINT
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  Gaussian conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    Rational n = o.norm();
    Gaussian num = *this * o.conj();
    re_ = num.re_ / n;
    im_ = num.im_ / n;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return {-re_, -im_}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Gaussian& x) { return sgn(x.re()) == 0 && sgn(x.im()) == 0; }

/// Parses "p", "-p", "p/q" (and decimal-free integers) into a canonical rational.
/// Throws FormatError on anything else.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);
std::string to_string(const Gaussian& x);

/// Best rational approximation with denominator <= max_den via continued fractions.
/// Returns nothing when the approximation misses `x` by more than `tol`.
std::optional<Rational> rationalize(double x, std::int64_t max_den, double tol);

}  // namespace iwasawa

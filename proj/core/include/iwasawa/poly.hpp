#pragma once

// Univariate polynomials over Q and Q(i), characteristic polynomials, exact
// splitting into linear factors, and Sturm root counting over Q.

#include <string>
#include <utility>
#include <vector>

#include "iwasawa/linalg.hpp"

namespace iwasawa {

/// Coefficients low-to-high; the zero polynomial has no coefficients.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(F a) { return Poly(std::vector<F>{std::move(a)}); }
  /// x - root
  static Poly linear(const F& root) { return Poly(std::vector<F>{-root, F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  const F& lead() const { return c_.back(); }

  F operator()(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * F(static_cast<int>(k)));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    Poly p = *this;
    F inv = F(1) / lead();
    for (auto& x : p.c_) x *= inv;
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<F> q(a.degree() - b.degree() + 1, F(0));
    F inv = F(1) / b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      int shift = a.degree() - b.degree();
      F f = a.lead() * inv;
      q[shift] = f;
      for (int k = 0; k <= b.degree(); ++k) a.c_[k + shift] -= f * b.c_[k];
      a.trim();
    }
    return {Poly(std::move(q)), a};
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && iwasawa::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

using QPoly = Poly<Rational>;
using CPoly = Poly<Gaussian>;

/// det(x I - m), via Faddeev-LeVerrier.
template <class F>
Poly<F> characteristic_polynomial(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  std::vector<F> c(n + 1, F(0));
  c[n] = F(1);
  Matrix<F> mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    F tr = (m * mk).trace();
    c[n - k] = -tr / F(static_cast<int>(k));
  }
  return Poly<F>(std::move(c));
}

/// Evaluates p(m) by Horner's rule.
template <class F>
Matrix<F> evaluate(const Poly<F>& p, const Matrix<F>& m) {
  Matrix<F> acc(m.rows(), m.cols());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

/// Squarefree part p / gcd(p, p').
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.degree() <= 0) return p.monic();
  auto g = Poly<F>::gcd(p, p.derivative());
  return Poly<F>::divmod(p, g).first.monic();
}

/// True iff the matrix is diagonalizable over the algebraic closure.
template <class F>
bool is_semisimple(const Matrix<F>& m) {
  return evaluate(squarefree_part(characteristic_polynomial(m)), m).is_zero();
}

/// True iff the matrix is nilpotent.
template <class F>
bool is_nilpotent(const Matrix<F>& m) {
  Matrix<F> p = m;
  for (std::size_t k = 1; k < m.rows() + 1; ++k) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

template <class F>
struct Eigenvalue {
  F value;
  int multiplicity;
};

/// Splits the characteristic polynomial into linear factors over Q.
/// Throws UnsupportedInputError naming the polynomial when it does not split.
std::vector<Eigenvalue<Rational>> rational_eigenvalues(const QMatrix& m);
/// Splits over Q(i).
std::vector<Eigenvalue<Gaussian>> gaussian_eigenvalues(const CMatrix& m);

/// Number of distinct real roots of p in the half-open interval (lo, hi]; infinite
/// endpoints are requested with the flags.
int sturm_count(const QPoly& p, const Rational& lo, const Rational& hi, bool lo_infinite,
                bool hi_infinite);

/// True iff every root of the (real) polynomial is real.
bool all_roots_real(const QPoly& p);
/// True iff every root of the (real) polynomial lies on the imaginary axis.
bool all_roots_imaginary(const QPoly& p);

std::string to_string(const QPoly& p);
std::string to_string(const CPoly& p);

}  // namespace iwasawa

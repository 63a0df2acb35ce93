#include "iwasawa/poly.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <sstream>

#include "iwasawa/errors.hpp"

namespace iwasawa {
namespace {

constexpr std::int64_t kEigenDenominatorBound = 1000000;

std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& monic) {
  // Companion matrix of a monic polynomial given low-to-high, leading 1 omitted.
  const int n = static_cast<int>(monic.size());
  if (n == 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

std::optional<Rational> snap(double x) {
  double tol = 1e-6 * std::max(1.0, std::abs(x));
  return rationalize(x, kEigenDenominatorBound, tol);
}

template <class F>
std::vector<Eigenvalue<F>> split_exact(const Poly<F>& charpoly, const std::vector<F>& candidates) {
  std::vector<Eigenvalue<F>> out;
  Poly<F> rest = charpoly.monic();
  for (const auto& r : candidates) {
    bool seen = false;
    for (const auto& e : out) seen = seen || e.value == r;
    if (seen) continue;
    int mult = 0;
    while (rest.degree() > 0 && is_zero(rest(r))) {
      rest = Poly<F>::divmod(rest, Poly<F>::linear(r)).first;
      ++mult;
    }
    if (mult > 0) out.push_back({r, mult});
  }
  if (rest.degree() > 0) {
    throw UnsupportedInputError("characteristic polynomial " + to_string(charpoly) +
                                " does not split into linear factors over the scalar field");
  }
  return out;
}

}  // namespace

std::vector<Eigenvalue<Rational>> rational_eigenvalues(const QMatrix& m) {
  QPoly p = characteristic_polynomial(m);
  QPoly q = squarefree_part(p);
  std::vector<std::complex<double>> monic;
  for (int k = 0; k < q.degree(); ++k) monic.emplace_back(q.coeff(k).get_d(), 0.0);
  std::vector<Rational> candidates;
  for (const auto& z : numeric_roots(monic)) {
    if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
    if (auto r = snap(z.real())) candidates.push_back(*r);
  }
  return split_exact(p, candidates);
}

std::vector<Eigenvalue<Gaussian>> gaussian_eigenvalues(const CMatrix& m) {
  CPoly p = characteristic_polynomial(m);
  CPoly q = squarefree_part(p);
  std::vector<std::complex<double>> monic;
  for (int k = 0; k < q.degree(); ++k) monic.push_back(q.coeff(k).to_complex());
  std::vector<Gaussian> candidates;
  for (const auto& z : numeric_roots(monic)) {
    auto re = snap(z.real());
    auto im = snap(z.imag());
    if (re && im) candidates.emplace_back(*re, *im);
  }
  return split_exact(p, candidates);
}

namespace {

int sign_at(const QPoly& p, const Rational& x) { return sgn(p(x)); }

int sign_at_infinity(const QPoly& p, bool negative) {
  if (p.is_zero()) return 0;
  int s = sgn(p.lead());
  if (negative && p.degree() % 2 == 1) s = -s;
  return s;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto r = QPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(QPoly{} - r);
  }
  chain.pop_back();
  return chain;
}

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sturm_count(const QPoly& p, const Rational& lo, const Rational& hi, bool lo_infinite,
                bool hi_infinite) {
  if (p.degree() <= 0) return 0;
  auto chain = sturm_chain(squarefree_part(p));
  std::vector<int> s_lo, s_hi;
  for (const auto& q : chain) {
    s_lo.push_back(lo_infinite ? sign_at_infinity(q, true) : sign_at(q, lo));
    s_hi.push_back(hi_infinite ? sign_at_infinity(q, false) : sign_at(q, hi));
  }
  return variations(s_lo) - variations(s_hi);
}

bool all_roots_real(const QPoly& p) {
  if (p.degree() <= 0) return true;
  return sturm_count(p, 0, 0, true, true) == squarefree_part(p).degree();
}

bool all_roots_imaginary(const QPoly& p) {
  if (p.degree() <= 0) return true;
  // q(y) = p(i y) / i^n must be real with only real roots.
  const int n = p.degree();
  std::vector<Rational> q(n + 1);
  for (int k = 0; k <= n; ++k) {
    // i^(k-n), k - n in [-n, 0]
    int e = ((k - n) % 4 + 4) % 4;
    Gaussian ik = e == 0 ? Gaussian(1) : e == 1 ? Gaussian::i() : e == 2 ? Gaussian(-1) : -Gaussian::i();
    Gaussian c = Gaussian(p.coeff(k)) * ik;
    if (!c.is_real()) return false;
    q[k] = c.re();
  }
  return all_roots_real(QPoly(std::move(q)));
}

namespace {
template <class F>
std::string poly_string(const Poly<F>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const F& c = p.coeff(k);
    if (is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}
}  // namespace

std::string to_string(const QPoly& p) { return poly_string(p); }
std::string to_string(const CPoly& p) { return poly_string(p); }

}  // namespace iwasawa

#include "iwasawa/scalar.hpp"

#include <cmath>
#include <regex>

#include "iwasawa/errors.hpp"

namespace iwasawa {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw FormatError("not a rational literal: '" + text + "'");
  }
  mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den(1);
  if (m[2].matched) {
    den = mpz_class(m[2].str());
    if (den == 0) throw FormatError("zero denominator in '" + text + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Gaussian& x) {
  if (x.is_real()) return to_string(x.re());
  std::string im = sgn(x.im()) < 0 ? to_string(Rational(-x.im())) : to_string(x.im());
  if (sgn(x.re()) == 0) return (sgn(x.im()) < 0 ? "-" : "") + im + "i";
  return to_string(x.re()) + (sgn(x.im()) < 0 ? "-" : "+") + im + "i";
}

std::optional<Rational> rationalize(double x, std::int64_t max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  mpz_class h_prev(1), h(static_cast<long>(std::floor(x)));
  mpz_class k_prev(0), k(1);
  double frac = x - std::floor(x);
  Rational best(h, k);
  for (int iter = 0; iter < 64 && frac > 1e-300; ++iter) {
    if (std::abs(best.get_d() - x) <= tol) break;
    double inv = 1.0 / frac;
    double a_d = std::floor(inv);
    if (a_d > 1e15) break;
    mpz_class a(static_cast<long>(a_d));
    frac = inv - a_d;
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = Rational(h, k);
  }
  best.canonicalize();
  if (std::abs(best.get_d() - x) > tol) return std::nullopt;
  return best;
}

}  // namespace iwasawa

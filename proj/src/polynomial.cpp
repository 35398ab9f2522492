#include "polyzero/polynomial.hpp"

#include <cmath>
#include <utility>

namespace polyzero {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidPolynomial("polynomial needs at least one coefficient");
  }
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidPolynomial("coefficient components must be finite");
    }
  }
  if (coeffs_.back() == Complex(0.0, 0.0)) {
    throw InvalidPolynomial(
        "leading coefficient is zero; trailing zero coefficients are "
        "rejected, not trimmed");
  }
}

Polynomial poly_from_real(const std::vector<double>& coeffs) {
  std::vector<Complex> c;
  c.reserve(coeffs.size());
  for (double x : coeffs) c.emplace_back(x, 0.0);
  return Polynomial(std::move(c));
}

Complex eval(const Polynomial& p, Complex z) {
  const auto& a = p.coeffs();
  Complex r = a.back();
  for (std::size_t j = a.size() - 1; j-- > 0;) {
    r = r * z + a[j];
  }
  return r;
}

Polynomial derivative(const Polynomial& p) {
  const int n = p.degree();
  if (n == 0) {
    throw DerivativeOfConstant("derivative of a degree-0 polynomial");
  }
  std::vector<Complex> d(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    d[static_cast<std::size_t>(j - 1)] = static_cast<double>(j) * p[j];
  }
  return Polynomial(std::move(d));
}

Polynomial g_transform(const Polynomial& p) {
  const int n = p.degree();
  std::vector<Complex> g(static_cast<std::size_t>(n) + 2);
  g[0] = p[0];
  for (int j = 1; j <= n; ++j) {
    g[static_cast<std::size_t>(j)] = p[j] - p[j - 1];
  }
  g[static_cast<std::size_t>(n) + 1] = -p[n];
  return Polynomial(std::move(g));
}

Polynomial scale(const Polynomial& p, Complex c) {
  if (c == Complex(0.0, 0.0)) {
    throw ZeroScale("scale factor must be nonzero");
  }
  std::vector<Complex> s;
  s.reserve(p.coeffs().size());
  for (const Complex& a : p.coeffs()) s.push_back(c * a);
  return Polynomial(std::move(s));
}

double coeff_abs_sum(const Polynomial& p) {
  double s = 0.0;
  for (const Complex& a : p.coeffs()) s += std::abs(a);
  return s;
}

double im_abs_sum(const Polynomial& p) {
  double s = 0.0;
  for (const Complex& a : p.coeffs()) s += std::fabs(a.imag());
  return s;
}

double cauchy_radius(const Polynomial& p) {
  const int n = p.degree();
  const double an = std::abs(p[n]);
  double m = 0.0;
  for (int j = 0; j < n; ++j) {
    m = std::max(m, std::abs(p[j]) / an);
  }
  return 1.0 + m;
}

}  // namespace polyzero

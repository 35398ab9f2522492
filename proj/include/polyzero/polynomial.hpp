#pragma once

#include <complex>
#include <vector>

#include "polyzero/errors.hpp"

namespace polyzero {

using Complex = std::complex<double>;

/// Complex polynomial a_0 + a_1 z + ... + a_n z^n.
///
/// Coefficients are stored in ascending order, a_0 first. Construction
/// rejects empty lists, non-finite components, and a zero leading
/// coefficient (trailing zeros are an error, not silently trimmed), so
/// degree() is always well-defined and exact.
///
/// Values are immutable after construction and safe to share across threads.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const Complex& operator[](int j) const {
    return coeffs_[static_cast<std::size_t>(j)];
  }
  /// Re(a_j), the alpha_j of the coefficient-chain hypotheses.
  double re(int j) const { return coeffs_[static_cast<std::size_t>(j)].real(); }
  /// Im(a_j).
  double im(int j) const { return coeffs_[static_cast<std::size_t>(j)].imag(); }

 private:
  std::vector<Complex> coeffs_;
};

/// Convenience: build a polynomial with real coefficients.
Polynomial poly_from_real(const std::vector<double>& coeffs);

/// Horner evaluation, highest index first.
Complex eval(const Polynomial& p, Complex z);

/// Throws DerivativeOfConstant for degree 0.
Polynomial derivative(const Polynomial& p);

/// The degree-(n+1) polynomial (1 - z) p(z), with coefficients
/// [a_0, a_1 - a_0, ..., a_n - a_{n-1}, -a_n].
Polynomial g_transform(const Polynomial& p);

/// Multiplies every coefficient by c. Throws ZeroScale for c = 0.
Polynomial scale(const Polynomial& p, Complex c);

/// Sum of coefficient moduli; the scale residuals are measured against.
double coeff_abs_sum(const Polynomial& p);

/// Sum of |Im(a_j)|, the beta-term of the coefficient bounds.
double im_abs_sum(const Polynomial& p);

/// 1 + max_{j<n} |a_j / a_n|: every zero has modulus below this.
double cauchy_radius(const Polynomial& p);

}  // namespace polyzero

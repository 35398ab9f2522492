#pragma once

#include <vector>

#include "polyzero/polynomial.hpp"

namespace polyzero {

/// All roots from the Aberth-Ehrlich simultaneous iteration.
/// residuals[k] = |p(roots[k])| / coeff_abs_sum(p). converged implies every
/// |p(root)| <= max(1e-8 sum|a_j|, 16 n eps sum|a_j||root|^j) -- the second
/// term is the Horner noise floor, which dominates for roots of modulus
/// above 1. Callers must not trust counts from an unconverged set.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;
};

enum class CountMethod { ROOTS, WINDING, CROSS_CHECKED };

const char* to_string(CountMethod m);

struct DiskCountResult {
  int count = 0;
  CountMethod method = CountMethod::CROSS_CHECKED;
  /// min over roots of ||root| - delta|; NaN when roots are unavailable.
  double boundary_margin = 0.0;
  double radius = 0.0;
};

/// Deterministic Aberth-Ehrlich iteration: initial guesses equispaced on the
/// circle of radius max(|a_0/a_n|^(1/n), 1e-6) with angular offset 0.4, full
/// Aberth corrections, stop when max |w_k| <= 1e-12 (1 + max |z_k|) or after
/// 500 sweeps. Requires degree >= 1.
RootSet aberth_roots(const Polynomial& p);

/// Argument-principle count of zeros inside |z| = radius via trapezoidal
/// quadrature of p'(z) z / p(z), sample count doubling from 256 until two
/// successive levels round to the same integer, each within 0.1 of it.
/// Throws ContourNearZero when a sample sits essentially on a zero
/// (min |p| < 1e-13 max |p| over samples) and QuadratureNotConverged past
/// 2^20 samples.
int winding_count(const Polynomial& p, double radius);

/// Exact count of zeros in the closed disk |z| <= delta, cross-checked
/// between the two methods. Both run with the multiplicative guard radius
/// delta (1 + 1e-9), so roots numerically on the boundary count as inside.
/// Two successful, disagreeing methods throw OracleDisagreement; if exactly
/// one method succeeds its count is returned with the matching tag.
DiskCountResult count_in_disk(const Polynomial& p, double delta);

/// min over Aberth roots of ||root| - delta|. Harnesses use this to skip
/// boundary-ambiguous instances (margin below 1e-6), including when the
/// cross-check reports a disagreement there. NaN when the iteration did
/// not converge.
double boundary_margin(const Polynomial& p, double delta);

}  // namespace polyzero

#include "polyzero/disk_oracle.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "polyzero/errors.hpp"

namespace polyzero {

const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::ROOTS: return "ROOTS";
    case CountMethod::WINDING: return "WINDING";
    case CountMethod::CROSS_CHECKED: return "CROSS_CHECKED";
  }
  return "?";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kResidualTol = 1e-8;

/// Horner on absolute values: sum |a_j| |z|^j, the scale of the rounding
/// noise in eval(p, z).
double abs_eval(const Polynomial& p, double zabs) {
  const auto& a = p.coeffs();
  double e = std::abs(a.back());
  for (std::size_t j = a.size() - 1; j-- > 0;) {
    e = e * zabs + std::abs(a[j]);
  }
  return e;
}

}  // namespace

RootSet aberth_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) {
    throw Error("aberth_roots: degree must be at least 1");
  }
  const Polynomial pd = derivative(p);
  const double coeff_sum = coeff_abs_sum(p);

  const double ratio = std::abs(p[0]) / std::abs(p[n]);
  const double r0 = std::max(std::pow(ratio, 1.0 / n), 1e-6);

  RootSet rs;
  rs.roots.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = kTwoPi * k / n + 0.4;
    rs.roots[static_cast<std::size_t>(k)] =
        r0 * Complex(std::cos(theta), std::sin(theta));
  }

  std::vector<bool> frozen(static_cast<std::size_t>(n), false);
  const double noise_factor = 4.0 * n * DBL_EPSILON;
  bool step_converged = false;

  for (int iter = 0; iter < 500; ++iter) {
    rs.iterations = iter + 1;
    double max_step = 0.0;
    double max_z = 0.0;
    int active = 0;
    for (int k = 0; k < n; ++k) {
      const std::size_t ku = static_cast<std::size_t>(k);
      Complex zk = rs.roots[ku];
      max_z = std::max(max_z, std::abs(zk));
      if (frozen[ku]) continue;

      const Complex pz = eval(p, zk);
      if (std::abs(pz) <= noise_factor * abs_eval(p, std::abs(zk))) {
        frozen[ku] = true;  // residual is below evaluation noise
        continue;
      }
      ++active;

      const Complex dpz = eval(pd, zk);
      if (dpz == Complex(0.0, 0.0)) {
        rs.roots[ku] = zk + Complex(1e-8, 1e-8) * (1.0 + std::abs(zk));
        max_step = std::max(max_step, 1.0);
        continue;
      }
      const Complex newton = pz / dpz;

      Complex repulsion(0.0, 0.0);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex d = zk - rs.roots[static_cast<std::size_t>(j)];
        if (d == Complex(0.0, 0.0)) {
          d = Complex(1e-12, 1e-12) * (1.0 + std::abs(zk));
        }
        repulsion += 1.0 / d;
      }

      const Complex denom = 1.0 - newton * repulsion;
      Complex step = (denom == Complex(0.0, 0.0)) ? newton : newton / denom;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        step = newton;
      }
      rs.roots[ku] = zk - step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (active == 0) {
      step_converged = true;
      break;
    }
    if (max_step <= 1e-12 * (1.0 + max_z)) {
      step_converged = true;
      break;
    }
  }

  rs.residuals.resize(static_cast<std::size_t>(n));
  bool residuals_ok = true;
  for (int k = 0; k < n; ++k) {
    const Complex z = rs.roots[static_cast<std::size_t>(k)];
    const double pz_abs = std::abs(eval(p, z));
    rs.residuals[static_cast<std::size_t>(k)] = pz_abs / coeff_sum;
    // A root of modulus above 1 cannot evaluate below the Horner noise
    // floor sum |a_j| |z|^j * O(n eps), so the tolerance carries that term.
    const double tol = std::max(kResidualTol * coeff_sum,
                                4.0 * noise_factor * abs_eval(p, std::abs(z)));
    if (!(pz_abs <= tol)) residuals_ok = false;
  }
  rs.converged = step_converged && residuals_ok;
  return rs;
}

double boundary_margin(const Polynomial& p, double delta) {
  if (p.degree() == 0) return std::numeric_limits<double>::infinity();
  const RootSet rs = aberth_roots(p);
  if (!rs.converged) return std::numeric_limits<double>::quiet_NaN();
  double margin = std::numeric_limits<double>::infinity();
  for (const Complex& z : rs.roots) {
    margin = std::min(margin, std::fabs(std::abs(z) - delta));
  }
  return margin;
}

int winding_count(const Polynomial& p, double radius) {
  if (!(radius > 0.0)) {
    throw Error("winding_count: radius must be positive");
  }
  if (p.degree() == 0) return 0;
  const Polynomial pd = derivative(p);

  // Trapezoid rule on a periodic integrand; samples at level N nest inside
  // level 2N, so each doubling only evaluates the new midpoints.
  Complex sum(0.0, 0.0);
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  long samples = 0;

  auto add_samples = [&](long count, long stride_denom) {
    // Adds `count` samples at angles 2*pi*(2j+1)/stride_denom, or the
    // initial full grid when stride_denom == count.
    for (long j = 0; j < count; ++j) {
      const double theta = (stride_denom == count)
                               ? kTwoPi * j / static_cast<double>(count)
                               : kTwoPi * (2 * j + 1) /
                                     static_cast<double>(stride_denom);
      const Complex z = radius * Complex(std::cos(theta), std::sin(theta));
      const Complex pz = eval(p, z);
      const double a = std::abs(pz);
      min_abs = std::min(min_abs, a);
      max_abs = std::max(max_abs, a);
      sum += eval(pd, z) * z / pz;
    }
    samples += count;
  };

  // The N-point trapezoid sum here is exactly sum over roots of
  // 1/(1 - (r/R)^N), so the error of a genuinely converging estimate
  // squares at every doubling. A zero near the contour instead produces a
  // slowly drifting plateau that can sit within 0.1 of a wrong integer for
  // several levels (with real coefficients the imaginary part gives no
  // warning), so flat levels alone prove nothing. Accept an integer only
  // when three successive levels land on it and the offsets shrink
  // quadratically (with a 1e-3 floor), and the imaginary part is small.
  add_samples(256, 256);
  long hist_round[3] = {0, 0, 0};
  double hist_off[3] = {0.0, 0.0, 0.0};
  bool hist_close[3] = {false, false, false};
  int levels = 0;
  for (;;) {
    if (min_abs < 1e-13 * max_abs) {
      throw ContourNearZero("a zero of p lies (numerically) on the contour");
    }
    const double est = sum.real() / static_cast<double>(samples);
    const double est_im = sum.imag() / static_cast<double>(samples);
    long rounded = 0;
    double offset = 1.0;
    bool close = false;
    if (std::isfinite(est) && std::fabs(est) < 1e9) {
      rounded = std::lround(est);
      offset = std::fabs(est - static_cast<double>(rounded));
      close = offset <= 0.1 && std::fabs(est_im) <= 0.05;
    }
    hist_round[levels % 3] = rounded;
    hist_off[levels % 3] = offset;
    hist_close[levels % 3] = close;
    ++levels;
    if (levels >= 3) {
      const int a = (levels - 3) % 3, b = (levels - 2) % 3, c = (levels - 1) % 3;
      const bool settled =
          hist_close[a] && hist_close[b] && hist_close[c] &&
          hist_round[a] == hist_round[b] && hist_round[b] == hist_round[c] &&
          hist_off[b] <= std::max(hist_off[a] * hist_off[a], 1e-3) &&
          hist_off[c] <= std::max(hist_off[b] * hist_off[b], 1e-3);
      if (settled) return static_cast<int>(hist_round[c]);
    }
    if (samples >= (1L << 20)) {
      throw QuadratureNotConverged(
          "winding estimate did not settle within 2^20 contour samples");
    }
    add_samples(samples, 2 * samples);
  }
}

DiskCountResult count_in_disk(const Polynomial& p, double delta) {
  if (!(delta > 0.0)) {
    throw BadDelta("count_in_disk: delta must be positive");
  }
  DiskCountResult res;
  res.radius = delta;
  if (p.degree() == 0) {
    res.count = 0;
    res.method = CountMethod::CROSS_CHECKED;
    res.boundary_margin = std::numeric_limits<double>::infinity();
    return res;
  }

  const double guard_radius = delta * (1.0 + 1e-9);

  const RootSet rs = aberth_roots(p);
  int roots_count = 0;
  double margin = std::numeric_limits<double>::infinity();
  if (rs.converged) {
    for (const Complex& z : rs.roots) {
      const double m = std::abs(z);
      if (m <= guard_radius) ++roots_count;
      margin = std::min(margin, std::fabs(m - delta));
    }
  } else {
    margin = std::numeric_limits<double>::quiet_NaN();
  }

  int wind = 0;
  bool winding_ok = false;
  std::string winding_err;
  try {
    wind = winding_count(p, guard_radius);
    winding_ok = true;
  } catch (const ContourNearZero& e) {
    winding_err = e.what();
  } catch (const QuadratureNotConverged& e) {
    winding_err = e.what();
  }

  if (rs.converged && winding_ok) {
    if (roots_count != wind) {
      throw OracleDisagreement(
          "zero-count oracles disagree at radius " + std::to_string(delta) +
          ": roots method = " + std::to_string(roots_count) +
          ", winding method = " + std::to_string(wind));
    }
    res.count = roots_count;
    res.method = CountMethod::CROSS_CHECKED;
    res.boundary_margin = margin;
    return res;
  }
  if (rs.converged) {
    res.count = roots_count;
    res.method = CountMethod::ROOTS;
    res.boundary_margin = margin;
    return res;
  }
  if (winding_ok) {
    res.count = wind;
    res.method = CountMethod::WINDING;
    res.boundary_margin = margin;
    return res;
  }
  throw NotConverged("root iteration unconverged and winding failed: " +
                     winding_err);
}

}  // namespace polyzero

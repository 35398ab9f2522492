#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "polyzero/disk_oracle.hpp"
#include "polyzero/families.hpp"
#include "polyzero/hypothesis.hpp"

using namespace polyzero;

namespace {

/// Test-only oracle: expand prod (z - r_j) by convolution, scaled by lead.
Polynomial poly_from_roots(const std::vector<Complex>& roots, Complex lead) {
  std::vector<Complex> c{Complex(1.0, 0.0)};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] -= r * c[j];
      next[j + 1] += c[j];
    }
    c = std::move(next);
  }
  for (Complex& x : c) x *= lead;
  return Polynomial(std::move(c));
}

double closest_root_distance(const RootSet& rs, Complex target) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& z : rs.roots) {
    best = std::min(best, std::abs(z - target));
  }
  return best;
}

}  // namespace

TEST_CASE("aberth_roots on known roots") {
  const RootSet a = aberth_roots(poly_from_real({1, 0, 1}));
  REQUIRE(a.roots.size() == 2);
  CHECK(a.converged);
  CHECK(closest_root_distance(a, Complex(0, 1)) <= 1e-10);
  CHECK(closest_root_distance(a, Complex(0, -1)) <= 1e-10);
  for (double r : a.residuals) CHECK(r <= 1e-10);

  const RootSet b = aberth_roots(poly_from_real({1, -4.25, 1}));
  CHECK(b.converged);
  CHECK(closest_root_distance(b, Complex(0.25, 0)) <= 1e-9);
  CHECK(closest_root_distance(b, Complex(4.0, 0)) <= 1e-9);

  // triple root: accuracy degrades to ~1e-4, the count must not
  const RootSet c = aberth_roots(poly_from_real({-0.125, 0.75, -1.5, 1}));
  REQUIRE(c.roots.size() == 3);
  for (const Complex& z : c.roots) {
    CHECK(std::abs(z - Complex(0.5, 0)) <= 1e-4);
  }
}

TEST_CASE("winding_count on known configurations") {
  CHECK(winding_count(poly_from_real({0, 1}), 0.5) == 1);
  CHECK(winding_count(poly_from_real({1, -4.25, 1}), 0.5) == 1);
  CHECK(winding_count(poly_from_real({1, 1}), 0.5) == 0);
  CHECK(winding_count(poly_from_real({1, 0, 1}), 2.0) == 2);
  // a zero sitting on the contour is detected
  CHECK_THROWS_AS(winding_count(poly_from_real({-1, 1}), 1.0),
                  ContourNearZero);
}

TEST_CASE("count_in_disk on the worked examples") {
  const DiskCountResult a = count_in_disk(poly_from_real({1, 0, 1}), 0.5);
  CHECK(a.count == 0);
  CHECK(a.method == CountMethod::CROSS_CHECKED);

  const DiskCountResult b = count_in_disk(poly_from_real({1, 0, 1}), 1.5);
  CHECK(b.count == 2);

  const DiskCountResult c = count_in_disk(poly_from_real({0.21, -1, 1}), 0.5);
  CHECK(c.count == 1);
  CHECK(c.boundary_margin == doctest::Approx(0.2));

  const DiskCountResult d = count_in_disk(poly_from_real({0, 1}), 0.5);
  CHECK(d.count == 1);

  const DiskCountResult e = count_in_disk(poly_from_real({5}), 0.5);
  CHECK(e.count == 0);

  CHECK_THROWS_AS(count_in_disk(poly_from_real({1, 1}), 0.0), BadDelta);
}

TEST_CASE("roots and winding agree for well-separated roots") {
  SplitMix64 rng(0x6f7261636cu);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 7);
    std::vector<Complex> roots;
    for (int k = 0; k < n; ++k) {
      roots.emplace_back(rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4));
    }
    // enforce pairwise separation
    bool separated = true;
    for (std::size_t i = 0; i < roots.size() && separated; ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        if (std::abs(roots[i] - roots[j]) <= 1e-3) {
          separated = false;
          break;
        }
      }
    }
    if (!separated) continue;
    const Polynomial p = poly_from_roots(
        roots, Complex(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0)));
    const double delta = rng.uniform(0.3, 1.2);
    DiskCountResult r;
    try {
      r = count_in_disk(p, delta);
    } catch (const OracleDisagreement&) {
      REQUIRE(boundary_margin(p, delta) < 1e-6);
      continue;
    }
    if (!(r.boundary_margin > 1e-6)) continue;
    CHECK(r.method == CountMethod::CROSS_CHECKED);
    int expected = 0;
    for (const Complex& z : roots) {
      if (std::abs(z) <= delta) ++expected;
    }
    CHECK(r.count == expected);
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("counts stay correct with roots planted near the contour") {
  // Conjugate pairs just off the counting circle are the adversarial case:
  // the coefficients are real, so the quadrature error has no imaginary
  // signature, and it decays slowly enough to fake a plateau.
  SplitMix64 rng(0x6e656172u);
  for (double delta : {0.5, 0.9}) {
    for (double d : {1e-4, 1e-3, 1e-2}) {
      for (int side = -1; side <= 1; side += 2) {
        for (int rep = 0; rep < 4; ++rep) {
          const double theta = rng.uniform(0.1, 3.0);
          const double r = delta + side * d;
          std::vector<Complex> roots = {
              Complex(r * std::cos(theta), r * std::sin(theta)),
              Complex(r * std::cos(theta), -r * std::sin(theta)),
              Complex(0.3 * delta, 0.0),
              Complex(-1.8 * delta, 0.0),
          };
          const Polynomial p = poly_from_roots(roots, Complex(1.0, 0.0));
          const int expected = 1 + (side < 0 ? 2 : 0);
          const DiskCountResult c = count_in_disk(p, delta);
          CHECK(c.method == CountMethod::CROSS_CHECKED);
          CHECK(c.count == expected);
          CHECK(c.boundary_margin == doctest::Approx(d).epsilon(1e-6));
        }
      }
    }
  }
}

TEST_CASE("every zero lies inside the Cauchy radius") {
  SplitMix64 rng(0x63617563u);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 10);
    std::vector<Complex> c;
    for (int j = 0; j <= n; ++j) {
      c.emplace_back(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    }
    if (c.back() == Complex(0.0, 0.0)) c.back() = Complex(0.7, 0.0);
    const Polynomial p{c};
    const DiskCountResult r = count_in_disk(p, cauchy_radius(p) + 1.0);
    CHECK(r.count == n);
  }
}

TEST_CASE("Enestrom-Kakeya instances keep all roots in the unit disk") {
  SplitMix64 rng(0x656b6131u);
  for (int trial = 0; trial < 40; ++trial) {
    FamilySpec spec;
    spec.theorem = TheoremId::EK_A;
    spec.degree = 2 + static_cast<int>(rng.next() % 12);
    spec.seed = rng.next();
    const Polynomial p = sample(spec)[0];
    const RootSet rs = aberth_roots(p);
    CHECK(rs.converged);
    for (const Complex& z : rs.roots) {
      CHECK(std::abs(z) <= 1.0 + 1e-8);
    }
  }
}

TEST_CASE("converged residuals stay below 1e-8 of the coefficient scale") {
  // The flat 1e-8 bound is attainable exactly when the roots have moderate
  // modulus (the Horner noise floor sum |a_j||z|^j stays below it), so the
  // property is exercised on root configurations inside |z| <= 1.3.
  SplitMix64 rng(0x72657369u);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 49);
    std::vector<Complex> roots;
    for (int k = 0; k < n; ++k) {
      const double r = rng.uniform(0.0, 1.3);
      const double theta = rng.uniform(0.0, 6.28);
      roots.emplace_back(r * std::cos(theta), r * std::sin(theta));
    }
    const Polynomial p = poly_from_roots(roots, Complex(1.0, 0.0));
    const RootSet rs = aberth_roots(p);
    REQUIRE(rs.converged);
    const double scale = coeff_abs_sum(p);
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      CHECK(std::abs(eval(p, rs.roots[k])) <= 1e-8 * scale);
      CHECK(rs.residuals[k] <= 1e-8);
    }
  }
}

TEST_CASE("converged residuals respect the documented noise-aware bound") {
  SplitMix64 rng(0x6e6f6973u);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 49);
    std::vector<Complex> c;
    for (int j = 0; j <= n; ++j) {
      c.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
    if (std::abs(c.back()) < 1e-3) c.back() = Complex(1.0, 0.0);
    const Polynomial p{c};
    const RootSet rs = aberth_roots(p);
    if (!rs.converged) continue;  // budgeted by acceptance criterion 5
    const double scale = coeff_abs_sum(p);
    for (const Complex& z : rs.roots) {
      double noise = std::abs(c.back());
      for (int j = n; j-- > 0;) {
        noise = noise * std::abs(z) + std::abs(c[static_cast<std::size_t>(j)]);
      }
      const double tol =
          std::max(1e-8 * scale, 16.0 * n * DBL_EPSILON * noise);
      CHECK(std::abs(eval(p, z)) <= tol);
    }
  }
}

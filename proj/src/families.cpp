#include "polyzero/families.hpp"

#include <cmath>
#include <numbers>

#include "polyzero/errors.hpp"

namespace polyzero {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t instance_state(std::uint64_t seed, std::uint64_t index) {
  return splitmix64_mix(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
}

namespace {

constexpr double kPi = std::numbers::pi;

/// Nondecreasing positive chain: base in (0.1 s, 0.5 s), increments in
/// [0, 0.5 s / n], roughly one in ten pinned to exactly zero so the "<="
/// cases of the hypotheses actually occur.
std::vector<double> ascending_positive(SplitMix64& rng, int n, double s) {
  std::vector<double> a(static_cast<std::size_t>(n) + 1);
  a[0] = rng.uniform(0.1 * s, 0.5 * s);
  const double cap = 0.5 * s / n;
  for (int j = 1; j <= n; ++j) {
    double inc = rng.uniform(0.0, cap);
    if (rng.next_double() < 0.1) inc = 0.0;
    a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)] + inc;
  }
  return a;
}

std::vector<Complex> recipe_enestrom(SplitMix64& rng, int n, double s) {
  std::vector<double> alpha = ascending_positive(rng, n, s);
  std::vector<Complex> c(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) c[j] = Complex(alpha[j], 0.0);
  return c;
}

std::vector<Complex> recipe_real_chain(SplitMix64& rng, int n, double s) {
  std::vector<double> alpha = ascending_positive(rng, n, s);
  std::vector<Complex> c(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    c[j] = Complex(alpha[j], rng.uniform(-s, s));
  }
  return c;
}

std::vector<Complex> recipe_arg_cone(SplitMix64& rng, int n, double s) {
  const double beta = rng.uniform(0.0, 2.0 * kPi);
  const double alpha = rng.uniform(0.0, kPi / 2.0);
  // Strictly increasing moduli: reconstructing |a_j| from re/im parts
  // costs an ulp, so exact plateaus could re-order under hypot.
  std::vector<double> mod(static_cast<std::size_t>(n) + 1);
  mod[0] = rng.uniform(0.1 * s, 0.5 * s);
  for (int j = 1; j <= n; ++j) {
    mod[static_cast<std::size_t>(j)] =
        mod[static_cast<std::size_t>(j - 1)] +
        rng.uniform(1e-6 * s, 0.5 * s / n);
  }
  std::vector<Complex> c(mod.size());
  for (std::size_t j = 0; j < mod.size(); ++j) {
    // Interior margin keeps the argument inside the cone after the
    // round trip through cartesian components.
    const double theta =
        beta + alpha * (2.0 * rng.next_double() - 1.0) * 0.999999;
    c[j] = mod[j] * Complex(std::cos(theta), std::sin(theta));
  }
  return c;
}

std::vector<Complex> recipe_t2(SplitMix64& rng, int n, double s,
                               std::optional<int> lambda_opt) {
  const int lambda = lambda_opt ? *lambda_opt : rng.next_index(n);
  std::vector<double> alpha(static_cast<std::size_t>(n) + 1);
  const double cap = 2.0 * s / n;
  auto step = [&]() {
    double d = rng.uniform(0.0, cap);
    if (rng.next_double() < 0.1) d = 0.0;
    return d;
  };

  if (lambda == 0) {
    // alpha_0 >= alpha_1 >= ... >= alpha_{n-1}; alpha_n free (t absorbs it).
    alpha[0] = rng.uniform(-s, s);
    for (int j = 1; j <= n - 1; ++j) {
      alpha[static_cast<std::size_t>(j)] =
          alpha[static_cast<std::size_t>(j - 1)] - step();
    }
    alpha[static_cast<std::size_t>(n)] = rng.uniform(-s, s);
  } else if (lambda == n) {
    // alpha_1 <= ... <= alpha_n; alpha_0 free (s absorbs it).
    alpha[0] = rng.uniform(-s, s);
    if (n >= 1) alpha[1] = rng.uniform(-s, s);
    for (int j = 2; j <= n; ++j) {
      alpha[static_cast<std::size_t>(j)] =
          alpha[static_cast<std::size_t>(j - 1)] + step();
    }
  } else {
    // Unimodal interior with peak at lambda; both endpoints free.
    alpha[0] = rng.uniform(-s, s);
    alpha[1] = rng.uniform(-s, s);
    for (int j = 2; j <= lambda; ++j) {
      alpha[static_cast<std::size_t>(j)] =
          alpha[static_cast<std::size_t>(j - 1)] + step();
    }
    for (int j = lambda + 1; j <= n - 1; ++j) {
      alpha[static_cast<std::size_t>(j)] =
          alpha[static_cast<std::size_t>(j - 1)] - step();
    }
    alpha[static_cast<std::size_t>(n)] = rng.uniform(-s, s);
  }

  std::vector<Complex> c(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    c[j] = Complex(alpha[j], rng.uniform(-s, s));
  }
  // a_0 != 0 and a_n != 0 have probability zero of failing; nudging the
  // real part upward respects every chain direction that constrains it.
  if (c[0] == Complex(0.0, 0.0)) c[0] += Complex(0.5 * s, 0.0);
  if (c.back() == Complex(0.0, 0.0)) c.back() += Complex(0.5 * s, 0.0);
  return c;
}

enum class Recipe { ENESTROM, ARG_CONE, REAL_CHAIN, T2 };

Recipe recipe_for(TheoremId id) {
  switch (id) {
    case TheoremId::EK_A:
    case TheoremId::THM_B:
      return Recipe::ENESTROM;
    case TheoremId::THM_C:
    case TheoremId::THM_E:
      return Recipe::ARG_CONE;
    case TheoremId::THM_D:
    case TheoremId::THM_F:
      return Recipe::REAL_CHAIN;
    case TheoremId::THM_2:
      return Recipe::T2;
    default:
      throw InfeasibleSpec(std::string("no generator recipe for ") +
                           to_string(id));
  }
}

}  // namespace

std::vector<Polynomial> sample(const FamilySpec& spec) {
  if (spec.degree < 1) throw InfeasibleSpec("degree must be >= 1");
  if (spec.count < 1) throw InfeasibleSpec("count must be >= 1");
  if (!(spec.scale > 0.0)) throw InfeasibleSpec("scale must be positive");
  if (spec.lambda && (*spec.lambda < 0 || *spec.lambda > spec.degree)) {
    throw InfeasibleSpec("lambda out of {0..degree}");
  }
  const Recipe recipe = recipe_for(spec.theorem);
  if (spec.lambda && recipe != Recipe::T2) {
    throw InfeasibleSpec("lambda only applies to THM_2 families");
  }

  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    SplitMix64 rng(instance_state(spec.seed, static_cast<std::uint64_t>(i)));
    std::vector<Complex> coeffs;
    switch (recipe) {
      case Recipe::ENESTROM:
        coeffs = recipe_enestrom(rng, spec.degree, spec.scale);
        break;
      case Recipe::ARG_CONE:
        coeffs = recipe_arg_cone(rng, spec.degree, spec.scale);
        break;
      case Recipe::REAL_CHAIN:
        coeffs = recipe_real_chain(rng, spec.degree, spec.scale);
        break;
      case Recipe::T2:
        coeffs = recipe_t2(rng, spec.degree, spec.scale, spec.lambda);
        break;
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace polyzero

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyzero/hypothesis.hpp"
#include "polyzero/polynomial.hpp"

namespace polyzero {

/// SplitMix64 (Steele, Lea & Flood; constants from Vigna's reference
/// implementation). Chosen so coefficient streams are reproducible
/// bit-for-bit across platforms and implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 significant bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Uniform in {0, ..., m}. m is tiny here (a degree), so the modulo
  /// bias is irrelevant; determinism is what matters.
  int next_index(int m) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(m + 1));
  }

 private:
  std::uint64_t state_;
};

/// The SplitMix64 output permutation on its own (no state increment).
std::uint64_t splitmix64_mix(std::uint64_t z);

/// Initial generator state for instance `index` of a run seeded with
/// `seed`: splitmix64_mix(seed + (index + 1) * 0x9E3779B97F4A7C15), so each
/// instance is a pure function of (seed, index) with decorrelated streams.
std::uint64_t instance_state(std::uint64_t seed, std::uint64_t index);

/// Recipe for generating polynomials guaranteed to satisfy a hypothesis
/// class. Recipes exist for EK_A/THM_B (positive nondecreasing reals),
/// THM_C/THM_E (argument cone, nondecreasing moduli), THM_D/THM_F
/// (positive nondecreasing real parts, free imaginary parts) and THM_2
/// (unimodal real-part chain; lambda drawn per instance unless pinned).
struct FamilySpec {
  TheoremId theorem = TheoremId::THM_2;
  int degree = 1;
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::optional<int> lambda;
  int count = 1;
};

/// `count` polynomials, each passing the family's hypothesis checker.
/// Pure function of the spec. Throws InfeasibleSpec for invalid fields or
/// a theorem with no recipe.
std::vector<Polynomial> sample(const FamilySpec& spec);

}  // namespace polyzero

#include <cstring>
#include <set>

#include "doctest.h"
#include "polyzero/families.hpp"
#include "polyzero/hypothesis.hpp"

using namespace polyzero;

namespace {

bool bitwise_equal(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return false;
  return std::memcmp(a.coeffs().data(), b.coeffs().data(),
                     a.coeffs().size() * sizeof(Complex)) == 0;
}

}  // namespace

TEST_CASE("every sampled instance passes its hypothesis checker") {
  for (TheoremId family :
       {TheoremId::EK_A, TheoremId::THM_B, TheoremId::THM_C, TheoremId::THM_D,
        TheoremId::THM_E, TheoremId::THM_F, TheoremId::THM_2}) {
    for (std::uint64_t seed : {0ull, 42ull, 0xFFFFFFFFFFFFull}) {
      FamilySpec spec;
      spec.theorem = family;
      spec.degree = 6;
      spec.seed = seed;
      spec.count = 60;
      int pass = 0;
      for (const Polynomial& p : sample(spec)) {
        switch (family) {
          case TheoremId::EK_A:
          case TheoremId::THM_B:
            pass += check_enestrom_kakeya(p);
            break;
          case TheoremId::THM_C:
          case TheoremId::THM_E:
            pass += find_arg_params(p).has_value();
            break;
          case TheoremId::THM_D:
          case TheoremId::THM_F:
            pass += check_real_parts_positive_nondecreasing(p);
            break;
          default:
            pass += !find_t2_witnesses(p).empty();
        }
      }
      CHECK(pass == spec.count);
    }
  }
}

TEST_CASE("sampling is deterministic") {
  FamilySpec spec;
  spec.theorem = TheoremId::THM_B;
  spec.degree = 5;
  spec.seed = 42;
  spec.count = 100;
  const auto a = sample(spec);
  const auto b = sample(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(bitwise_equal(a[i], b[i]));
  }
  // a different seed diverges
  spec.seed = 43;
  const auto c = sample(spec);
  CHECK_FALSE(bitwise_equal(a[0], c[0]));
}

TEST_CASE("a pinned lambda is honored") {
  FamilySpec spec;
  spec.theorem = TheoremId::THM_2;
  spec.degree = 6;
  spec.seed = 11;
  spec.lambda = 3;
  spec.count = 50;
  for (const Polynomial& p : sample(spec)) {
    bool found = false;
    for (const Witness& w : find_t2_witnesses(p)) {
      if (*w.lambda == 3) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("random lambdas cover the whole range") {
  for (int degree : {4, 8}) {
    FamilySpec spec;
    spec.theorem = TheoremId::THM_2;
    spec.degree = degree;
    spec.seed = 2024;
    spec.count = 1000;
    std::set<int> seen;
    for (const Polynomial& p : sample(spec)) {
      for (const Witness& w : find_t2_witnesses(p)) seen.insert(*w.lambda);
    }
    for (int l = 0; l <= degree; ++l) CHECK(seen.count(l) == 1);
  }
}

TEST_CASE("infeasible specs are rejected") {
  FamilySpec spec;
  spec.theorem = TheoremId::THM_2;
  spec.degree = 4;

  spec.lambda = 5;
  CHECK_THROWS_AS(sample(spec), InfeasibleSpec);
  spec.lambda = -1;
  CHECK_THROWS_AS(sample(spec), InfeasibleSpec);
  spec.lambda.reset();

  spec.degree = 0;
  CHECK_THROWS_AS(sample(spec), InfeasibleSpec);
  spec.degree = 4;

  spec.count = 0;
  CHECK_THROWS_AS(sample(spec), InfeasibleSpec);
  spec.count = 1;

  spec.scale = 0.0;
  CHECK_THROWS_AS(sample(spec), InfeasibleSpec);
  spec.scale = 1.0;

  spec.theorem = TheoremId::COR_1;
  CHECK_THROWS_AS(sample(spec), InfeasibleSpec);

  spec.theorem = TheoremId::THM_B;
  spec.lambda = 2;
  CHECK_THROWS_AS(sample(spec), InfeasibleSpec);
}

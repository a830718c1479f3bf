#include <doctest.h>

#include <stdexcept>

#include "gemforge/coverings.hpp"
#include "gemforge/homology.hpp"
#include "gemforge/modular.hpp"

using namespace gemforge;

TEST_CASE("two-bridge types") {
  const TwoBridge whitehead(8, 3);
  CHECK_FALSE(whitehead.is_knot());
  CHECK(whitehead.is_hyperbolic());
  CHECK(whitehead.beta_square_is_alpha_pm_one());
  CHECK_FALSE(TwoBridge(12, 5).beta_square_is_alpha_pm_one());
  CHECK(TwoBridge(3, 2).is_knot());
  CHECK_FALSE(TwoBridge(3, 2).is_hyperbolic());
  CHECK(TwoBridge(8, -5).to_string() == "b(8,3)");
  CHECK_THROWS_AS(TwoBridge(8, 2), std::invalid_argument);
}

TEST_CASE("covering type ladder") {
  const auto type = [](int64_t b, std::vector<int64_t> k) { return covering_type(b, k); };
  CHECK(type(5, {1, 1}) == CoveringType::StrictlyCyclic);
  CHECK(type(5, {1, 4}) == CoveringType::AlmostStrictlyCyclic);
  CHECK(type(5, {1, 2}) == CoveringType::MeridianCyclic);
  CHECK(type(6, {1, 2}) == CoveringType::SinglyCyclic);
  CHECK(type(6, {2, 3}) == CoveringType::MonodromyCyclic);
  CHECK_THROWS(type(6, {2, 4}));
  CHECK_THROWS(type(6, {0, 1}));
}

TEST_CASE("Lins-Mandel spaces as coverings") {
  const LMCovering w = lm_to_covering({3, 8, 3, 1});
  CHECK(w.covering.to_string() == "M_{3,2}(8,3)");
  // k = 2 = -1 mod 3.
  CHECK(w.covering.type() == CoveringType::AlmostStrictlyCyclic);
  CHECK(lm_to_covering({5, 8, 3, 2}).covering.type() == CoveringType::MeridianCyclic);
  CHECK(lm_to_covering({6, 8, 3, 2}).covering.type() == CoveringType::SinglyCyclic);

  CHECK(lm_to_covering({5, 3, 2, 1}).covering.to_string() == "C_5(b(3,2))");
  // q moved into (0, p) through the equal graph.
  CHECK(lm_to_covering({3, 8, 11, 2}).covering.to_string() == "M_{3,2}(8,3)");
  CHECK(lm_to_covering({4, 12, 6, 1}).normalization.factor == 6);

  CHECK_THROWS_AS(lm_to_covering({3, 8, 3, 0}), std::domain_error);
  CHECK_THROWS_AS(lm_to_covering({4, 3, 1, 2}), std::domain_error);
}

TEST_CASE("theorem2") {
  CHECK(theorem2_equivalent(5, {8, 3}, 2, 3));
  CHECK(theorem2_equivalent(5, {8, 3}, 2, 2));
  CHECK_FALSE(theorem2_equivalent(7, {12, 5}, 2, 5));
  CHECK(theorem2_equivalent(7, {12, 5}, 2, 4));
  CHECK_THROWS_AS(theorem2_equivalent(5, {8, 1}, 2, 3), std::domain_error);
  CHECK_THROWS_AS(theorem2_equivalent(5, {7, 3}, 2, 3), std::domain_error);
  CHECK_THROWS_AS(theorem2_equivalent(6, {8, 3}, 2, 1), std::domain_error);
}

TEST_CASE("theorem3") {
  CHECK(theorem3_equivalent(5, 8, 3, 2, 3));
  CHECK(theorem3_equivalent(5, 8, 3, 2, 2));
  CHECK_FALSE(theorem3_equivalent(3, 12, 5, 1, 2));
  CHECK_THROWS_AS(theorem3_equivalent(5, 8, 1, 2, 3), std::domain_error);
  CHECK_THROWS_AS(theorem3_equivalent(4, 8, 3, 2, 1), std::domain_error);

  // theorem3 is theorem2 applied to M_{n,-m}(p,q).
  for (int64_t n = 3; n <= 9; ++n)
    for (int64_t p = 4; p <= 12; p += 2)
      for (int64_t q = 1; q < 2 * p; ++q) {
        if (gcd(p, q) != 1 || mod(q, p) == 1 || mod(q, p) == p - 1) continue;
        for (int64_t m = 1; m < n; ++m)
          for (int64_t m2 = 1; m2 < n; ++m2) {
            if (gcd(n, m) != 1 || gcd(n, m2) != 1) continue;
            CHECK(theorem3_equivalent(n, p, q, m, m2) ==
                  theorem2_equivalent(n, TwoBridge(p, q), -m, -m2));
          }
      }
}

TEST_CASE("conjecture predicate") {
  CHECK(conjectured_homeomorphic(6, 8, 3, 2, 4));
  CHECK_FALSE(conjectured_homeomorphic(6, 12, 5, 2, 4));
  CHECK_THROWS_AS(conjectured_homeomorphic(6, 8, 3, 1, 2), std::domain_error);
}

TEST_CASE("geometry") {
  CHECK(geometry({3, 7, 4, 1}).label == GeometryLabel::Hyperbolic);
  CHECK(geometry({3, 5, 2, 1}).label == GeometryLabel::Euclidean);
  CHECK(geometry({3, 5, 3, 2}).label == GeometryLabel::Euclidean);
  CHECK(geometry({4, 4, 1, 1}).label == GeometryLabel::Nil);
  CHECK(geometry({5, 3, 2, 1}).label == GeometryLabel::Spherical);
  CHECK(geometry({7, 3, 2, 1}).label == GeometryLabel::SL2R);
  CHECK(geometry({4, 3, 2, 0}).label == GeometryLabel::Spherical);
  CHECK_THROWS_AS(geometry({4, 3, 1, 2}), std::domain_error);
}

TEST_CASE("spherical spaces have finite H1") {
  for (int64_t n = 1; n <= 7; ++n)
    for (int64_t p = 1; p <= 7; ++p)
      for (int64_t q = 0; q < 2 * p; ++q)
        for (int64_t m = 0; m < n; ++m) {
          const LMParams x(n, p, q, m);
          if (!is_gem_parametric(x) || geometry(x).label != GeometryLabel::Spherical) continue;
          CAPTURE(x.to_string());
          CHECK(h1(build(x)).free_rank == 0);
        }
}

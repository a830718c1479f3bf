#include <doctest.h>

#include <stdexcept>

#include "gemforge/lins_mandel.hpp"
#include "gemforge/modular.hpp"

using namespace gemforge;

TEST_CASE("parameters are canonical") {
  const LMParams x(5, 3, -2, 6);
  CHECK(x.q() == 4);
  CHECK(x.m() == 1);
  CHECK(x.to_string() == "(5,3,4,1)");
  CHECK_THROWS_AS(LMParams(0, 3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(LMParams(3, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("mu") {
  CHECK(mu(1, 3) == 1);
  CHECK(mu(3, 3) == 1);
  CHECK(mu(0, 3) == -1);
  CHECK(mu(4, 3) == -1);
  CHECK(mu(-1, 3) == -1);
}

TEST_CASE("epsilon") {
  const LMParams x(5, 3, 2, 1);
  CHECK(epsilon(0, {0, 0}, x) == LMVertex{4, 5});
  CHECK(epsilon(3, {0, 1}, x) == LMVertex{1, 0});
  for (int64_t n = 1; n <= 4; ++n)
    for (int64_t p = 1; p <= 4; ++p)
      for (int64_t q = 0; q < 2 * p; ++q)
        for (int64_t m = 0; m < n; ++m) {
          const LMParams y(n, p, q, m);
          for (Colour k = 0; k < kColours; ++k)
            for (int64_t i = 0; i < n; ++i)
              for (int64_t j = 0; j < 2 * p; ++j)
                CHECK(epsilon(k, epsilon(k, {i, j}, y), y) == LMVertex{i, j});
        }
}

TEST_CASE("build") {
  CHECK(build({5, 3, 2, 1}).size() == 30);
  CHECK(build({3, 7, 4, 1}).size() == 42);
  CHECK(build({1, 1, 0, 0}).size() == 2);
  const LMParams x(3, 4, 1, 1);
  for (Vertex v = 0; v < 24; ++v) CHECK(index_of(x, coordinates_of(x, v)) == v);
}

TEST_CASE("equal graphs") {
  CHECK(graphs_equal({3, 4, 1, 1}, {3, 4, 1, 1}));
  CHECK_FALSE(graphs_equal({3, 4, 1, 1}, {3, 4, 3, 1}));
  for (int64_t n = 1; n <= 8; ++n)
    for (int64_t p = 1; p <= 8; ++p)
      for (int64_t q = 0; q < 2 * p; ++q)
        for (int64_t m = 0; m < n; ++m) {
          const LMParams x(n, p, q, m);
          CHECK(build(x) == build(x.lemma1_partner()));
        }
}

TEST_CASE("predicted census") {
  const ResidueCensus c = predicted_census({3, 4, 1, 1});
  CHECK(c.at({0, 1}) == std::vector<int64_t>{6, 6, 4, 4, 4});
  CHECK(predicted_census({5, 3, 2, 1}).at({0, 3}) == std::vector<int64_t>(5, 6));
  CHECK_THROWS_AS(predicted_census({3, 4, 2, 1}), std::domain_error);

  for (int64_t n = 1; n <= 6; ++n)
    for (int64_t p = 1; p <= 6; ++p)
      for (int64_t q = 0; q < 2 * p; ++q)
        for (int64_t m = 0; m < n; ++m) {
          const LMParams x(n, p, q, m);
          if (x.coprime_pq()) CHECK(predicted_census(x) == census(build(x)));
        }
}

TEST_CASE("parametric gem criterion") {
  CHECK(is_gem_parametric({3, 4, 1, 2}));
  CHECK(is_gem_parametric({5, 3, 2, 1}));
  CHECK_FALSE(is_gem_parametric({4, 3, 1, 2}));
  CHECK(coprime_reduction({4, 6, 2, 1}) == LMParams(4, 3, 1, 1));

  for (int64_t n = 1; n <= 6; ++n)
    for (int64_t p = 1; p <= 6; ++p)
      for (int64_t q = 0; q < 2 * p; ++q)
        for (int64_t m = 0; m < n; ++m) {
          const LMParams x(n, p, q, m);
          CHECK(is_gem_parametric(x) == is_gem(build(x)));
        }
}

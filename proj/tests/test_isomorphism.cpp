#include <doctest.h>

#include <set>

#include <stdexcept>

#include "gemforge/isomorphism.hpp"
#include "gemforge/modular.hpp"

using namespace gemforge;

namespace {

// Every coprime gem tuple with n, p in [lo, hi].
std::vector<LMParams> gem_tuples(int64_t lo, int64_t hi) {
  std::vector<LMParams> out;
  for (int64_t n = lo; n <= hi; ++n)
    for (int64_t p = lo; p <= hi; ++p)
      for (int64_t q = 0; q < 2 * p; ++q)
        for (int64_t m = 0; m < n; ++m) {
          const LMParams x(n, p, q, m);
          if (x.coprime_pq() && is_gem_parametric(x)) out.push_back(x);
        }
  return out;
}

}  // namespace

TEST_CASE("colour permutations") {
  const auto& perms = all_colour_perms();
  CHECK(perms.size() == 24);
  CHECK(perms.front() == kIdentityPerm);
  CHECK(std::set<ColourPerm>(perms.begin(), perms.end()).size() == 24);
  CHECK(cycle_notation({1, 0, 3, 2}) == "(0 1)(2 3)");
  CHECK(cycle_notation({3, 2, 1, 0}) == "(0 3)(1 2)");
}

TEST_CASE("verify") {
  const ColouredGraph g = build({3, 4, 1, 1});
  CHECK(verify(g, g, identity_witness(g.size())));

  IsoWitness swap01 = identity_witness(g.size());
  swap01.phi = {1, 0, 2, 3};
  CHECK_FALSE(verify(g, g, swap01));

  const NamedIso f1 = named_map(NamedMap::F1, {5, 3, 2, 1});
  CHECK(f1.target == LMParams(5, 3, 4, 1));
  CHECK(f1.witness.phi == kIdentityPerm);
  CHECK(verify(build(f1.source), build(f1.target), f1.witness));
  CHECK_THROWS(verify(g, build({3, 5, 2, 1}), identity_witness(g.size())));
}

TEST_CASE("propagate") {
  const ColouredGraph g = build({5, 8, 3, 2});
  const auto self = propagate(g, g, kIdentityPerm, 0, 0);
  REQUIRE(self);
  CHECK(*self == identity_witness(g.size()));

  // The seed (0,0) -> (0,1+q) under (0 3)(1 2) realizes f3.
  const LMParams target(5, 8, 3, 3);
  const auto w = propagate(g, build(target), {3, 2, 1, 0}, 0, index_of(target, {0, 4}));
  REQUIRE(w);
  CHECK(w->f == named_map(NamedMap::F3, {5, 8, 3, 2}).witness.f);

  const ColouredGraph a = build({3, 4, 1, 1}), b = build({3, 4, 1, 2});
  for (const auto& phi : all_colour_perms())
    for (Vertex image = 0; image < b.size(); ++image)
      CHECK_FALSE(propagate(a, b, phi, 0, image));
}

TEST_CASE("are_isomorphic") {
  const auto w = are_isomorphic(build({5, 8, 3, 2}), build({5, 8, 3, 3}));
  REQUIRE(w);
  CHECK(verify(build({5, 8, 3, 2}), build({5, 8, 3, 3}), *w));

  const ColouredGraph g = build({3, 7, 4, 1});
  const auto self = are_isomorphic(g, g);
  REQUIRE(self);
  CHECK(*self == identity_witness(g.size()));

  CHECK(are_isomorphic(build({2, 5, 1, 1}), build({5, 2, 1, 1})));
  CHECK_FALSE(are_isomorphic(build({3, 4, 1, 1}), build({3, 4, 1, 2})));
  CHECK_FALSE(are_isomorphic(build({3, 4, 1, 1}), build({3, 5, 2, 1})));
}

TEST_CASE("isomorphism is an equivalence relation") {
  const std::vector<LMParams> xs = {{4, 6, 1, 1}, {4, 6, 5, 1}, {4, 6, 7, 3}, {4, 6, 11, 3},
                                    {4, 6, 1, 3}, {4, 6, 5, 3}};
  std::vector<ColouredGraph> gs;
  for (const auto& x : xs) gs.push_back(build(x));
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = 0; j < gs.size(); ++j) {
      const auto ij = are_isomorphic(gs[i], gs[j]);
      CHECK(ij.has_value() == are_isomorphic(gs[j], gs[i]).has_value());
      if (!ij) continue;
      CHECK(verify(gs[i], gs[j], *ij));
      for (size_t k = 0; k < gs.size(); ++k) {
        const auto jk = are_isomorphic(gs[j], gs[k]);
        if (!jk) continue;
        const IsoWitness ik = compose(*ij, *jk);
        CHECK(verify(gs[i], gs[k], ik));
      }
    }
}

TEST_CASE("named maps verify on every applicable tuple") {
  int checked = 0;
  std::set<std::string> f2_cases;
  for (const auto& x : gem_tuples(1, 7)) {
    const ColouredGraph g = build(x);
    for (NamedMap which : {NamedMap::F1, NamedMap::F2, NamedMap::F3, NamedMap::R, NamedMap::S}) {
      try {
        const NamedIso iso = named_map(which, x);
        CAPTURE(x.to_string());
        CAPTURE(to_string(which));
        CHECK(verify(g, build(iso.target), iso.witness));
        if (which == NamedMap::F2) f2_cases.insert(iso.variant);
        ++checked;
      } catch (const std::domain_error&) {
      }
    }
  }
  CHECK(checked > 1000);
  CHECK(f2_cases == std::set<std::string>{"a", "b'", "b''"});
}

TEST_CASE("named map targets") {
  CHECK(named_map(NamedMap::F3, {5, 8, 3, 2}).target == LMParams(5, 8, 3, 3));
  CHECK(named_map(NamedMap::F2, {3, 8, 3, 1}).target == LMParams(3, 8, 11, 1));
  CHECK(named_map(NamedMap::F2, {3, 8, 3, 1}).variant == "a");
  CHECK(named_map(NamedMap::F2, {3, 5, 3, 2}).variant == "b'");
  CHECK(named_map(NamedMap::F2, {3, 5, 2, 1}).variant == "b''");
  CHECK_THROWS_AS(named_map(NamedMap::F3, {4, 8, 3, 2}), std::domain_error);
  CHECK_THROWS_AS(named_map(NamedMap::F2, {3, 5, 3, 1}), std::domain_error);
  CHECK(parse_named_map("f2") == NamedMap::F2);
  CHECK_THROWS(parse_named_map("f9"));
}

TEST_CASE("second coordinates") {
  CHECK(second_coordinates_distinct({3, 4, 1, 1}));
  CHECK(second_coordinates_distinct({5, 3, 2, 1}));
}

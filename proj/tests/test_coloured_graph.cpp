#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "gemforge/coloured_graph.hpp"
#include "gemforge/lins_mandel.hpp"

using namespace gemforge;

namespace {

ColouredGraph two_vertex_graph() {
  std::array<std::vector<Vertex>, kColours> inv;
  for (auto& v : inv) v = {1, 0};
  return ColouredGraph(inv);
}

std::vector<size_t> component_sizes(const Residues& r) {
  std::vector<size_t> out;
  for (const auto& c : r.components) out.push_back(c.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("colour sets") {
  const ColourSet s{0, 2};
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.size() == 2);
  CHECK(s.label() == "{0,2}");
  CHECK(s.complement() == ColourSet{1, 3});
  CHECK(colour_pairs().size() == 6);
  for (size_t i = 0; i < colour_pairs().size(); ++i) CHECK(pair_index(colour_pairs()[i]) == int(i));
}

TEST_CASE("constructor rejects non-involutions") {
  std::array<std::vector<Vertex>, kColours> inv;
  for (auto& v : inv) v = {1, 0};
  inv[2] = {0, 1};  // fixed points
  CHECK_THROWS_AS(ColouredGraph{inv}, std::invalid_argument);
  inv[2] = {1, 2};
  CHECK_THROWS_AS(ColouredGraph{inv}, std::invalid_argument);
}

TEST_CASE("residues") {
  const ColouredGraph g = build({3, 4, 1, 1});
  const Residues r12 = residues(g, {1, 2});
  CHECK(r12.components.size() == 3);
  for (const auto& c : r12.components) CHECK(c.size() == 8);

  CHECK(residues(g, {0, 1, 2, 3}).components.size() == 1);
  CHECK_THROWS(residues(g, ColourSet{}));

  // G(5,3,2,1): the {0,1}-residues are one cycle of length 10 and five of length 4.
  const Residues r01 = residues(build({5, 3, 2, 1}), {0, 1});
  CHECK(component_sizes(r01) == std::vector<size_t>{10, 4, 4, 4, 4, 4});
}

TEST_CASE("census") {
  const ResidueCensus c = census(build({3, 4, 1, 1}));
  CHECK(c.at({1, 3}) == std::vector<int64_t>(6, 4));
  CHECK(c.at({2, 3}) == std::vector<int64_t>{6, 6, 4, 4, 4});

  const ResidueCensus tiny = census(two_vertex_graph());
  for (const auto& lengths : tiny.lengths) CHECK(lengths == std::vector<int64_t>{2});
}

TEST_CASE("bipartite and gem tests") {
  CHECK(is_bipartite(build({5, 3, 2, 1})));
  CHECK(is_bipartite(build({3, 7, 4, 1})));
  CHECK(is_bipartite(two_vertex_graph()));

  CHECK(is_gem(build({5, 3, 2, 1})));
  CHECK(is_gem(build({3, 4, 1, 1})));
  CHECK_FALSE(is_gem(build({4, 3, 1, 2})));
  // Two vertices joined in all colours: the 3-sphere from two tetrahedra.
  CHECK(is_gem(two_vertex_graph()));
}

TEST_CASE("disconnected graphs are rejected by the gem test") {
  std::array<std::vector<Vertex>, kColours> inv;
  for (auto& v : inv) v = {1, 0, 3, 2};
  const ColouredGraph g(inv);
  CHECK_FALSE(is_connected(g));
  CHECK_THROWS_AS(is_gem(g), std::invalid_argument);
}

#include "gemforge/coloured_graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace gemforge {

std::vector<Colour> ColourSet::members() const {
  std::vector<Colour> out;
  for (Colour c = 0; c < kColours; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string ColourSet::label() const {
  std::string s = "{";
  bool first = true;
  for (Colour c : members()) {
    if (!first) s += ',';
    s += std::to_string(c);
    first = false;
  }
  return s + "}";
}

const std::array<ColourSet, 6>& colour_pairs() {
  static const std::array<ColourSet, 6> pairs = {
      ColourSet{0, 1}, ColourSet{0, 2}, ColourSet{0, 3},
      ColourSet{1, 2}, ColourSet{1, 3}, ColourSet{2, 3}};
  return pairs;
}

const std::array<ColourSet, 4>& colour_triples() {
  static const std::array<ColourSet, 4> triples = {
      ColourSet{0, 1, 2}, ColourSet{0, 1, 3}, ColourSet{0, 2, 3},
      ColourSet{1, 2, 3}};
  return triples;
}

int pair_index(ColourSet pair) {
  const auto& pairs = colour_pairs();
  for (int i = 0; i < 6; ++i)
    if (pairs[i] == pair) return i;
  throw std::invalid_argument("not a colour pair: " + pair.label());
}

ColouredGraph::ColouredGraph(std::array<std::vector<Vertex>, kColours> involutions)
    : involution_(std::move(involutions)) {
  const size_t n = involution_[0].size();
  if (n == 0) throw std::invalid_argument("coloured graph must have vertices");
  for (Colour c = 0; c < kColours; ++c) {
    const auto& e = involution_[c];
    if (e.size() != n)
      throw std::invalid_argument("involution tables differ in length");
    for (size_t v = 0; v < n; ++v) {
      Vertex w = e[v];
      if (w < 0 || static_cast<size_t>(w) >= n)
        throw std::invalid_argument("involution " + std::to_string(c) +
                                    " maps outside the vertex set");
      if (static_cast<size_t>(w) == v)
        throw std::invalid_argument("involution " + std::to_string(c) +
                                    " has a fixed point at " + std::to_string(v));
      if (static_cast<size_t>(e[w]) != v)
        throw std::invalid_argument("map " + std::to_string(c) +
                                    " is not an involution at " + std::to_string(v));
    }
  }
}

Residues residues(const ColouredGraph& g, ColourSet colours) {
  if (colours.empty()) throw std::invalid_argument("residues: empty colour set");
  const auto cs = colours.members();
  Residues r;
  r.component_of.assign(g.size(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (r.component_of[s] >= 0) continue;
    const auto id = static_cast<int32_t>(r.components.size());
    auto& comp = r.components.emplace_back();
    r.component_of[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Colour c : cs) {
        Vertex w = g.neighbour(c, v);
        if (r.component_of[w] < 0) {
          r.component_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return r;
}

const std::vector<int64_t>& ResidueCensus::at(ColourSet pair) const {
  return lengths[pair_index(pair)];
}

ResidueCensus census(const ColouredGraph& g) {
  ResidueCensus out;
  const auto& pairs = colour_pairs();
  for (int i = 0; i < 6; ++i) {
    auto res = residues(g, pairs[i]);
    auto& ls = out.lengths[i];
    for (const auto& comp : res.components) ls.push_back(static_cast<int64_t>(comp.size()));
    std::sort(ls.begin(), ls.end(), std::greater<>());
  }
  return out;
}

bool is_connected(const ColouredGraph& g) {
  return residues(g, ColourSet{0, 1, 2, 3}).components.size() == 1;
}

bool is_bipartite(const ColouredGraph& g) {
  std::vector<int8_t> side(g.size(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < kColours; ++c) {
        Vertex w = g.neighbour(c, v);
        if (side[w] < 0) {
          side[w] = static_cast<int8_t>(1 - side[v]);
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_gem(const ColouredGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("is_gem: graph is disconnected");

  std::array<Residues, 6> pair_res;
  for (int i = 0; i < 6; ++i) pair_res[i] = residues(g, colour_pairs()[i]);

  for (ColourSet triple : colour_triples()) {
    auto tri = residues(g, triple);
    std::vector<int> inner_pairs;
    for (int i = 0; i < 6; ++i)
      if ((colour_pairs()[i].bits() & ~triple.bits()) == 0) inner_pairs.push_back(i);

    for (const auto& comp : tri.components) {
      int64_t cycles = 0;
      for (int pi : inner_pairs) {
        std::vector<int32_t> ids;
        ids.reserve(comp.size());
        for (Vertex v : comp) ids.push_back(pair_res[pi].component_of[v]);
        std::sort(ids.begin(), ids.end());
        cycles += std::unique(ids.begin(), ids.end()) - ids.begin();
      }
      const auto vertices = static_cast<int64_t>(comp.size());
      // V - E + F with V = cycles, E = 3|R|/2, F = |R|
      if (2 * cycles - vertices != 4) return false;
    }
  }
  return true;
}

}  // namespace gemforge

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gemforge {

using Vertex = int32_t;
using Colour = int;

inline constexpr int kColours = 4;

/// Bitmask over the colour set {0,1,2,3}.
class ColourSet {
 public:
  constexpr ColourSet() = default;
  constexpr ColourSet(std::initializer_list<Colour> colours) {
    for (Colour c : colours) bits_ |= static_cast<uint8_t>(1u << c);
  }
  static constexpr ColourSet from_bits(uint8_t bits) {
    ColourSet s;
    s.bits_ = bits & 0xF;
    return s;
  }

  constexpr bool contains(Colour c) const { return (bits_ >> c) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr uint8_t bits() const { return bits_; }
  constexpr int size() const {
    int n = 0;
    for (Colour c = 0; c < kColours; ++c) n += contains(c);
    return n;
  }
  constexpr ColourSet complement() const { return from_bits(~bits_); }
  std::vector<Colour> members() const;
  std::string label() const;  // "{0,1}"

  friend constexpr bool operator==(ColourSet, ColourSet) = default;

 private:
  uint8_t bits_ = 0;
};

/// The six colour pairs in the order {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
const std::array<ColourSet, 6>& colour_pairs();
/// The four colour triples, ordered by the omitted colour 3,2,1,0.
const std::array<ColourSet, 4>& colour_triples();

/// A 4-regular, properly edge-coloured multigraph given by four
/// fixed-point-free involutions on dense vertex indices 0..size-1.
/// Parallel edges of different colours are allowed.
class ColouredGraph {
 public:
  /// Throws std::invalid_argument unless every table is a fixed-point-free
  /// involution of the same (positive) length.
  explicit ColouredGraph(std::array<std::vector<Vertex>, kColours> involutions);

  Vertex size() const { return static_cast<Vertex>(involution_[0].size()); }
  Vertex neighbour(Colour c, Vertex v) const { return involution_[c][v]; }
  std::span<const Vertex> involution(Colour c) const { return involution_[c]; }

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  std::array<std::vector<Vertex>, kColours> involution_;
};

/// Components of the subgraph spanned by `colours`.
struct Residues {
  std::vector<int32_t> component_of;             // vertex -> component id
  std::vector<std::vector<Vertex>> components;   // ordered by least vertex
};

/// Throws std::invalid_argument on an empty colour set.
Residues residues(const ColouredGraph& g, ColourSet colours);

/// Multiset of bicoloured-cycle lengths for each of the six colour pairs,
/// indexed like colour_pairs(); each list is sorted in decreasing order.
struct ResidueCensus {
  std::array<std::vector<int64_t>, 6> lengths;

  const std::vector<int64_t>& at(ColourSet pair) const;
  friend bool operator==(const ResidueCensus&, const ResidueCensus&) = default;
};

int pair_index(ColourSet pair);

ResidueCensus census(const ColouredGraph& g);

bool is_connected(const ColouredGraph& g);
bool is_bipartite(const ColouredGraph& g);

/// Direct manifold test: every 3-coloured residue must have Euler
/// characteristic 2. For a residue R the dual surface has one triangle per
/// vertex, 3|R|/2 edges and one vertex per bicoloured cycle inside R.
/// Throws std::invalid_argument on a disconnected graph.
bool is_gem(const ColouredGraph& g);

}  // namespace gemforge

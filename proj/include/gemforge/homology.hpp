#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gemforge/coloured_graph.hpp"

namespace gemforge {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Integer& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

 private:
  size_t rows_, cols_;
  std::vector<Integer> data_;
};

struct SmithForm {
  /// Nonzero diagonal d1 | d2 | ... | d_rank, all positive, 1s included.
  std::vector<Integer> invariant_factors;
  size_t rank = 0;
};

/// Exact Smith normal form. Unit pivots are eliminated sparsely first; the
/// remainder is diagonalized densely and gcd-smoothed into a divisibility
/// chain.
SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + Z_d1 + ... with d1 | d2 | ...
/// and every d_i >= 2.
struct AbelianGroup {
  int64_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;  // "0", "Z", "Z_2 + Z_6", ...
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup make_abelian_group(int64_t free_rank, std::vector<Integer> orders);

/// Cokernel of the relation matrix (rows = relators, cols = generators).
AbelianGroup abelian_group_from_relations(const IntMatrix& relations);

/// Cell structure of the pseudocomplex a 4-coloured graph encodes.
/// 3-cells are graph vertices, 2-cells graph edges, 1-cells bicoloured
/// cycles and 0-cells tricoloured residues; incidence is residue containment.
/// A simplex vertex labelled x corresponds to the residue avoiding x, and a
/// simplex edge labelled {x,y} to the residue avoiding x and y.
struct FacePoset {
  struct Edge {
    Vertex v;  // endpoint with v < eps_c(v)
    Colour c;
  };
  struct OneCell {
    ColourSet colours;
    /// 0-cells at the endpoint labelled by the smaller / larger of the two
    /// colours not in `colours`. Possibly equal.
    std::array<int32_t, 2> ends;
  };
  struct ZeroCell {
    ColourSet colours;
  };

  Vertex three_cells = 0;
  std::vector<Edge> two_cells;
  std::vector<OneCell> one_cells;
  std::vector<ZeroCell> zero_cells;
  /// Per colour pair (colour_pairs() order), vertex -> 1-cell id.
  std::array<std::vector<int32_t>, 6> one_cell_of;
  /// Per colour triple (colour_triples() order), vertex -> 0-cell id.
  std::array<std::vector<int32_t>, 4> zero_cell_of;

  /// The three 1-cells ({c,a}-, {c,b}-, {c,d}-cycles) bounding a 2-cell.
  std::array<int32_t, 3> one_cells_of(const Edge& e) const;
  /// The three 0-cells ({c,a,b}-, {c,a,d}-, {c,b,d}-residues) of a 2-cell.
  std::array<int32_t, 3> zero_cells_of(const Edge& e) const;
};

/// Throws std::invalid_argument on a disconnected graph.
FacePoset face_poset(const ColouredGraph& g);

enum class TreeStrategy {
  BreadthFirst,  // from the least 0-cell containing vertex 0, by cell index
  DepthFirst,    // from the greatest 0-cell containing vertex 0
};

/// Edge-path presentation of pi_1 of the 2-skeleton.
struct Presentation {
  struct Letter {
    int32_t generator;
    int exponent;  // +1 or -1
  };
  /// generator index -> 1-cell id
  std::vector<int32_t> generators;
  /// One word per 2-cell; letters for spanning-tree 1-cells are dropped.
  std::vector<std::vector<Letter>> relators;
  std::vector<int32_t> tree;  // spanning-tree 1-cells
};

Presentation pi1_presentation(const FacePoset& fp,
                              TreeStrategy strategy = TreeStrategy::BreadthFirst);

AbelianGroup abelianize(const Presentation& pres);

/// First homology of the encoded 3-manifold. Throws std::domain_error if the
/// graph is not a gem, std::invalid_argument if it is disconnected.
AbelianGroup h1(const ColouredGraph& g, TreeStrategy strategy = TreeStrategy::BreadthFirst);

}  // namespace gemforge

#include "gemforge/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace gemforge {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (int64_t x : r) data_.emplace_back(x);
  }
}

namespace {

using SparseRow = std::map<size_t, Integer>;

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Eliminates every entry of absolute value 1, one pivot at a time, choosing
/// the pivot with the least fill-in. Each pivot removes one row and one
/// column and contributes an invariant factor 1.
size_t eliminate_unit_pivots(std::vector<SparseRow>& rows, size_t cols) {
  std::vector<std::vector<size_t>> col_rows(cols);
  auto rebuild = [&] {
    for (auto& c : col_rows) c.clear();
    for (size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  };
  rebuild();

  size_t pivots = 0;
  for (;;) {
    size_t best_r = rows.size(), best_c = cols, best_cost = SIZE_MAX;
    for (size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        const size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r == rows.size()) break;

    const SparseRow pivot = std::move(rows[best_r]);
    rows[best_r].clear();
    const Integer& pv = pivot.at(best_c);
    for (size_t r : col_rows[best_c]) {
      if (r == best_r) continue;
      auto it = rows[r].find(best_c);
      if (it == rows[r].end()) continue;
      const Integer factor = it->second * pv;  // pv = +-1, so pv^-1 = pv
      for (const auto& [c, v] : pivot) {
        Integer& x = rows[r][c];
        x -= factor * v;
        if (x == 0) rows[r].erase(c);
      }
    }
    ++pivots;
    // The pivot column is now zero outside the pivot row; dropping the row
    // and column is the matching column operation.
    std::vector<SparseRow> kept;
    kept.reserve(rows.size());
    for (auto& r : rows) {
      r.erase(best_c);
      if (!r.empty()) kept.push_back(std::move(r));
    }
    rows = std::move(kept);
    rebuild();
  }
  return pivots;
}

/// Dense diagonalization by repeated least-magnitude pivoting.
std::vector<Integer> diagonalize(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> diag;
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      size_t pr = rows, pc = cols;
      Integer best;
      for (size_t r = t; r < rows; ++r)
        for (size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || abs_value(a[r][c]) < best)) {
            best = abs_value(a[r][c]);
            pr = r;
            pc = c;
          }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        const Integer qt = a[r][t] / a[t][t];
        for (size_t c = t; c < cols; ++c) a[r][c] -= qt * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        const Integer qt = a[t][c] / a[t][t];
        for (size_t r = t; r < rows; ++r) a[r][c] -= qt * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs_value(a[t][t]));
  }
  return diag;
}

/// Replaces pairs (d_i, d_j) by (gcd, lcm) until d_1 | d_2 | ... holds.
void smooth(std::vector<Integer>& d) {
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      const Integer g = boost::multiprecision::gcd(d[i], d[j]);
      const Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  std::vector<SparseRow> rows;
  for (size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) row.emplace(c, m(r, c));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const size_t units = eliminate_unit_pivots(rows, m.cols());

  std::vector<size_t> live_cols;
  for (const auto& r : rows)
    for (const auto& [c, v] : r) live_cols.push_back(c);
  std::sort(live_cols.begin(), live_cols.end());
  live_cols.erase(std::unique(live_cols.begin(), live_cols.end()), live_cols.end());

  std::vector<std::vector<Integer>> dense(rows.size(), std::vector<Integer>(live_cols.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r])
      dense[r][std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin()] = v;

  SmithForm out;
  out.invariant_factors.assign(units, Integer(1));
  for (auto& d : diagonalize(std::move(dense))) out.invariant_factors.push_back(std::move(d));
  smooth(out.invariant_factors);
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  out.rank = out.invariant_factors.size();
  return out;
}

std::string AbelianGroup::to_string() const {
  std::string s;
  auto add = [&](const std::string& term) { s += (s.empty() ? "" : " + ") + term; };
  for (int64_t i = 0; i < free_rank; ++i) add("Z");
  for (const auto& t : torsion) add("Z_" + t.str());
  return s.empty() ? "0" : s;
}

AbelianGroup make_abelian_group(int64_t free_rank, std::vector<Integer> orders) {
  std::vector<Integer> d;
  for (auto& o : orders) {
    if (o < 0) o = -o;
    if (o == 0)
      ++free_rank;
    else if (o != 1)
      d.push_back(std::move(o));
  }
  smooth(d);
  std::sort(d.begin(), d.end());
  AbelianGroup g;
  g.free_rank = free_rank;
  for (auto& x : d)
    if (x != 1) g.torsion.push_back(std::move(x));
  return g;
}

AbelianGroup abelian_group_from_relations(const IntMatrix& relations) {
  const SmithForm snf = smith_normal_form(relations);
  return make_abelian_group(static_cast<int64_t>(relations.cols() - snf.rank),
                            snf.invariant_factors);
}

namespace {

int triple_index(ColourSet triple) {
  const auto& triples = colour_triples();
  for (int i = 0; i < 4; ++i)
    if (triples[i] == triple) return i;
  throw std::invalid_argument("not a colour triple: " + triple.label());
}

/// The colours other than c, increasing.
std::array<Colour, 3> others(Colour c) {
  std::array<Colour, 3> out{};
  int k = 0;
  for (Colour x = 0; x < kColours; ++x)
    if (x != c) out[k++] = x;
  return out;
}

}  // namespace

std::array<int32_t, 3> FacePoset::one_cells_of(const Edge& e) const {
  const auto o = others(e.c);
  std::array<int32_t, 3> out{};
  for (int k = 0; k < 3; ++k) out[k] = one_cell_of[pair_index({e.c, o[k]})][e.v];
  return out;
}

std::array<int32_t, 3> FacePoset::zero_cells_of(const Edge& e) const {
  const auto [a, b, d] = others(e.c);
  return {zero_cell_of[triple_index({e.c, a, b})][e.v],
          zero_cell_of[triple_index({e.c, a, d})][e.v],
          zero_cell_of[triple_index({e.c, b, d})][e.v]};
}

FacePoset face_poset(const ColouredGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("face_poset: graph is disconnected");
  FacePoset fp;
  fp.three_cells = g.size();
  for (Vertex v = 0; v < g.size(); ++v)
    for (Colour c = 0; c < kColours; ++c)
      if (v < g.neighbour(c, v)) fp.two_cells.push_back({v, c});

  for (int t = 0; t < 4; ++t) {
    const auto res = residues(g, colour_triples()[t]);
    const auto offset = static_cast<int32_t>(fp.zero_cells.size());
    fp.zero_cell_of[t].resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) fp.zero_cell_of[t][v] = offset + res.component_of[v];
    for (size_t k = 0; k < res.components.size(); ++k)
      fp.zero_cells.push_back({colour_triples()[t]});
  }

  for (int pi = 0; pi < 6; ++pi) {
    const ColourSet pair = colour_pairs()[pi];
    const auto res = residues(g, pair);
    const auto offset = static_cast<int32_t>(fp.one_cells.size());
    fp.one_cell_of[pi].resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) fp.one_cell_of[pi][v] = offset + res.component_of[v];

    const auto missing = pair.complement().members();  // x < y
    const int low_end = triple_index(ColourSet::from_bits(pair.bits() | (1u << missing[1])));
    const int high_end = triple_index(ColourSet::from_bits(pair.bits() | (1u << missing[0])));
    for (const auto& comp : res.components) {
      const Vertex v = comp.front();
      fp.one_cells.push_back({pair, {fp.zero_cell_of[low_end][v], fp.zero_cell_of[high_end][v]}});
    }
  }
  return fp;
}

Presentation pi1_presentation(const FacePoset& fp, TreeStrategy strategy) {
  const size_t nodes = fp.zero_cells.size();
  std::vector<std::vector<std::pair<int32_t, int32_t>>> adjacency(nodes);
  for (size_t e = 0; e < fp.one_cells.size(); ++e) {
    const auto [a, b] = fp.one_cells[e].ends;
    if (a == b) continue;
    adjacency[a].push_back({static_cast<int32_t>(e), b});
    adjacency[b].push_back({static_cast<int32_t>(e), a});
  }

  int32_t root = fp.zero_cell_of[0][0];
  for (int t = 1; t < 4; ++t) {
    const int32_t z = fp.zero_cell_of[t][0];
    root = strategy == TreeStrategy::BreadthFirst ? std::min(root, z) : std::max(root, z);
  }

  std::vector<bool> in_tree(fp.one_cells.size(), false), reached(nodes, false);
  reached[root] = true;
  if (strategy == TreeStrategy::BreadthFirst) {
    std::vector<int32_t> queue{root};
    for (size_t head = 0; head < queue.size(); ++head)
      for (const auto& [e, w] : adjacency[queue[head]])
        if (!reached[w]) {
          reached[w] = true;
          in_tree[e] = true;
          queue.push_back(w);
        }
  } else {
    std::vector<std::pair<int32_t, size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == adjacency[node].size()) {
        stack.pop_back();
        continue;
      }
      const auto [e, w] = adjacency[node][next++];
      if (!reached[w]) {
        reached[w] = true;
        in_tree[e] = true;
        stack.push_back({w, 0});
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw std::logic_error("pi1_presentation: 1-skeleton is disconnected");

  Presentation pres;
  std::vector<int32_t> generator_of(fp.one_cells.size(), -1);
  for (size_t e = 0; e < fp.one_cells.size(); ++e) {
    if (in_tree[e]) {
      pres.tree.push_back(static_cast<int32_t>(e));
    } else {
      generator_of[e] = static_cast<int32_t>(pres.generators.size());
      pres.generators.push_back(static_cast<int32_t>(e));
    }
  }

  // Triangle with labels x < y < z walked x -> y -> z -> x: the label edge
  // {x,y} is the {c,z}-cycle, {y,z} the {c,x}-cycle, {x,z} the {c,y}-cycle.
  for (const auto& edge : fp.two_cells) {
    const auto [x, y, z] = others(edge.c);
    const std::array<std::pair<Colour, int>, 3> walk = {{{z, +1}, {x, +1}, {y, -1}}};
    auto& word = pres.relators.emplace_back();
    for (const auto& [other, exponent] : walk) {
      const int32_t cell = fp.one_cell_of[pair_index({edge.c, other})][edge.v];
      if (generator_of[cell] >= 0) word.push_back({generator_of[cell], exponent});
    }
  }
  return pres;
}

AbelianGroup abelianize(const Presentation& pres) {
  IntMatrix rel(pres.relators.size(), pres.generators.size());
  for (size_t r = 0; r < pres.relators.size(); ++r)
    for (const auto& letter : pres.relators[r]) rel(r, letter.generator) += letter.exponent;
  return abelian_group_from_relations(rel);
}

AbelianGroup h1(const ColouredGraph& g, TreeStrategy strategy) {
  if (!is_gem(g)) throw std::domain_error("h1: graph does not encode a manifold");
  return abelianize(pi1_presentation(face_poset(g), strategy));
}

}  // namespace gemforge

#pragma once

#include <cstdint>
#include <string>

#include "gemforge/coloured_graph.hpp"

namespace gemforge {

/// Parameters (n, p, q, m) of a Lins-Mandel graph. q lives in Z_2p and m in
/// Z_n; both are stored as canonical representatives.
class LMParams {
 public:
  /// Throws std::invalid_argument unless n >= 1 and p >= 1.
  LMParams(int64_t n, int64_t p, int64_t q, int64_t m);

  int64_t n() const { return n_; }
  int64_t p() const { return p_; }
  int64_t q() const { return q_; }
  int64_t m() const { return m_; }

  bool coprime_pq() const;
  /// (-1)^q read in Z_n, i.e. 1 or n-1 (0 when n = 1).
  int64_t sign_of_q_mod_n() const;

  /// The partner tuple (n, p, q+p, -m) that defines the same labelled graph.
  LMParams lemma1_partner() const { return {n_, p_, q_ + p_, -m_}; }

  std::string to_string() const;  // "(n,p,q,m)"

  friend bool operator==(const LMParams&, const LMParams&) = default;
  friend auto operator<=>(const LMParams&, const LMParams&) = default;

 private:
  int64_t n_, p_, q_, m_;
};

/// A vertex (i, j) of Z_n x Z_2p.
struct LMVertex {
  int64_t i;
  int64_t j;
  friend bool operator==(const LMVertex&, const LMVertex&) = default;
};

/// Dense vertex index i*2p + j.
Vertex index_of(const LMParams& params, LMVertex v);
LMVertex coordinates_of(const LMParams& params, Vertex index);

/// +1 iff the canonical representative of j mod 2p lies in [1, p].
int mu(int64_t j, int64_t p);

/// Image of v under the colour-k involution of G(n,p,q,m).
LMVertex epsilon(Colour k, LMVertex v, const LMParams& params);

ColouredGraph build(const LMParams& params);

/// Equality of the labelled graphs (involution tables), not isomorphism.
bool graphs_equal(const LMParams& a, const LMParams& b);

/// Residue census read off the closed-form lists. Throws std::domain_error
/// when gcd(p, q) != 1.
ResidueCensus predicted_census(const LMParams& params);

/// (n, p/g, q/g, m) with g = gcd(p, q). The encoded spaces of a tuple and
/// its reduction are homeomorphic; the graphs differ. Never applied by build().
LMParams coprime_reduction(const LMParams& params);

/// Manifold criterion: p even, or p odd and m in {0, (-1)^q}. The criterion
/// holds for coprime (p, q), so it is evaluated on coprime_reduction(params);
/// e.g. G(3,2,0,2) is singular because (3,1,0,2) fails the odd-p branch.
bool is_gem_parametric(const LMParams& params);

}  // namespace gemforge

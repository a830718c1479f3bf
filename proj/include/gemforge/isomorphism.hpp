#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gemforge/coloured_graph.hpp"
#include "gemforge/lins_mandel.hpp"

namespace gemforge {

/// Permutation of the colour set in one-line notation: colour k goes to at(k).
using ColourPerm = std::array<Colour, kColours>;

inline constexpr ColourPerm kIdentityPerm = {0, 1, 2, 3};

/// All 24 colour permutations, lexicographic in one-line notation.
const std::vector<ColourPerm>& all_colour_perms();

/// Cycle notation, e.g. "(0 3)(1 2)" or "1" for the identity.
std::string cycle_notation(const ColourPerm& phi);

/// Isomorphism (f, phi) with f * eps_k = eps'_{phi(k)} * f for every colour k.
struct IsoWitness {
  std::vector<Vertex> f;
  ColourPerm phi = kIdentityPerm;

  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

IsoWitness identity_witness(Vertex size);

/// `second` after `first`: a witness G -> G'' from G -> G' and G' -> G''.
IsoWitness compose(const IsoWitness& first, const IsoWitness& second);

/// Throws std::invalid_argument if the graphs differ in size or the witness
/// has the wrong length.
bool verify(const ColouredGraph& g, const ColouredGraph& h, const IsoWitness& w);

/// Extends f(seed) = image along the involutions, breadth-first with colours
/// in the order 0..3. Returns the unique witness if it is consistent.
/// Throws std::invalid_argument on disconnected input or a size mismatch.
std::optional<IsoWitness> propagate(const ColouredGraph& g, const ColouredGraph& h,
                                    const ColourPerm& phi, Vertex seed, Vertex image);

/// Exhaustive decision: every colour permutation (lexicographic) and every
/// image of vertex 0 (index order). The first witness found is returned.
std::optional<IsoWitness> are_isomorphic(const ColouredGraph& g, const ColouredGraph& h);

enum class NamedMap { F1, F2, F3, R, S };

NamedMap parse_named_map(const std::string& name);
std::string to_string(NamedMap which);

/// A named isomorphism between G(source) and G(target).
struct NamedIso {
  NamedMap which;
  LMParams source;
  LMParams target;
  IsoWitness witness;
  /// For f2: which branch produced it ("a", "b'", "b''"); empty otherwise.
  std::string variant;
};

/// Builds the named map for G(params):
///   f1: G(n,p,q,m) -> G(n,p,-q,m),      f1(i,j) = (-i, 1-j), phi = 1
///   f2: p even -> G(n,p,q^-1,m), phi = (0 1)(2 3);
///       p,q odd, m = -1 -> G(n,p,q^-1,-1), phi = (0 2)(1 3);
///       p odd, q even, m = 1 -> G(n,p,(q+p)^-1+p,1), through the equal
///       graph G(n,p,q+p,-1);
///   f3: gcd(n,m) = 1 -> G(n,p,q,m^-1), f3(i,j) = (-m^-1 i, 1+q-j);
///   r, s: the automorphisms (i+1, j) and (-i, p+j).
/// f2 is produced by iterating the involutions of the target, never by a
/// closed form. Throws std::domain_error on unmet preconditions.
NamedIso named_map(NamedMap which, const LMParams& params);

/// True iff every {0,3}-residue of G(params) has 2p vertices with pairwise
/// distinct second coordinates. Vacuously true when the graph does not have
/// exactly n {0,3}-residues.
bool second_coordinates_distinct(const LMParams& params);

}  // namespace gemforge

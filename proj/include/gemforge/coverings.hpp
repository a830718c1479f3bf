#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "gemforge/lins_mandel.hpp"

namespace gemforge {

/// Two-bridge knot or link b(alpha, beta), beta canonical in [0, alpha).
class TwoBridge {
 public:
  /// Throws std::invalid_argument unless alpha >= 1 and gcd(alpha, beta) = 1.
  TwoBridge(int64_t alpha, int64_t beta);

  int64_t alpha() const { return alpha_; }
  int64_t beta() const { return beta_; }
  bool is_knot() const { return alpha_ % 2 == 1; }
  /// Not toroidal: beta is not +-1 mod alpha.
  bool is_hyperbolic() const;
  /// beta^2 congruent to alpha +- 1 mod 2 alpha. For even alpha this does not
  /// depend on the representative of beta mod alpha, and is unchanged by
  /// beta -> -beta and beta -> beta^-1.
  bool beta_square_is_alpha_pm_one() const;
  std::string to_string() const;  // "b(8,3)"

  friend bool operator==(const TwoBridge&, const TwoBridge&) = default;

 private:
  int64_t alpha_, beta_;
};

enum class CoveringType {
  StrictlyCyclic,
  AlmostStrictlyCyclic,
  MeridianCyclic,
  SinglyCyclic,
  MonodromyCyclic,
};

std::string to_string(CoveringType t);

/// Strongest label of the ladder strictly => almost-strictly => meridian =>
/// singly => monodromy-cyclic for windings k_i in Z_b - {0}.
/// Throws std::invalid_argument if a winding is 0 mod b or the windings do
/// not generate Z_b.
CoveringType covering_type(int64_t b, std::span<const int64_t> windings);

/// b-fold branched cyclic covering of a two-bridge link with windings
/// (1, k), i.e. M_{b,k}(alpha, beta); for knots `k` is empty.
struct CoveringDesc {
  int64_t b;
  TwoBridge link;
  std::optional<int64_t> k;

  CoveringType type() const;
  std::string to_string() const;  // "M_{3,2}(8,3)" or "C_5(b(3,2))"
};

/// S(n,kp,kq,m) -> S(n,p,q,m) with gcd(p,q) = 1.
struct SpaceNormalization {
  LMParams params;
  int64_t factor;  // k; 1 when nothing changed
};

SpaceNormalization normalize_space(const LMParams& params);

struct LMCovering {
  CoveringDesc covering;
  SpaceNormalization normalization;
  /// The tuple the covering was read from: normalized, then moved to
  /// 0 < q < p through the equal graph (n, p, q-p, -m) when needed.
  LMParams representative;
};

/// Branched-covering description of S(n,p,q,m):
///   p even, m != 0:     M_{n,-m}(p,q), singly-cyclic over the link b(p,q);
///   p odd, m = (-1)^q:  the n-fold cyclic covering of the knot b(p,q).
/// Throws std::domain_error for non-gems, p even with m = 0, p odd with
/// m = 0, or n < 2.
LMCovering lm_to_covering(const LMParams& params);

/// Homeomorphism of M_{b,k'}(alpha,beta) and M_{b,k}(alpha,beta) for a
/// hyperbolic two-component link and meridian-cyclic windings:
///   k' = k^{+-1}, or k' = +-k^{+-1} when beta^2 = alpha +- 1.
/// Throws std::domain_error on unmet hypotheses.
bool theorem2_equivalent(int64_t b, const TwoBridge& link, int64_t k, int64_t k_prime);

/// Homeomorphism of S(n,p,q,m') and S(n,p,q,m) for n,p >= 3, p even,
/// q != +-1 mod p, gcd(n,m) = gcd(n,m') = 1:
///   m' = m^{+-1}, or m' = +-m^{+-1} when q^2 = p +- 1 (mod 2p).
/// Throws std::domain_error on unmet hypotheses.
bool theorem3_equivalent(int64_t n, int64_t p, int64_t q, int64_t m, int64_t m_prime);

/// Open conjecture for gcd(n,m) != 1, same hypotheses otherwise:
///   m' = m, or m' = +-m when q^2 = p +- 1 (mod 2p).
/// Used only to gather evidence. Throws std::domain_error on unmet hypotheses.
bool conjectured_homeomorphic(int64_t n, int64_t p, int64_t q, int64_t m, int64_t m_prime);

enum class GeometryLabel { Hyperbolic, Euclidean, Spherical, Nil, SL2R, Unknown };

std::string to_string(GeometryLabel g);

struct GeometryResult {
  GeometryLabel label;
  std::string reason;
  SpaceNormalization normalization;
};

/// Geometry of S(n,p,q,m) where it is known:
///   m = 0, p = 1, or n = 2 with m = 1, or p = 2 with gcd(n,m) = 1: spherical
///   (S^3 or a lens space);
///   q = +-1 mod p with m = (-1)^q (on either equal-graph tuple): spherical,
///   Nil or SL2R as 1/n + 1/p is >, = or < 1/2;
///   gcd(n,m) = 1, q != +-1 mod p: euclidean for n = 3, p = 5, otherwise
///   hyperbolic for n >= 3 (n >= 4 when p = 5).
/// Anything else is Unknown. Throws std::domain_error for non-gems.
GeometryResult geometry(const LMParams& params);

}  // namespace gemforge

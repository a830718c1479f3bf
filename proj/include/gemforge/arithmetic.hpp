#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gemforge/coloured_graph.hpp"
#include "gemforge/lins_mandel.hpp"

namespace gemforge {

enum class IsoRule {
  APrime,         // p even, gcd(n,m) != 1
  ADoublePrime,   // p even, gcd(n,m) = 1
  B,              // p odd, m = (-1)^q
  EqualByLemma1,  // (n,p,q+p,-m): the same labelled graph
  Rigidity,       // (n',p') != (n,p)
  OutOfScope,
};

std::string to_string(IsoRule rule);

/// Tri-state isomorphism verdict: `isomorphic` is empty iff the rule is
/// OutOfScope.
struct IsoVerdict {
  std::optional<bool> isomorphic;
  IsoRule rule = IsoRule::OutOfScope;
  std::string matched_condition;
};

/// Residue-census rigidity for n, p >= 3: isomorphic graphs must share
/// (n, p). Returns false when (n',p') != (n,p); otherwise checks that both
/// censuses contain a colour pair made of exactly n cycles of length 2p.
/// Throws std::domain_error when a parameter is below 3.
bool rigidity(const ResidueCensus& census_a, const ResidueCensus& census_b, int64_t n, int64_t p,
              int64_t n_b, int64_t p_b);

/// Arithmetic isomorphism criterion for G(a) and G(b).
/// q-conditions are read in Z_2p for p even and mod p for p odd; m-conditions
/// in Z_n. Throws std::domain_error if n or p is below 3 or gcd(p,q) != 1 on
/// either side. Odd p with m != (-1)^q (e.g. the S^3 case m = 0) is
/// OutOfScope.
IsoVerdict theorem1(const LMParams& a, const LMParams& b);

/// Classes of m in Z_n - {0} under graph isomorphism for fixed (n, p, q),
/// p even. The dichotomy q^2 = p +- 1 is tested mod 2p. Classes are sorted
/// and ordered by least element.
std::vector<std::vector<int64_t>> corollary_m_classes(int64_t n, int64_t p, int64_t q);

/// True iff q^2 is congruent to p+1 or p-1 mod 2p.
bool q_square_is_p_pm_one(int64_t p, int64_t q);

/// The criterion "q' = +-q^{+-1} mod p and m' = +-m^{+-1}" from earlier
/// literature, stated for gcd(n,m) = 1. Empty when it does not apply
/// (different (n,p), gcd(n,m) != 1, or odd p).
std::optional<bool> prior_literature_claim(const LMParams& a, const LMParams& b);

}  // namespace gemforge

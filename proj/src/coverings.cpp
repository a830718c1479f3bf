#include "gemforge/coverings.hpp"

#include <algorithm>
#include <stdexcept>

#include "gemforge/modular.hpp"

namespace gemforge {

TwoBridge::TwoBridge(int64_t alpha, int64_t beta) : alpha_(alpha), beta_(0) {
  if (alpha < 1) throw std::invalid_argument("two-bridge type needs alpha >= 1");
  beta_ = mod(beta, alpha);
  if (gcd(alpha_, beta_) != 1)
    throw std::invalid_argument("two-bridge type needs gcd(alpha,beta) = 1");
}

bool TwoBridge::is_hyperbolic() const {
  return beta_ != mod(1, alpha_) && beta_ != mod(-1, alpha_);
}

bool TwoBridge::beta_square_is_alpha_pm_one() const {
  const int64_t sq = mod(beta_ * beta_, 2 * alpha_);
  return sq == mod(alpha_ + 1, 2 * alpha_) || sq == mod(alpha_ - 1, 2 * alpha_);
}

std::string TwoBridge::to_string() const {
  return "b(" + std::to_string(alpha_) + "," + std::to_string(beta_) + ")";
}

std::string to_string(CoveringType t) {
  switch (t) {
    case CoveringType::StrictlyCyclic: return "strictly-cyclic";
    case CoveringType::AlmostStrictlyCyclic: return "almost-strictly-cyclic";
    case CoveringType::MeridianCyclic: return "meridian-cyclic";
    case CoveringType::SinglyCyclic: return "singly-cyclic";
    case CoveringType::MonodromyCyclic: return "monodromy-cyclic";
  }
  return "?";
}

CoveringType covering_type(int64_t b, std::span<const int64_t> windings) {
  if (b < 1) throw std::invalid_argument("covering_type: fold count must be positive");
  if (windings.empty()) throw std::invalid_argument("covering_type: no windings");
  std::vector<int64_t> k;
  int64_t g = b;
  for (int64_t x : windings) {
    const int64_t r = mod(x, b);
    if (r == 0) throw std::invalid_argument("covering_type: winding is 0 mod b");
    k.push_back(r);
    g = gcd(g, r);
  }
  if (g != 1) throw std::invalid_argument("covering_type: windings do not generate Z_b");

  const auto all = [&](auto&& pred) { return std::all_of(k.begin(), k.end(), pred); };
  if (all([&](int64_t x) { return x == k[0]; })) return CoveringType::StrictlyCyclic;
  if (all([&](int64_t x) { return x == k[0] || x == mod(-k[0], b); }))
    return CoveringType::AlmostStrictlyCyclic;
  if (all([&](int64_t x) { return gcd(b, x) == 1; })) return CoveringType::MeridianCyclic;
  if (std::any_of(k.begin(), k.end(), [&](int64_t x) { return gcd(b, x) == 1; }))
    return CoveringType::SinglyCyclic;
  return CoveringType::MonodromyCyclic;
}

CoveringType CoveringDesc::type() const {
  if (!k) {
    const int64_t one = 1;
    return covering_type(b, std::span<const int64_t>(&one, 1));
  }
  const std::array<int64_t, 2> w = {1, *k};
  return covering_type(b, w);
}

std::string CoveringDesc::to_string() const {
  if (!k) return "C_" + std::to_string(b) + "(" + link.to_string() + ")";
  return "M_{" + std::to_string(b) + "," + std::to_string(*k) + "}(" +
         std::to_string(link.alpha()) + "," + std::to_string(link.beta()) + ")";
}

SpaceNormalization normalize_space(const LMParams& params) {
  return {coprime_reduction(params), gcd(params.p(), params.q())};
}

LMCovering lm_to_covering(const LMParams& params) {
  if (!is_gem_parametric(params))
    throw std::domain_error("lm_to_covering: " + params.to_string() + " is not a manifold");
  const SpaceNormalization norm = normalize_space(params);
  LMParams rep = norm.params;
  const int64_t n = rep.n(), p = rep.p();
  if (n < 2) throw std::domain_error("lm_to_covering: fold count n must be at least 2");
  if (rep.m() == 0)
    throw std::domain_error("lm_to_covering: m = 0 has no branching description (S^3)");

  if (p % 2 == 0) {
    if (rep.q() > p) rep = rep.lemma1_partner();
    return {{n, TwoBridge(p, rep.q()), mod(-rep.m(), n)}, norm, rep};
  }
  // Odd p: a gem with m != 0 has m = (-1)^q.
  return {{n, TwoBridge(p, rep.q()), std::nullopt}, norm, rep};
}

bool theorem2_equivalent(int64_t b, const TwoBridge& link, int64_t k, int64_t k_prime) {
  if (b < 2) throw std::domain_error("theorem2: fold count must be at least 2");
  if (link.is_knot()) throw std::domain_error("theorem2: needs a two-component link");
  if (!link.is_hyperbolic()) throw std::domain_error("theorem2: link is toroidal");
  if (gcd(b, k) != 1 || gcd(b, k_prime) != 1)
    throw std::domain_error("theorem2: covering is not meridian-cyclic");

  const int64_t kk = mod(k, b), target = mod(k_prime, b);
  const int64_t inv = *inverse_mod(kk, b);
  std::vector<int64_t> allowed = {kk, inv};
  if (link.beta_square_is_alpha_pm_one()) {
    allowed.push_back(mod(-kk, b));
    allowed.push_back(mod(-inv, b));
  }
  return std::find(allowed.begin(), allowed.end(), target) != allowed.end();
}

namespace {

void require_theorem3_domain(int64_t n, int64_t p, int64_t q) {
  if (n < 3 || p < 3) throw std::domain_error("needs n, p >= 3");
  if (p % 2 != 0) throw std::domain_error("needs p even");
  if (gcd(p, q) != 1) throw std::domain_error("needs gcd(p,q) = 1");
  const int64_t r = mod(q, p);
  if (r == 1 || r == p - 1) throw std::domain_error("needs q != +-1 mod p");
}

bool q_special(int64_t p, int64_t q) { return TwoBridge(p, q).beta_square_is_alpha_pm_one(); }

}  // namespace

bool theorem3_equivalent(int64_t n, int64_t p, int64_t q, int64_t m, int64_t m_prime) {
  require_theorem3_domain(n, p, q);
  if (gcd(n, m) != 1 || gcd(n, m_prime) != 1)
    throw std::domain_error("theorem3: needs gcd(n,m) = gcd(n,m') = 1");
  const int64_t mm = mod(m, n), target = mod(m_prime, n);
  const int64_t inv = *inverse_mod(mm, n);
  if (target == mm || target == inv) return true;
  return q_special(p, q) && (target == mod(-mm, n) || target == mod(-inv, n));
}

bool conjectured_homeomorphic(int64_t n, int64_t p, int64_t q, int64_t m, int64_t m_prime) {
  require_theorem3_domain(n, p, q);
  if (gcd(n, m) == 1 || gcd(n, m_prime) == 1)
    throw std::domain_error("conjecture: needs gcd(n,m) != 1 and gcd(n,m') != 1");
  const int64_t mm = mod(m, n), target = mod(m_prime, n);
  return target == mm || (q_special(p, q) && target == mod(-mm, n));
}

std::string to_string(GeometryLabel g) {
  switch (g) {
    case GeometryLabel::Hyperbolic: return "hyperbolic";
    case GeometryLabel::Euclidean: return "euclidean";
    case GeometryLabel::Spherical: return "spherical";
    case GeometryLabel::Nil: return "nil";
    case GeometryLabel::SL2R: return "sl2r";
    case GeometryLabel::Unknown: return "unknown";
  }
  return "?";
}

GeometryResult geometry(const LMParams& params) {
  if (!is_gem_parametric(params))
    throw std::domain_error("geometry: " + params.to_string() + " is not a manifold");
  const SpaceNormalization norm = normalize_space(params);
  const LMParams& x = norm.params;
  const int64_t n = x.n(), p = x.p(), q = x.q(), m = x.m();
  auto result = [&](GeometryLabel label, std::string reason) {
    return GeometryResult{label, std::move(reason), norm};
  };

  if (m == 0) return result(GeometryLabel::Spherical, "m = 0: the 3-sphere");
  if (p == 1) return result(GeometryLabel::Spherical, "p = 1: the 3-sphere");
  if (n == 2 && m == 1) return result(GeometryLabel::Spherical, "S(2,p,q,1): lens space L(p,q)");
  if (p == 2 && gcd(n, m) == 1)
    return result(GeometryLabel::Spherical, "S(n,2,1,m): lens space L(n,m)");

  const int64_t q_mod_p = mod(q, p);
  const bool q_pm_one = q_mod_p == 1 || q_mod_p == p - 1;
  if (q_pm_one) {
    const LMParams partner = x.lemma1_partner();
    if (m == x.sign_of_q_mod_n() || partner.m() == partner.sign_of_q_mod_n()) {
      // 1/n + 1/p compared with 1/2.
      const int64_t lhs = 2 * (n + p), rhs = n * p;
      if (lhs > rhs) return result(GeometryLabel::Spherical, "q = +-1 mod p, 1/n+1/p > 1/2");
      if (lhs == rhs) return result(GeometryLabel::Nil, "q = +-1 mod p, 1/n+1/p = 1/2");
      return result(GeometryLabel::SL2R, "q = +-1 mod p, 1/n+1/p < 1/2");
    }
    return result(GeometryLabel::Unknown, "q = +-1 mod p but m != +-(-1)^q");
  }

  if (gcd(n, m) == 1) {
    if (n == 3 && p == 5) return result(GeometryLabel::Euclidean, "S(3,5,2,1)");
    if (n >= 3 && (p != 5 || n >= 4))
      return result(GeometryLabel::Hyperbolic, "gcd(n,m) = 1, q != +-1 mod p");
  }
  return result(GeometryLabel::Unknown, "outside the known cases");
}

}  // namespace gemforge

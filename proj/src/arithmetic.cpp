#include "gemforge/arithmetic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gemforge/modular.hpp"

namespace gemforge {

std::string to_string(IsoRule rule) {
  switch (rule) {
    case IsoRule::APrime: return "A-prime";
    case IsoRule::ADoublePrime: return "A-double-prime";
    case IsoRule::B: return "B";
    case IsoRule::EqualByLemma1: return "equal-by-lemma1";
    case IsoRule::Rigidity: return "rigidity";
    case IsoRule::OutOfScope: return "out-of-scope";
  }
  return "?";
}

namespace {

bool has_full_pair(const ResidueCensus& c, int64_t n, int64_t p) {
  for (const auto& ls : c.lengths)
    if (static_cast<int64_t>(ls.size()) == n &&
        std::all_of(ls.begin(), ls.end(), [&](int64_t l) { return l == 2 * p; }))
      return true;
  return false;
}

void require_at_least_three(int64_t n, int64_t p) {
  if (n < 3 || p < 3)
    throw std::domain_error("classification needs n, p >= 3 (got n=" + std::to_string(n) +
                            ", p=" + std::to_string(p) + ")");
}

void require_classifiable(const LMParams& x) {
  require_at_least_three(x.n(), x.p());
  if (!x.coprime_pq()) throw std::domain_error("classification needs gcd(p,q) = 1: " + x.to_string());
}

/// One signed, possibly inverted image s * x^e.
struct Term {
  int sign;
  int exponent;
  int64_t value;
};

std::string term_text(const char* symbol, const Term& t) {
  std::string s = t.sign < 0 ? "-" : "";
  s += symbol;
  if (t.exponent < 0) s += "^-1";
  return s;
}

/// The four values +-x^{+-1} in Z_modulus; x must be a unit.
std::vector<Term> pm_pm_terms(int64_t x, int64_t modulus, bool allow_negation,
                              bool allow_inverse) {
  std::vector<Term> out;
  const int64_t inv = *inverse_mod(x, modulus);
  for (int sign : {1, -1}) {
    if (sign < 0 && !allow_negation) continue;
    for (int exponent : {1, -1}) {
      if (exponent < 0 && !allow_inverse) continue;
      out.push_back({sign, exponent, mod(sign * (exponent > 0 ? x : inv), modulus)});
    }
  }
  return out;
}

}  // namespace

bool rigidity(const ResidueCensus& census_a, const ResidueCensus& census_b, int64_t n, int64_t p,
              int64_t n_b, int64_t p_b) {
  require_at_least_three(n, p);
  require_at_least_three(n_b, p_b);
  if (n != n_b || p != p_b) return false;
  return has_full_pair(census_a, n, p) && has_full_pair(census_b, n, p);
}

bool q_square_is_p_pm_one(int64_t p, int64_t q) {
  const int64_t sq = mod(q * q, 2 * p);
  return sq == mod(p + 1, 2 * p) || sq == mod(p - 1, 2 * p);
}

IsoVerdict theorem1(const LMParams& a, const LMParams& b) {
  require_classifiable(a);
  require_classifiable(b);
  if (a.n() != b.n() || a.p() != b.p())
    return {false, IsoRule::Rigidity, "n'!=n or p'!=p"};

  const int64_t n = a.n(), p = a.p(), two_p = 2 * p;
  if (p % 2 == 1 && (a.m() != a.sign_of_q_mod_n() || b.m() != b.sign_of_q_mod_n()))
    return {std::nullopt, IsoRule::OutOfScope, "p odd with m != (-1)^q"};

  if (b != a && b == a.lemma1_partner())
    return {true, IsoRule::EqualByLemma1, "q'=q+p, m'=-m"};

  if (p % 2 == 1) {
    for (const Term& t : pm_pm_terms(mod(a.q(), p), p, true, true))
      if (mod(b.q(), p) == t.value)
        return {true, IsoRule::B, "q'=" + term_text("q", t) + " mod p"};
    return {false, IsoRule::B, "q' not congruent to +-q^{+-1} mod p"};
  }

  const bool unit_m = gcd(n, a.m()) == 1;
  const IsoRule rule = unit_m ? IsoRule::ADoublePrime : IsoRule::APrime;
  const auto q_terms = pm_pm_terms(a.q(), two_p, true, true);
  const auto m_terms = unit_m ? pm_pm_terms(a.m(), n, false, true)
                              : std::vector<Term>{{1, 1, a.m()}};
  for (bool shifted : {false, true}) {
    for (const Term& qt : q_terms) {
      if (b.q() != mod(qt.value + (shifted ? p : 0), two_p)) continue;
      for (const Term& mt : m_terms) {
        const int64_t want = shifted ? mod(-mt.value, n) : mt.value;
        if (b.m() != want) continue;
        std::string cond = "q'=" + term_text("q", qt) + (shifted ? "+p" : "") + ", m'=" +
                           (shifted ? "-" : "") + term_text("m", mt);
        return {true, rule, cond};
      }
    }
  }
  return {false, rule, unit_m ? "no (q',m') among +-q^{+-1}(+p), +-m^{+-1}"
                              : "no (q',m') among +-q^{+-1}(+p), +-m"};
}

std::vector<std::vector<int64_t>> corollary_m_classes(int64_t n, int64_t p, int64_t q) {
  require_at_least_three(n, p);
  if (p % 2 != 0) throw std::domain_error("corollary_m_classes needs p even");
  if (gcd(p, q) != 1) throw std::domain_error("corollary_m_classes needs gcd(p,q) = 1");

  const bool negate = q_square_is_p_pm_one(p, mod(q, 2 * p));
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int64_t>> classes;
  for (int64_t m = 1; m < n; ++m) {
    if (seen[m]) continue;
    std::set<int64_t> cls{m};
    if (gcd(n, m) == 1) cls.insert(*inverse_mod(m, n));
    if (negate) {
      std::set<int64_t> neg;
      for (int64_t x : cls) neg.insert(mod(-x, n));
      cls.insert(neg.begin(), neg.end());
    }
    for (int64_t x : cls) seen[x] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::optional<bool> prior_literature_claim(const LMParams& a, const LMParams& b) {
  if (a.n() != b.n() || a.p() != b.p() || a.p() % 2 != 0) return std::nullopt;
  const int64_t n = a.n(), p = a.p();
  if (gcd(n, a.m()) != 1 || !a.coprime_pq() || !b.coprime_pq()) return std::nullopt;
  bool q_ok = false, m_ok = false;
  for (const Term& t : pm_pm_terms(mod(a.q(), p), p, true, true))
    q_ok = q_ok || mod(b.q(), p) == t.value;
  for (const Term& t : pm_pm_terms(a.m(), n, true, true)) m_ok = m_ok || b.m() == t.value;
  return q_ok && m_ok;
}

}  // namespace gemforge

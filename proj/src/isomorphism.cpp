#include "gemforge/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "gemforge/modular.hpp"

namespace gemforge {

const std::vector<ColourPerm>& all_colour_perms() {
  static const std::vector<ColourPerm> perms = [] {
    std::vector<ColourPerm> out;
    ColourPerm p = kIdentityPerm;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

std::string cycle_notation(const ColourPerm& phi) {
  std::string out;
  std::array<bool, kColours> seen{};
  for (Colour start = 0; start < kColours; ++start) {
    if (seen[start] || phi[start] == start) continue;
    out += '(';
    Colour c = start;
    bool first = true;
    while (!seen[c]) {
      seen[c] = true;
      if (!first) out += ' ';
      out += std::to_string(c);
      first = false;
      c = phi[c];
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

IsoWitness identity_witness(Vertex size) {
  IsoWitness w;
  w.f.resize(size);
  for (Vertex v = 0; v < size; ++v) w.f[v] = v;
  return w;
}

IsoWitness compose(const IsoWitness& first, const IsoWitness& second) {
  if (first.f.size() != second.f.size())
    throw std::invalid_argument("compose: witness sizes differ");
  IsoWitness out;
  out.f.resize(first.f.size());
  for (size_t v = 0; v < first.f.size(); ++v) out.f[v] = second.f[first.f[v]];
  for (Colour k = 0; k < kColours; ++k) out.phi[k] = second.phi[first.phi[k]];
  return out;
}

bool verify(const ColouredGraph& g, const ColouredGraph& h, const IsoWitness& w) {
  if (g.size() != h.size()) throw std::invalid_argument("verify: graph sizes differ");
  if (w.f.size() != static_cast<size_t>(g.size()))
    throw std::invalid_argument("verify: witness has the wrong length");

  ColourPerm sorted = w.phi;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != kIdentityPerm) return false;

  std::vector<bool> hit(g.size(), false);
  for (Vertex v : w.f) {
    if (v < 0 || v >= g.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (Vertex v = 0; v < g.size(); ++v)
    for (Colour k = 0; k < kColours; ++k)
      if (w.f[g.neighbour(k, v)] != h.neighbour(w.phi[k], w.f[v])) return false;
  return true;
}

namespace {

constexpr Vertex kUnset = -1;

/// Scratch space reused across the 24*|V| attempts of an exhaustive search.
struct Propagator {
  const ColouredGraph& g;
  const ColouredGraph& h;
  std::vector<Vertex> f, inverse, queue;

  Propagator(const ColouredGraph& a, const ColouredGraph& b)
      : g(a), h(b), f(a.size()), inverse(a.size()) {
    queue.reserve(a.size());
  }

  bool run(const ColourPerm& phi, Vertex seed, Vertex image) {
    std::fill(f.begin(), f.end(), kUnset);
    std::fill(inverse.begin(), inverse.end(), kUnset);
    queue.clear();
    f[seed] = image;
    inverse[image] = seed;
    queue.push_back(seed);
    for (size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Colour k = 0; k < kColours; ++k) {
        const Vertex w = g.neighbour(k, v);
        const Vertex target = h.neighbour(phi[k], f[v]);
        if (f[w] == kUnset) {
          if (inverse[target] != kUnset) return false;
          f[w] = target;
          inverse[target] = w;
          queue.push_back(w);
        } else if (f[w] != target) {
          return false;
        }
      }
    }
    return queue.size() == f.size();
  }
};

void require_comparable(const ColouredGraph& g, const ColouredGraph& h, const char* what) {
  if (g.size() != h.size())
    throw std::invalid_argument(std::string(what) + ": graph sizes differ");
  if (!is_connected(g) || !is_connected(h))
    throw std::invalid_argument(std::string(what) + ": graphs must be connected");
}

}  // namespace

std::optional<IsoWitness> propagate(const ColouredGraph& g, const ColouredGraph& h,
                                    const ColourPerm& phi, Vertex seed, Vertex image) {
  require_comparable(g, h, "propagate");
  if (seed < 0 || seed >= g.size() || image < 0 || image >= h.size())
    throw std::invalid_argument("propagate: seed out of range");
  Propagator prop(g, h);
  if (!prop.run(phi, seed, image)) return std::nullopt;
  return IsoWitness{std::move(prop.f), phi};
}

std::optional<IsoWitness> are_isomorphic(const ColouredGraph& g, const ColouredGraph& h) {
  if (!is_connected(g) || !is_connected(h))
    throw std::invalid_argument("are_isomorphic: graphs must be connected");
  if (g.size() != h.size()) return std::nullopt;
  Propagator prop(g, h);
  for (const ColourPerm& phi : all_colour_perms())
    for (Vertex image = 0; image < h.size(); ++image)
      if (prop.run(phi, 0, image)) return IsoWitness{prop.f, phi};
  return std::nullopt;
}

NamedMap parse_named_map(const std::string& name) {
  if (name == "f1") return NamedMap::F1;
  if (name == "f2") return NamedMap::F2;
  if (name == "f3") return NamedMap::F3;
  if (name == "r") return NamedMap::R;
  if (name == "s") return NamedMap::S;
  throw std::invalid_argument("unknown named map: " + name);
}

std::string to_string(NamedMap which) {
  switch (which) {
    case NamedMap::F1: return "f1";
    case NamedMap::F2: return "f2";
    case NamedMap::F3: return "f3";
    case NamedMap::R: return "r";
    case NamedMap::S: return "s";
  }
  return "?";
}

bool second_coordinates_distinct(const LMParams& params) {
  const auto res = residues(build(params), ColourSet{0, 3});
  if (static_cast<int64_t>(res.components.size()) != params.n()) return true;
  for (const auto& comp : res.components) {
    std::vector<int64_t> js;
    for (Vertex v : comp) js.push_back(coordinates_of(params, v).j);
    std::sort(js.begin(), js.end());
    if (std::adjacent_find(js.begin(), js.end()) != js.end()) return false;
  }
  return true;
}

namespace {

/// Vertex map given coordinate-wise.
template <class Fn>
IsoWitness coordinate_map(const LMParams& params, const ColourPerm& phi, Fn&& fn) {
  const Vertex size = static_cast<Vertex>(2 * params.p() * params.n());
  IsoWitness w;
  w.phi = phi;
  w.f.resize(size);
  for (Vertex v = 0; v < size; ++v) w.f[v] = index_of(params, fn(coordinates_of(params, v)));
  return w;
}

/// Iterates the alternating words of the two target involutions
/// `first_applied`, `second_applied` from base(i):
///   j even: (second*first)^{j/2} (base),  j odd: first * (second*first)^{(j-1)/2} (base).
IsoWitness alternating_map(const LMParams& source, const LMParams& target, const ColourPerm& phi,
                           Colour first_applied, Colour second_applied, int64_t base_j) {
  const int64_t n = source.n(), two_p = 2 * source.p();
  IsoWitness w;
  w.phi = phi;
  w.f.resize(n * two_p);
  for (int64_t i = 0; i < n; ++i) {
    LMVertex cur{mod(-i, n), mod(base_j, two_p)};
    for (int64_t j = 0; j < two_p; ++j) {
      w.f[index_of(source, {i, j})] = index_of(target, cur);
      cur = epsilon(j % 2 == 0 ? first_applied : second_applied, cur, target);
    }
  }
  return w;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("named map f2: " + what);
}

/// Structural assertions on a freshly iterated f2.
void check_f2(const LMParams& source, const LMParams& target, const IsoWitness& w,
              bool case_a) {
  check(second_coordinates_distinct(source) && second_coordinates_distinct(target),
        "second-coordinate property fails");

  const int64_t n = source.n(), p = source.p(), two_p = 2 * p;
  const auto target_res = residues(build(target), ColourSet{0, 3});
  std::vector<int32_t> used;
  for (int64_t i = 0; i < n; ++i) {
    const int32_t comp = target_res.component_of[w.f[index_of(source, {i, 0})]];
    for (int64_t j = 0; j < two_p; ++j)
      check(target_res.component_of[w.f[index_of(source, {i, j})]] == comp,
            "a {1,2}-residue is not sent into one {0,3}-residue");
    check(target_res.components[comp].size() == static_cast<size_t>(two_p),
          "image residue has the wrong size");
    used.push_back(comp);
  }
  std::sort(used.begin(), used.end());
  check(std::adjacent_find(used.begin(), used.end()) == used.end(),
        "two {1,2}-residues share an image residue");

  // Closed form (-i + h_j, s_j): second coordinate fixed by j, first offset by -i.
  const int64_t qinv = target.q();
  for (int64_t j = 0; j < two_p; ++j) {
    const bool even = j % 2 == 0;
    const int64_t expected_j = (even == case_a) ? mod(j * qinv, two_p)
                                                : mod(1 - (j - 1) * qinv, two_p);
    const LMVertex at0 = coordinates_of(target, w.f[index_of(source, {0, j})]);
    for (int64_t i = 0; i < n; ++i) {
      const LMVertex img = coordinates_of(target, w.f[index_of(source, {i, j})]);
      check(img.j == expected_j, "second coordinate differs from the closed form");
      check(mod(img.i + i, n) == at0.i, "first-coordinate offset depends on i");
    }
  }
}

NamedIso make_f2(const LMParams& params) {
  const int64_t n = params.n(), p = params.p(), q = params.q(), two_p = 2 * p;
  if (p % 2 == 0) {
    const auto qinv = inverse_mod(q, two_p);
    if (!qinv) throw std::domain_error("f2 (p even) needs q invertible mod 2p");
    const LMParams target(n, p, *qinv, params.m());
    // j even: (e0 e3)^{j/2}(-i,0); j odd: e3 (e0 e3)^{(j-1)/2}(-i,0).
    auto w = alternating_map(params, target, {1, 0, 3, 2}, 3, 0, 0);
    check_f2(params, target, w, true);
    return {NamedMap::F2, params, target, std::move(w), "a"};
  }
  if (q % 2 == 1) {
    if (params.m() != mod(-1, n)) throw std::domain_error("f2 (p, q odd) needs m = -1");
    const auto qinv = inverse_mod(q, two_p);
    if (!qinv) throw std::domain_error("f2 (p, q odd) needs q invertible mod 2p");
    const LMParams target(n, p, *qinv, -1);
    // j even: (e3 e0)^{j/2}(-i,q^-1+1); j odd: e0 (e3 e0)^{(j-1)/2}(-i,q^-1+1).
    auto w = alternating_map(params, target, {2, 3, 0, 1}, 0, 3, *qinv + 1);
    check_f2(params, target, w, false);
    return {NamedMap::F2, params, target, std::move(w), "b'"};
  }
  if (params.m() != mod(1, n)) throw std::domain_error("f2 (p odd, q even) needs m = 1");
  // G(n,p,q,1) and G(n,p,q+p,-1) are the same labelled graph.
  NamedIso odd = make_f2(params.lemma1_partner());
  const LMParams target = odd.target.lemma1_partner();
  return {NamedMap::F2, params, target, std::move(odd.witness), "b''"};
}

}  // namespace

NamedIso named_map(NamedMap which, const LMParams& params) {
  const int64_t n = params.n(), p = params.p(), q = params.q(), m = params.m();
  switch (which) {
    case NamedMap::F1: {
      auto w = coordinate_map(params, kIdentityPerm,
                              [](LMVertex v) { return LMVertex{-v.i, 1 - v.j}; });
      return {which, params, LMParams(n, p, -q, m), std::move(w), ""};
    }
    case NamedMap::F2:
      return make_f2(params);
    case NamedMap::F3: {
      const auto minv = inverse_mod(m, n);
      if (gcd(n, m) != 1 || !minv) throw std::domain_error("f3 needs gcd(n,m) = 1");
      const ColourPerm phi = q % 2 == 1 ? ColourPerm{3, 2, 1, 0} : ColourPerm{3, 1, 2, 0};
      auto w = coordinate_map(params, phi, [&](LMVertex v) {
        return LMVertex{-*minv * v.i, 1 + q - v.j};
      });
      return {which, params, LMParams(n, p, q, *minv), std::move(w), ""};
    }
    case NamedMap::R: {
      auto w = coordinate_map(params, kIdentityPerm,
                              [](LMVertex v) { return LMVertex{v.i + 1, v.j}; });
      return {which, params, params, std::move(w), ""};
    }
    case NamedMap::S: {
      const ColourPerm phi = p % 2 == 0 ? kIdentityPerm : ColourPerm{0, 2, 1, 3};
      auto w = coordinate_map(params, phi, [&](LMVertex v) { return LMVertex{-v.i, p + v.j}; });
      return {which, params, params, std::move(w), ""};
    }
  }
  throw std::invalid_argument("unknown named map");
}

}  // namespace gemforge

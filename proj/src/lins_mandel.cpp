#include "gemforge/lins_mandel.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gemforge/modular.hpp"

namespace gemforge {

LMParams::LMParams(int64_t n, int64_t p, int64_t q, int64_t m) : n_(n), p_(p), q_(0), m_(0) {
  if (n < 1 || p < 1)
    throw std::invalid_argument("Lins-Mandel parameters need n >= 1 and p >= 1");
  q_ = mod(q, 2 * p);
  m_ = mod(m, n);
}

bool LMParams::coprime_pq() const { return gcd(p_, q_) == 1; }

int64_t LMParams::sign_of_q_mod_n() const { return mod(sign_power(q_), n_); }

std::string LMParams::to_string() const {
  return "(" + std::to_string(n_) + "," + std::to_string(p_) + "," + std::to_string(q_) + "," +
         std::to_string(m_) + ")";
}

Vertex index_of(const LMParams& params, LMVertex v) {
  const int64_t two_p = 2 * params.p();
  return static_cast<Vertex>(mod(v.i, params.n()) * two_p + mod(v.j, two_p));
}

LMVertex coordinates_of(const LMParams& params, Vertex index) {
  const int64_t two_p = 2 * params.p();
  return {index / two_p, index % two_p};
}

int mu(int64_t j, int64_t p) {
  const int64_t r = mod(j, 2 * p);
  return (r >= 1 && r <= p) ? 1 : -1;
}

LMVertex epsilon(Colour k, LMVertex v, const LMParams& params) {
  const int64_t n = params.n(), p = params.p(), q = params.q(), m = params.m();
  const int64_t two_p = 2 * p;
  const int64_t i = v.i, j = v.j;
  LMVertex out{};
  switch (k) {
    case 0:
      out = {i + m * mu(j - q, p), 1 - j + 2 * q};
      break;
    case 1:
      out = {i, j - sign_power(j)};
      break;
    case 2:
      out = {i, j + sign_power(j)};
      break;
    case 3:
      out = {i + mu(j, p), 1 - j};
      break;
    default:
      throw std::invalid_argument("colour out of range: " + std::to_string(k));
  }
  return {mod(out.i, n), mod(out.j, two_p)};
}

ColouredGraph build(const LMParams& params) {
  const int64_t size = 2 * params.p() * params.n();
  std::array<std::vector<Vertex>, kColours> tables;
  for (Colour k = 0; k < kColours; ++k) {
    tables[k].resize(size);
    for (Vertex v = 0; v < size; ++v)
      tables[k][v] = index_of(params, epsilon(k, coordinates_of(params, v), params));
  }
  return ColouredGraph(std::move(tables));
}

bool graphs_equal(const LMParams& a, const LMParams& b) {
  if (a.n() != b.n() || a.p() != b.p()) return false;
  return build(a) == build(b);
}

namespace {

void add_cycles(std::vector<int64_t>& out, int64_t count, int64_t length) {
  out.insert(out.end(), count, length);
}

}  // namespace

ResidueCensus predicted_census(const LMParams& params) {
  if (!params.coprime_pq())
    throw std::domain_error("predicted_census needs gcd(p,q) = 1, got " + params.to_string());
  const int64_t n = params.n(), p = params.p(), m = params.m();
  const int64_t g = gcd(n, m);
  ResidueCensus c;
  auto& c01 = c.lengths[pair_index({0, 1})];
  auto& c02 = c.lengths[pair_index({0, 2})];
  auto& c03 = c.lengths[pair_index({0, 3})];
  auto& c12 = c.lengths[pair_index({1, 2})];
  auto& c13 = c.lengths[pair_index({1, 3})];
  auto& c23 = c.lengths[pair_index({2, 3})];

  add_cycles(c12, n, 2 * p);
  if (p % 2 == 0) {
    add_cycles(c03, n, 2 * p);
    add_cycles(c23, 2, 2 * n);
    add_cycles(c23, n * (p - 2) / 2, 4);
    add_cycles(c01, 2 * g, 2 * n / g);
    add_cycles(c01, n * (p - 2) / 2, 4);
    add_cycles(c13, n * p / 2, 4);
    add_cycles(c02, n * p / 2, 4);
  } else {
    const int64_t g03 = gcd(n, m - sign_power(params.q()));
    add_cycles(c03, g03, 2 * p * n / g03);
    add_cycles(c23, 1, 2 * n);
    add_cycles(c23, n * (p - 1) / 2, 4);
    add_cycles(c01, g, 2 * n / g);
    add_cycles(c01, n * (p - 1) / 2, 4);
    add_cycles(c13, 1, 2 * n);
    add_cycles(c13, n * (p - 1) / 2, 4);
    add_cycles(c02, g, 2 * n / g);
    add_cycles(c02, n * (p - 1) / 2, 4);
  }
  for (auto& ls : c.lengths) std::sort(ls.begin(), ls.end(), std::greater<>());
  return c;
}

LMParams coprime_reduction(const LMParams& params) {
  const int64_t g = gcd(params.p(), params.q());
  return {params.n(), params.p() / g, params.q() / g, params.m()};
}

bool is_gem_parametric(const LMParams& params) {
  const LMParams r = coprime_reduction(params);
  if (r.p() % 2 == 0) return true;
  return r.m() == 0 || r.m() == r.sign_of_q_mod_n();
}

}  // namespace gemforge

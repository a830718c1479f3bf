#include "gemforge/survey.hpp"

#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "gemforge/coverings.hpp"
#include "gemforge/modular.hpp"

namespace gemforge {

std::vector<LMParams> classifiable_tuples(int64_t n, int64_t p) {
  std::vector<LMParams> out;
  for (int64_t q = 0; q < 2 * p; ++q)
    for (int64_t m = 0; m < n; ++m) {
      LMParams x(n, p, q, m);
      if (!x.coprime_pq()) continue;
      if (p % 2 == 1 && x.m() != x.sign_of_q_mod_n()) continue;
      out.push_back(x);
    }
  return out;
}

namespace {

struct CellResult {
  std::vector<TupleRecord> tuples;
  std::vector<PairRecord> pairs;
  std::vector<Discrepancy> discrepancies;
  Theorem3Check theorem3;
  ConjectureEvidence conjecture;
};

void check_homeomorphism_criteria(int64_t n, int64_t p, const std::map<LMParams, AbelianGroup>& h1s,
                                  CellResult& cell) {
  if (n < 3 || p < 3 || p % 2 != 0) return;
  for (int64_t q = 0; q < 2 * p; ++q) {
    if (gcd(p, q) != 1 || mod(q, p) == 1 || mod(q, p) == p - 1) continue;
    for (int64_t m = 0; m < n; ++m)
      for (int64_t m2 = m + 1; m2 < n; ++m2) {
        const LMParams a(n, p, q, m), b(n, p, q, m2);
        const bool same_h1 = h1s.at(a) == h1s.at(b);
        const bool unit_a = gcd(n, m) == 1, unit_b = gcd(n, m2) == 1;
        const std::string label = a.to_string() + " vs " + b.to_string();
        if (unit_a && unit_b) {
          auto& t3 = cell.theorem3;
          ++t3.pairs_checked;
          const bool homeo = theorem3_equivalent(n, p, q, m, m2);
          t3.homeomorphic_pairs += homeo;
          const bool iso = theorem1(a, b).isomorphic.value_or(false);
          if (iso && !homeo) {
            ++t3.violations;
            cell.discrepancies.push_back({"theorem3", label + ": isomorphic graphs, criterion says not homeomorphic"});
          }
          if (homeo && !same_h1) {
            ++t3.violations;
            cell.discrepancies.push_back({"theorem3", label + ": homeomorphic by criterion, h1 differs"});
          }
        } else if (!unit_a && !unit_b) {
          auto& ev = cell.conjecture;
          ++ev.pairs_checked;
          const bool conj = conjectured_homeomorphic(n, p, q, m, m2);
          if (conj) {
            ++ev.conjectured_homeomorphic;
            if (!same_h1) ev.h1_contradictions.push_back(label);
          } else if (same_h1) {
            ++ev.undecided_by_h1;
          } else {
            ++ev.separated_by_h1;
          }
        }
      }
  }
}

CellResult survey_cell(int64_t n, int64_t p) {
  CellResult cell;
  std::map<LMParams, AbelianGroup> h1s;
  for (int64_t q = 0; q < 2 * p; ++q)
    for (int64_t m = 0; m < n; ++m) {
      const LMParams x(n, p, q, m);
      const ColouredGraph g = build(x);
      TupleRecord rec{x, is_gem_parametric(x), is_gem(g), std::nullopt, std::nullopt};
      if (rec.gem_parametric != rec.gem_direct)
        cell.discrepancies.push_back({"gem", x.to_string() + ": parametric and direct gem tests differ"});
      if (x.coprime_pq()) {
        rec.census_match = predicted_census(x) == census(g);
        if (!*rec.census_match)
          cell.discrepancies.push_back({"census", x.to_string() + ": predicted census differs"});
      }
      if (rec.gem_direct) {
        rec.h1 = h1(g);
        h1s.emplace(x, *rec.h1);
      }
      cell.tuples.push_back(std::move(rec));
    }

  if (n >= 3 && p >= 3) {
    const auto xs = classifiable_tuples(n, p);
    std::vector<ColouredGraph> graphs;
    for (const auto& x : xs) graphs.push_back(build(x));
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = i + 1; j < xs.size(); ++j) {
        const auto witness = are_isomorphic(graphs[i], graphs[j]);
        PairRecord rec{xs[i], xs[j], std::nullopt, theorem1(xs[i], xs[j]), false, std::nullopt, false};
        if (witness) rec.witness_phi = witness->phi;
        rec.agree = rec.theorem1.isomorphic.has_value() &&
                    *rec.theorem1.isomorphic == witness.has_value();
        rec.prior_claim = prior_literature_claim(xs[i], xs[j]);
        rec.prior_literature_mismatch = rec.prior_claim && *rec.prior_claim != witness.has_value();
        const std::string label = xs[i].to_string() + " vs " + xs[j].to_string();
        if (!rec.agree)
          cell.discrepancies.push_back({"theorem1", label + ": brute force " +
                                                        (witness ? "found" : "found no") +
                                                        " isomorphism, rule " + to_string(rec.theorem1.rule)});
        if (witness && h1s.count(xs[i]) && h1s.at(xs[i]) != h1s.at(xs[j]))
          cell.discrepancies.push_back({"h1-invariance", label + ": isomorphic graphs with different h1"});
        cell.pairs.push_back(std::move(rec));
      }
  }
  check_homeomorphism_criteria(n, p, h1s, cell);
  return cell;
}

}  // namespace

SurveyReport run_survey(SurveyRange range, unsigned threads) {
  SurveyReport report;
  report.range = range;
  std::vector<std::pair<int64_t, int64_t>> cells;
  for (int64_t n = 1; n <= range.n_max; ++n)
    for (int64_t p = 1; p <= range.p_max; ++p) cells.emplace_back(n, p);

  std::vector<CellResult> results(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < cells.size(); i = next++)
      results[i] = survey_cell(cells[i].first, cells[i].second);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads && t < cells.size(); ++t) pool.emplace_back(worker);
    worker();
  }

  for (auto& cell : results) {
    std::move(cell.tuples.begin(), cell.tuples.end(), std::back_inserter(report.tuples));
    std::move(cell.pairs.begin(), cell.pairs.end(), std::back_inserter(report.pairs));
    std::move(cell.discrepancies.begin(), cell.discrepancies.end(),
              std::back_inserter(report.discrepancies));
    report.theorem3.pairs_checked += cell.theorem3.pairs_checked;
    report.theorem3.homeomorphic_pairs += cell.theorem3.homeomorphic_pairs;
    report.theorem3.violations += cell.theorem3.violations;
    auto& ev = report.conjecture;
    ev.pairs_checked += cell.conjecture.pairs_checked;
    ev.conjectured_homeomorphic += cell.conjecture.conjectured_homeomorphic;
    ev.separated_by_h1 += cell.conjecture.separated_by_h1;
    ev.undecided_by_h1 += cell.conjecture.undecided_by_h1;
    ev.h1_contradictions.insert(ev.h1_contradictions.end(), cell.conjecture.h1_contradictions.begin(),
                                cell.conjecture.h1_contradictions.end());
  }
  return report;
}

Json params_json(const LMParams& x) { return Json::array({x.n(), x.p(), x.q(), x.m()}); }

namespace {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
    return static_cast<int64_t>(v);
  return v.str();
}

Json perm_json(const ColourPerm& phi) { return Json::array({phi[0], phi[1], phi[2], phi[3]}); }

}  // namespace

Json group_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_json(t));
  return Json{{"rank", g.free_rank}, {"torsion", torsion}};
}

Json witness_json(const IsoWitness& w) {
  return Json{{"phi", perm_json(w.phi)}, {"f", w.f}};
}

Json to_json(const SurveyReport& report) {
  Json out;
  out["range"] = {{"n_max", report.range.n_max}, {"p_max", report.range.p_max}};

  Json tuples = Json::array();
  for (const auto& t : report.tuples) {
    tuples.push_back({{"params", params_json(t.params)},
                      {"coprime", t.params.coprime_pq()},
                      {"gem_parametric", t.gem_parametric},
                      {"gem_direct", t.gem_direct},
                      {"census_match", t.census_match ? Json(*t.census_match) : Json()},
                      {"h1", t.h1 ? group_json(*t.h1) : Json()}});
  }
  out["tuples"] = std::move(tuples);

  Json pairs = Json::array();
  for (const auto& pr : report.pairs) {
    pairs.push_back(
        {{"a", params_json(pr.a)},
         {"b", params_json(pr.b)},
         {"brute_force", pr.witness_phi.has_value()},
         {"witness_phi", pr.witness_phi ? perm_json(*pr.witness_phi) : Json()},
         {"theorem1",
          {{"isomorphic", pr.theorem1.isomorphic ? Json(*pr.theorem1.isomorphic) : Json()},
           {"rule", to_string(pr.theorem1.rule)},
           {"condition", pr.theorem1.matched_condition}}},
         {"agree", pr.agree},
         {"prior_claim", pr.prior_claim ? Json(*pr.prior_claim) : Json()},
         {"prior_literature_mismatch", pr.prior_literature_mismatch}});
  }
  out["pairs"] = std::move(pairs);

  Json disc = Json::array();
  for (const auto& d : report.discrepancies) disc.push_back({{"kind", d.kind}, {"detail", d.detail}});
  out["discrepancies"] = std::move(disc);

  out["theorem3_consistency"] = {{"pairs_checked", report.theorem3.pairs_checked},
                                 {"homeomorphic_pairs", report.theorem3.homeomorphic_pairs},
                                 {"violations", report.theorem3.violations}};
  const auto& ev = report.conjecture;
  out["conjecture_evidence"] = {{"pairs_checked", ev.pairs_checked},
                                {"conjectured_homeomorphic", ev.conjectured_homeomorphic},
                                {"separated_by_h1", ev.separated_by_h1},
                                {"undecided_by_h1", ev.undecided_by_h1},
                                {"h1_contradictions", ev.h1_contradictions}};
  return out;
}

std::string to_text(const SurveyReport& report) {
  int64_t gems = 0, census_checked = 0, agree = 0, literature = 0;
  for (const auto& t : report.tuples) {
    gems += t.gem_direct;
    census_checked += t.census_match.has_value();
  }
  for (const auto& p : report.pairs) {
    agree += p.agree;
    literature += p.prior_literature_mismatch;
  }
  std::ostringstream os;
  os << "survey n <= " << report.range.n_max << ", p <= " << report.range.p_max << "\n"
     << "  tuples:                 " << report.tuples.size() << " (" << gems << " gems, "
     << census_checked << " census checks)\n"
     << "  isomorphism pairs:      " << report.pairs.size() << " (" << agree
     << " agree with the arithmetic criterion)\n"
     << "  prior literature mismatches: " << literature << "\n"
     << "  homeomorphism criterion: " << report.theorem3.pairs_checked << " pairs, "
     << report.theorem3.violations << " violations\n"
     << "  conjecture evidence:    " << report.conjecture.pairs_checked << " pairs, "
     << report.conjecture.h1_contradictions.size() << " h1 contradictions, "
     << report.conjecture.separated_by_h1 << " separated, " << report.conjecture.undecided_by_h1
     << " undecided\n"
     << "  discrepancies:          " << report.discrepancies.size() << "\n";
  for (const auto& d : report.discrepancies) os << "    [" << d.kind << "] " << d.detail << "\n";
  return os.str();
}

}  // namespace gemforge

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gemforge/arithmetic.hpp"
#include "gemforge/homology.hpp"
#include "gemforge/isomorphism.hpp"
#include "gemforge/lins_mandel.hpp"

namespace gemforge {

using Json = nlohmann::ordered_json;

/// Tuples with 1 <= n <= n_max, 1 <= p <= p_max; pairs only in cells with
/// n, p >= 3. A bound of 0 gives an empty survey.
struct SurveyRange {
  int64_t n_max = 0;
  int64_t p_max = 0;
};

struct TupleRecord {
  LMParams params;
  bool gem_parametric;
  bool gem_direct;
  std::optional<bool> census_match;  // only for gcd(p,q) = 1
  std::optional<AbelianGroup> h1;    // only for gems
};

struct PairRecord {
  LMParams a;
  LMParams b;
  std::optional<ColourPerm> witness_phi;  // set iff brute force found a witness
  IsoVerdict theorem1;
  bool agree;
  std::optional<bool> prior_claim;
  bool prior_literature_mismatch;
};

struct Discrepancy {
  std::string kind;
  std::string detail;
};

/// Counts for the homeomorphism criterion on its own domain.
struct Theorem3Check {
  int64_t pairs_checked = 0;
  int64_t homeomorphic_pairs = 0;
  int64_t violations = 0;
};

/// Report-only evidence for the gcd(n,m) != 1 conjecture.
struct ConjectureEvidence {
  int64_t pairs_checked = 0;
  int64_t conjectured_homeomorphic = 0;
  int64_t separated_by_h1 = 0;    // predicted distinct, h1 differs
  int64_t undecided_by_h1 = 0;    // predicted distinct, h1 equal
  std::vector<std::string> h1_contradictions;  // predicted equal, h1 differs
};

struct SurveyReport {
  SurveyRange range;
  std::vector<TupleRecord> tuples;
  std::vector<PairRecord> pairs;
  std::vector<Discrepancy> discrepancies;
  Theorem3Check theorem3;
  ConjectureEvidence conjecture;
};

/// Exhaustive cross-validation. Cells (n, p) are processed on `threads`
/// workers (0 = hardware concurrency); output order is independent of the
/// thread count.
SurveyReport run_survey(SurveyRange range, unsigned threads = 0);

/// Tuples taking part in the pairwise isomorphism check of a cell: gcd(p,q) = 1
/// and, for odd p, m = (-1)^q.
std::vector<LMParams> classifiable_tuples(int64_t n, int64_t p);

Json params_json(const LMParams& x);
Json group_json(const AbelianGroup& g);
Json witness_json(const IsoWitness& w);
Json to_json(const SurveyReport& report);
std::string to_text(const SurveyReport& report);

}  // namespace gemforge

#include "gemforge/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "gemforge/arithmetic.hpp"
#include "gemforge/coverings.hpp"
#include "gemforge/homology.hpp"
#include "gemforge/isomorphism.hpp"
#include "gemforge/lins_mandel.hpp"
#include "gemforge/survey.hpp"

namespace gemforge {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A command renders both formats and picks its exit code.
struct Outcome {
  Json json;
  std::string text;
  int code = kExitOk;
};

LMParams params_from(const std::vector<int64_t>& v, size_t offset = 0) {
  return {v.at(offset), v.at(offset + 1), v.at(offset + 2), v.at(offset + 3)};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Json census_json(const ResidueCensus& c) {
  Json out;
  for (size_t i = 0; i < colour_pairs().size(); ++i) out[colour_pairs()[i].label()] = c.lengths[i];
  return out;
}

std::string census_text(const ResidueCensus& c) {
  std::ostringstream os;
  for (size_t i = 0; i < colour_pairs().size(); ++i) {
    os << "  " << colour_pairs()[i].label() << ":";
    for (int64_t len : c.lengths[i]) os << " " << len;
    os << "\n";
  }
  return os.str();
}

Json verdict_json(const IsoVerdict& v) {
  return {{"isomorphic", v.isomorphic ? Json(*v.isomorphic) : Json()},
          {"rule", to_string(v.rule)},
          {"condition", v.matched_condition}};
}

std::string verdict_text(const IsoVerdict& v) {
  std::string s = !v.isomorphic ? "no verdict" : *v.isomorphic ? "isomorphic" : "not isomorphic";
  s += " [" + to_string(v.rule);
  if (!v.matched_condition.empty()) s += ": " + v.matched_condition;
  return s + "]";
}

Outcome cmd_build(const LMParams& x) {
  const ColouredGraph g = build(x);
  Outcome o;
  Json inv = Json::array();
  for (Colour c = 0; c < kColours; ++c) {
    auto span = g.involution(c);
    inv.push_back(std::vector<Vertex>(span.begin(), span.end()));
  }
  o.json = {{"params", params_json(x)}, {"vertices", g.size()}, {"involutions", inv}};
  std::ostringstream os;
  os << "G" << x.to_string() << ": " << g.size() << " vertices\n";
  os << "  v  (i,j)   e0  e1  e2  e3\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    const LMVertex c = coordinates_of(x, v);
    os << "  " << v << "  (" << c.i << "," << c.j << ")";
    for (Colour k = 0; k < kColours; ++k) os << "  " << g.neighbour(k, v);
    os << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome cmd_census(const LMParams& x) {
  const ResidueCensus actual = census(build(x));
  Outcome o;
  o.json = {{"params", params_json(x)}, {"census", census_json(actual)}};
  o.text = "census of G" + x.to_string() + " (bicoloured cycle lengths)\n" + census_text(actual);
  if (x.coprime_pq()) {
    const ResidueCensus predicted = predicted_census(x);
    const bool match = predicted == actual;
    o.json["predicted"] = census_json(predicted);
    o.json["match"] = match;
    o.text += "predicted census " + std::string(match ? "matches" : "DIFFERS") + "\n";
    if (!match) o.code = kExitDisagreement;
  }
  return o;
}

Outcome cmd_gem_check(const LMParams& x) {
  const bool parametric = is_gem_parametric(x), direct = is_gem(build(x));
  Outcome o;
  o.json = {{"params", params_json(x)}, {"parametric", parametric}, {"direct", direct}};
  o.text = "gem: " + yes_no(parametric) + " (parametric), " + yes_no(direct) + " (direct)\n";
  if (parametric != direct) o.code = kExitDisagreement;
  return o;
}

// theorem1 has preconditions; outside them there is simply no verdict.
std::optional<IsoVerdict> try_theorem1(const LMParams& a, const LMParams& b, std::string& why) {
  try {
    return theorem1(a, b);
  } catch (const std::domain_error& e) {
    why = e.what();
    return std::nullopt;
  }
}

Outcome cmd_iso(const LMParams& a, const LMParams& b) {
  const auto witness = are_isomorphic(build(a), build(b));
  std::string why;
  const auto verdict = try_theorem1(a, b, why);
  Outcome o;
  o.json = {{"a", params_json(a)},
            {"b", params_json(b)},
            {"brute_force", {{"isomorphic", witness.has_value()},
                             {"witness", witness ? witness_json(*witness) : Json()}}},
            {"theorem1", verdict ? verdict_json(*verdict) : Json{{"error", why}}}};
  std::ostringstream os;
  os << "G" << a.to_string() << " vs G" << b.to_string() << "\n";
  os << "  brute force: " << (witness ? "isomorphic" : "not isomorphic");
  if (witness) os << ", colour permutation " << cycle_notation(witness->phi);
  os << "\n  theorem1:    " << (verdict ? verdict_text(*verdict) : "not applicable (" + why + ")")
     << "\n";
  const bool disagree = verdict && verdict->isomorphic && *verdict->isomorphic != witness.has_value();
  if (disagree) {
    os << "  DISAGREEMENT\n";
    o.code = kExitDisagreement;
  }
  o.json["agree"] = !disagree;
  o.text = os.str();
  return o;
}

Outcome cmd_classify(const LMParams& a, const LMParams& b) {
  const IsoVerdict v = theorem1(a, b);
  return {{{"a", params_json(a)}, {"b", params_json(b)}, {"theorem1", verdict_json(v)}},
          "G" + a.to_string() + " vs G" + b.to_string() + ": " + verdict_text(v) + "\n"};
}

Outcome cmd_corollary(int64_t n, int64_t p, int64_t q) {
  const auto classes = corollary_m_classes(n, p, q);
  std::ostringstream os;
  os << "m-classes for n=" << n << ", p=" << p << ", q=" << q << ":";
  for (const auto& cls : classes) {
    os << " {";
    for (size_t i = 0; i < cls.size(); ++i) os << (i ? "," : "") << cls[i];
    os << "}";
  }
  return {{{"n", n}, {"p", p}, {"q", q}, {"classes", classes}}, os.str() + "\n"};
}

Outcome cmd_homology(const LMParams& x, TreeStrategy strategy) {
  const AbelianGroup g = h1(build(x), strategy);
  return {{{"params", params_json(x)}, {"h1", group_json(g)}},
          "H1(G" + x.to_string() + ") = " + g.to_string() + "\n"};
}

Outcome cmd_covering(const LMParams& x, std::optional<int64_t> compare) {
  Outcome o;
  o.json["params"] = params_json(x);
  std::ostringstream os;
  const GeometryResult geo = geometry(x);
  if (geo.normalization.factor != 1)
    os << "S" << x.to_string() << " = S" << geo.normalization.params.to_string() << "\n";
  try {
    const LMCovering cov = lm_to_covering(x);
    o.json["covering"] = {{"description", cov.covering.to_string()},
                          {"type", to_string(cov.covering.type())},
                          {"representative", params_json(cov.representative)}};
    os << "S" << x.to_string() << " = " << cov.covering.to_string() << " ("
       << to_string(cov.covering.type()) << ")\n";
  } catch (const std::domain_error& e) {
    o.json["covering"] = {{"error", e.what()}};
    os << "no covering description: " << e.what() << "\n";
  }
  o.json["geometry"] = {{"label", to_string(geo.label)}, {"reason", geo.reason}};
  os << "geometry: " << to_string(geo.label) << " (" << geo.reason << ")\n";

  if (compare) {
    const LMParams y(x.n(), x.p(), x.q(), *compare);
    Json cmp{{"with", params_json(y)}};
    try {
      const bool t3 = theorem3_equivalent(x.n(), x.p(), x.q(), x.m(), y.m());
      const bool t2 = theorem2_equivalent(x.n(), TwoBridge(x.p(), x.q()), -x.m(), -y.m());
      cmp["theorem3"] = t3;
      cmp["theorem2"] = t2;
      os << "S" << x.to_string() << " vs S" << y.to_string() << ": "
         << (t3 ? "homeomorphic" : "not homeomorphic by the criterion") << "\n";
    } catch (const std::domain_error& e) {
      cmp["error"] = e.what();
      os << "homeomorphism criterion not applicable: " << e.what() << "\n";
    }
    o.json["compare"] = cmp;
  }
  o.text = os.str();
  return o;
}

int64_t survey_ceiling() {
  const char* env = std::getenv("GEMFORGE_CEILING");
  if (!env || !*env) return 8;
  try {
    size_t used = 0;
    const int64_t v = std::stoll(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("GEMFORGE_CEILING is not a non-negative integer: ") + env);
  }
}

Outcome cmd_survey(int64_t n_max, int64_t p_max) {
  const int64_t ceiling = survey_ceiling();
  if (n_max < 0 || p_max < 0) throw UsageError("survey bounds must be non-negative");
  if (n_max > ceiling || p_max > ceiling)
    throw UsageError("survey range exceeds the ceiling " + std::to_string(ceiling) +
                     " (set GEMFORGE_CEILING to raise it)");
  const SurveyReport report = run_survey({n_max, p_max});
  return {to_json(report), to_text(report),
          report.discrepancies.empty() ? kExitOk : kExitDisagreement};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lins-Mandel gem toolkit", "gemforge"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write the output to this file instead of stdout");

  std::function<Outcome()> action;
  std::vector<int64_t> quad, octet, triple;

  auto four_param = [&](const char* name, const char* help, auto&& fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("params", quad, "n p q m")->expected(4)->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(params_from(quad)); }; });
    return sub;
  };
  four_param("build", "print the involution table of G(n,p,q,m)", cmd_build);
  four_param("census", "bicoloured residue census, with the predicted one", cmd_census);
  four_param("gem-check", "parametric and direct gem tests", cmd_gem_check);

  auto* iso = app.add_subcommand("iso", "brute-force isomorphism against the arithmetic criterion");
  iso->add_option("params", octet, "n p q m n' p' q' m'")->expected(8)->required();
  iso->callback([&] { action = [&] { return cmd_iso(params_from(octet), params_from(octet, 4)); }; });

  auto* classify = app.add_subcommand("classify", "arithmetic isomorphism criterion only");
  bool corollary = false;
  classify->add_flag("--corollary", corollary, "list the m-classes for n p q");
  classify->add_option("params", octet, "n p q m n' p' q' m', or n p q with --corollary");
  classify->callback([&] {
    action = [&] {
      if (corollary) {
        if (octet.size() != 3) throw UsageError("classify --corollary takes n p q");
        return cmd_corollary(octet[0], octet[1], octet[2]);
      }
      if (octet.size() != 8) throw UsageError("classify takes n p q m n' p' q' m'");
      return cmd_classify(params_from(octet), params_from(octet, 4));
    };
  });

  std::string tree = "bfs";
  auto* hom = four_param("homology", "first homology of the encoded manifold", [&](const LMParams& x) {
    return cmd_homology(x, tree == "dfs" ? TreeStrategy::DepthFirst : TreeStrategy::BreadthFirst);
  });
  hom->add_option("--tree", tree, "spanning tree strategy")->check(CLI::IsMember({"bfs", "dfs"}));

  std::optional<int64_t> compare;
  auto* cov = four_param("covering", "branched covering description and geometry",
                         [&](const LMParams& x) { return cmd_covering(x, compare); });
  cov->add_option("--compare", compare, "m' to test against m with the homeomorphism criterion");

  int64_t max_n = -1, max_p = -1;
  auto* survey = app.add_subcommand("survey", "exhaustive cross-validation");
  survey->add_option("bounds", triple, "n_max p_max")->expected(0, 2);
  survey->add_option("--max-n", max_n, "largest n");
  survey->add_option("--max-p", max_p, "largest p");
  survey->callback([&] {
    action = [&] {
      int64_t n = max_n, p = max_p;
      if (triple.size() == 2) {
        if (n >= 0 || p >= 0) throw UsageError("give bounds positionally or by flag, not both");
        n = triple[0];
        p = triple[1];
      } else if (!triple.empty()) {
        throw UsageError("survey takes n_max p_max");
      }
      const int64_t ceiling = survey_ceiling();
      return cmd_survey(n < 0 ? ceiling : n, p < 0 ? ceiling : p);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Outcome result;
  try {
    result = action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string body = format == "json" ? result.json.dump(2) + "\n" : result.text;
  if (out_path.empty()) {
    out << body;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!(file << body)) {
      err << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
  }
  return result.code;
}

}  // namespace gemforge

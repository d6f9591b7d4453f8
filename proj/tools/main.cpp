#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <nlohmann/json.hpp>

#include "elias/corpus.hpp"
#include "elias/criteria.hpp"
#include "elias/oracle.hpp"
#include "elias/report.hpp"

namespace {

using namespace elias;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitExpectFailed = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<Z>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_info(const std::string& ring, bool as_json) {
  RingSpec spec = parse_ring_spec(ring);
  if (spec.axis) {
    if (as_json) {
      json j = {{"ring", {{"model", "axis"}, {"branches", spec.branches}}}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "axis ring with " << spec.branches
                << " branches: Q[[a_1..a_n]]/(a_i a_j), use `check` with gens: ...\n";
    }
    return kExitOk;
  }
  SemigroupPtr H = make_semigroup(spec.gens);
  std::vector<Z> hilbert;
  for (Z s = 0;; ++s) {
    hilbert.push_back(hilbert_function(H, s));
    if (s >= 2 && hilbert[s] == H->multiplicity() && hilbert[s - 1] == H->multiplicity()) break;
    if (s > H->frobenius() + 8) break;
  }
  if (as_json) {
    json j;
    j["ring"] = {{"generators", H->generators()},
                 {"e", H->multiplicity()},
                 {"frobenius", H->frobenius()},
                 {"genus", H->genus()},
                 {"type", H->cm_type()},
                 {"gorenstein", H->is_symmetric()},
                 {"regular", H->is_regular()}};
    j["apery"] = H->apery_set(H->multiplicity());
    j["pseudo_frobenius"] = H->pseudo_frobenius();
    j["hilbert_prefix"] = hilbert;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "semigroup   <" << H->to_string() << ">";
  if (H->is_regular()) std::cout << "  (H = N: the ring k[[t]] is regular)";
  std::cout << "\n";
  std::cout << "e           " << H->multiplicity() << "\n";
  std::cout << "frobenius   " << H->frobenius() << "\n";
  std::cout << "genus       " << H->genus() << "\n";
  std::cout << "apery(e)    {" << join(H->apery_set(H->multiplicity())) << "}\n";
  std::cout << "PF          {" << join(H->pseudo_frobenius()) << "}\n";
  std::cout << "type        " << H->cm_type() << "\n";
  std::cout << "gorenstein  " << (H->is_symmetric() ? "true" : "false") << "\n";
  std::cout << "hilbert     " << join(hilbert) << ",...\n";
  return kExitOk;
}

int apply_expectations(EvalContext& ctx, const std::vector<std::string>& expects) {
  int failures = 0;
  for (const std::string& s : expects) {
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("--expect needs key=value", 0);
    std::string key = s.substr(0, eq);
    std::string want = s.substr(eq + 1);
    std::string got = evaluate_key(ctx, key);
    if (got != want) {
      std::cerr << "expectation failed: " << key << " expected " << want << ", got " << got
                << "\n";
      ++failures;
    }
  }
  return failures;
}

int cmd_check(const std::string& ring, const std::string& ideal,
              const std::vector<std::string>& expects, bool as_json, int trials,
              std::uint64_t seed, Z truncation) {
  EvalContext ctx = make_context(ring, ideal, truncation, seed, trials);
  if (ctx.spec.axis) {
    AxisReport r = build_axis_report(*ctx.model, ctx.axis_gens);
    std::cout << (as_json ? axis_report_to_json(r) : axis_report_to_table(r));
    if (!as_json) std::cout << "";
    std::cout << (as_json ? "\n" : "");
  } else {
    ReportOptions opts;
    opts.gll_trials = trials;
    opts.seed = seed;
    opts.truncation = truncation;
    CriteriaReport r = build_report(*ctx.ideal, opts);
    std::cout << (as_json ? report_to_json(r) + "\n" : report_to_table(r));
  }
  return apply_expectations(ctx, expects) == 0 ? kExitOk : kExitExpectFailed;
}

void print_gll_rows(const std::vector<GllRow>& rows, const BranchedRingModel& model,
                    bool as_json, std::optional<Z> eli, std::optional<Z> gmono) {
  std::vector<SeriesElement> mgens = model.maximal_ideal_generators();
  auto witness_string = [&](const GllRow& row) {
    SeriesElement x(model.branches());
    for (std::size_t i = 0; i < row.witness_coeffs.size(); ++i)
      if (row.witness_coeffs[i] != 0) x.add_scaled(mgens[i], Rational(row.witness_coeffs[i]));
    return x.to_string(model.branch_names());
  };
  if (as_json) {
    json j;
    if (eli) j["eli_lower_bound"] = *eli;
    if (gmono) j["gll_monomial"] = *gmono;
    j["rows"] = json::array();
    for (const GllRow& row : rows) {
      json r = {{"s", row.s},
                {"status", row.status == GllStatus::Success ? "SUCCESS" : "NO_WITNESS_FOUND"}};
      if (row.status == GllStatus::Success) {
        r["witness"] = witness_string(row);
        r["trial"] = row.trial_index;
      }
      j["rows"].push_back(r);
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (eli && gmono)
    std::cout << "gll(R) lies in [eli(R) = " << *eli << ", gll_monomial = " << *gmono
              << "]; rows below are exact upper-bound certificates only\n";
  for (const GllRow& row : rows) {
    std::cout << "s=" << row.s << "  ";
    if (row.status == GllStatus::Success)
      std::cout << "SUCCESS          m^" << row.s << " inside (" << witness_string(row)
                << ")  [trial " << row.trial_index << "]\n";
    else
      std::cout << "NO_WITNESS_FOUND (inconclusive: not a lower-bound proof)\n";
  }
}

int cmd_indices(const std::string& ring, Z smax, int trials, std::uint64_t seed, bool as_json,
                Z truncation) {
  RingSpec spec = parse_ring_spec(ring);
  if (spec.axis) throw ParseError("indices are defined for semigroup rings; use gll for axis", 0);
  SemigroupPtr H = make_semigroup(spec.gens);
  Z eli = elias_index(H);
  Z ulr = ulrich_index(H);
  Z gmono = gll_monomial(H);
  std::optional<Z> rand_upper;
  std::vector<GllRow> rows;
  if (smax <= 0) smax = gmono;
  Z vmax = ValueIdeal::power_of_maximal(H, smax).minimal_generators().back();
  BranchedRingModel model = truncation > 0 ? BranchedRingModel::semigroup_ring(H, truncation)
                                           : BranchedRingModel::semigroup_ring_for(H, vmax);
  if (trials > 0) {
    rows = gll_randomized(model, smax, trials, seed);
    for (const GllRow& r : rows)
      if (r.status == GllStatus::Success && !rand_upper) rand_upper = r.s;
  }
  if (as_json) {
    json j = {{"eli", eli},
              {"ulr", ulr},
              {"gll_monomial", gmono},
              {"gll_upper_randomized", rand_upper ? json(*rand_upper) : json(nullptr)}};
    j["randomized"] = json::array();
    for (const GllRow& r : rows) {
      j["randomized"].push_back(
          {{"s", r.s},
           {"status", r.status == GllStatus::Success ? "SUCCESS" : "NO_WITNESS_FOUND"}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "ring          <" << H->to_string() << ">\n";
  std::cout << "eli           " << eli << "\n";
  std::cout << "ulr           " << ulr << "\n";
  std::cout << "gll_monomial  " << gmono << "   (exact upper bound; eli <= gll <= gll_monomial)\n";
  if (trials > 0) print_gll_rows(rows, model, false, std::nullopt, std::nullopt);
  return kExitOk;
}

int cmd_gll(const std::string& ring, Z smax, int trials, std::uint64_t seed, bool as_json,
            Z truncation) {
  RingSpec spec = parse_ring_spec(ring);
  if (spec.axis) {
    BranchedRingModel model =
        BranchedRingModel::axis_ring(spec.branches, truncation > 0 ? truncation : 12);
    if (smax <= 0) smax = 3;
    auto rows = gll_randomized(model, smax, trials, seed);
    print_gll_rows(rows, model, as_json, std::nullopt, std::nullopt);
    return kExitOk;
  }
  SemigroupPtr H = make_semigroup(spec.gens);
  Z gmono = gll_monomial(H);
  if (smax <= 0) smax = gmono;
  Z vmax = ValueIdeal::power_of_maximal(H, smax).minimal_generators().back();
  BranchedRingModel model = truncation > 0 ? BranchedRingModel::semigroup_ring(H, truncation)
                                           : BranchedRingModel::semigroup_ring_for(H, vmax);
  auto rows = gll_randomized(model, smax, trials, seed);
  print_gll_rows(rows, model, as_json, elias_index(H), gmono);
  return kExitOk;
}

int cmd_corpus(const std::string& path, const std::string& filter, int jobs, std::uint64_t seed,
               int trials) {
  std::vector<CorpusCase> cases = parse_corpus_file(path);
  CorpusSummary s = run_corpus(cases, filter, jobs, seed, trials);
  for (const CaseOutcome& o : s.outcomes) {
    std::cout << (o.pass ? "PASS " : "FAIL ") << o.name << "\n";
    for (const std::string& d : o.diffs) std::cout << "     " << d << "\n";
  }
  std::cout << s.passed << " passed, " << s.failed << " failed ("
            << (s.passed + s.failed) << " cases)\n";
  return s.failed == 0 ? kExitOk : kExitExpectFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elias-ideal criteria for numerical semigroup rings and axis rings"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 12345;
  int trials = 0;        // check/indices: 0 skips the randomized search
  int corpus_trials = 8;
  int gll_trials = 8;
  Z smax = 0;
  Z truncation = 0;
  int jobs = 0;

  std::string ring, ideal = "m", path, filter;
  std::vector<std::string> expects;

  auto* info = app.add_subcommand("info", "semigroup invariants");
  info->add_option("ring", ring, "generators, e.g. 4,5,11")->required();
  info->add_flag("--json", as_json, "machine-readable output");

  auto* check = app.add_subcommand("check", "full criteria report for (ring, ideal)");
  check->add_option("ring", ring, "generators or axis:n")->required();
  check->add_option("ideal", ideal, "ideal expression, e.g. mpow:2 or \"gens: a-b, b-c\"");
  check->add_flag("--json", as_json);
  check->add_option("--expect", expects, "key=value assertions; mismatch sets exit code 1");
  check->add_option("--trials", trials, "randomized gll trials (0 = skip)");
  check->add_option("--seed", seed);
  check->add_option("--truncation", truncation, "series-model truncation override");

  auto* indices = app.add_subcommand("indices", "eli / ulr / gll index table");
  indices->add_option("ring", ring)->required();
  indices->add_flag("--json", as_json);
  indices->add_option("--smax", smax);
  indices->add_option("--trials", trials);
  indices->add_option("--seed", seed);
  indices->add_option("--truncation", truncation);

  auto* corpus = app.add_subcommand("corpus", "run a regression corpus file");
  corpus->add_option("path", path)->required();
  corpus->add_option("--filter", filter, "run only cases whose name contains this");
  corpus->add_option("--jobs", jobs, "concurrent cases (default: hardware)");
  corpus->add_option("--seed", seed);
  corpus->add_option("--trials", corpus_trials);

  auto* gll = app.add_subcommand("gll", "randomized generalized-Loewy-length search");
  gll->add_option("ring", ring)->required();
  gll->add_flag("--json", as_json);
  gll->add_option("--smax", smax);
  gll->add_option("--trials", gll_trials);
  gll->add_option("--seed", seed);
  gll->add_option("--truncation", truncation);

  try {
    app.parse(argc, argv);
    if (info->parsed()) return cmd_info(ring, as_json);
    if (check->parsed()) return cmd_check(ring, ideal, expects, as_json, trials, seed, truncation);
    if (indices->parsed()) return cmd_indices(ring, smax, trials, seed, as_json, truncation);
    if (corpus->parsed()) return cmd_corpus(path, filter, jobs, seed, corpus_trials);
    if (gll->parsed()) return cmd_gll(ring, smax, gll_trials, seed, as_json, truncation);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const elias::EliasError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

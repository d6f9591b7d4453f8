#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "elias/expr.hpp"

namespace elias {

/// One regression case: a ring, an ideal expression and expected key/value
/// pairs.  Every expectation carries a provenance note naming where the
/// value comes from (`ref` for published worked examples, `direct` for
/// definition-level facts, `oracle: <name>` for values computed by an
/// independent brute-force oracle before being frozen).
struct CorpusExpect {
  std::string key;
  std::string value;
  std::string provenance;
  int line = 0;
};

struct CorpusCase {
  std::string name;
  std::string ring;
  std::string ideal = "m";
  Z truncation = 0;
  std::vector<CorpusExpect> expects;
  int line = 0;
};

std::vector<CorpusCase> parse_corpus(std::istream& in);
std::vector<CorpusCase> parse_corpus_file(const std::string& path);

/// Evaluation context for expectation keys; built once per case.
struct EvalContext {
  RingSpec spec;
  SemigroupPtr H;                         // semigroup rings
  std::optional<ValueIdeal> ideal;        // semigroup rings
  std::optional<BranchedRingModel> model; // lazily built, also for axis rings
  std::vector<SeriesElement> axis_gens;   // axis rings
  std::uint64_t seed = 12345;
  int trials = 8;
  Z truncation = 0;
};

EvalContext make_context(const std::string& ring, const std::string& ideal, Z truncation,
                         std::uint64_t seed, int trials);

/// Evaluates a corpus key ("mu", "elias", "equals(EXPR)", "hilbert(6)",
/// "in_principal(t^6)", ...) to a canonical string.
std::string evaluate_key(EvalContext& ctx, const std::string& key);

struct CaseOutcome {
  std::string name;
  bool pass = true;
  std::vector<std::string> diffs;  // "key: expected X, got Y"
};

CaseOutcome run_case(const CorpusCase& c, std::uint64_t seed, int trials);

struct CorpusSummary {
  int passed = 0;
  int failed = 0;
  std::vector<CaseOutcome> outcomes;
};

/// Runs all cases whose name contains `filter`, up to `jobs` concurrently;
/// outcomes come back in corpus order.
CorpusSummary run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter,
                         int jobs, std::uint64_t seed, int trials);

}  // namespace elias

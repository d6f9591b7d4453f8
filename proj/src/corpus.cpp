#include "elias/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "elias/criteria.hpp"
#include "elias/oracle.hpp"
#include "elias/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace elias {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t case_seed(std::uint64_t global, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return splitmix64(global ^ h);
}

std::string join_values(const std::vector<Z>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

const char* yn(bool b) { return b ? "true" : "false"; }

// splits "name(arg)" into name and arg; arg empty when there are no parens
std::pair<std::string, std::string> split_key(const std::string& key) {
  std::size_t open = key.find('(');
  if (open == std::string::npos) return {key, ""};
  if (key.back() != ')') throw ParseError("malformed key '" + key + "'", 0);
  return {key.substr(0, open), key.substr(open + 1, key.size() - open - 2)};
}

}  // namespace

std::vector<CorpusCase> parse_corpus(std::istream& in) {
  std::vector<CorpusCase> cases;
  std::string line;
  int lineno = 0;
  CorpusCase current;
  bool open = false;
  auto flush = [&]() {
    if (open) {
      if (current.ring.empty())
        throw ParseError("case '" + current.name + "' has no ring line",
                         static_cast<std::size_t>(current.line));
      cases.push_back(current);
    }
    current = CorpusCase{};
    open = false;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::string word;
    ls >> word;
    std::string rest = trim(t.substr(word.size()));
    if (word == "case") {
      flush();
      open = true;
      current.name = rest;
      current.line = lineno;
      if (current.name.empty())
        throw ParseError("case needs a name", static_cast<std::size_t>(lineno));
    } else if (word == "ring") {
      current.ring = rest;
    } else if (word == "ideal") {
      current.ideal = rest;
    } else if (word == "trunc") {
      current.truncation = std::stoll(rest);
    } else if (word == "expect") {
      std::size_t hash = rest.find('#');
      if (hash == std::string::npos)
        throw ParseError("expect line needs a provenance note after '#'",
                         static_cast<std::size_t>(lineno));
      std::string body = trim(rest.substr(0, hash));
      std::string provenance = trim(rest.substr(hash + 1));
      if (provenance.empty())
        throw ParseError("empty provenance note", static_cast<std::size_t>(lineno));
      // first '=' at paren depth 0 separates key from value
      int depth = 0;
      std::size_t eq = std::string::npos;
      for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        if (body[i] == ')') --depth;
        if (body[i] == '=' && depth == 0) {
          eq = i;
          break;
        }
      }
      if (eq == std::string::npos)
        throw ParseError("expect line needs key=value", static_cast<std::size_t>(lineno));
      CorpusExpect e;
      e.key = trim(body.substr(0, eq));
      e.value = trim(body.substr(eq + 1));
      e.provenance = provenance;
      e.line = lineno;
      if (!open) throw ParseError("expect outside a case", static_cast<std::size_t>(lineno));
      current.expects.push_back(std::move(e));
    } else {
      throw ParseError("unknown corpus record '" + word + "'", static_cast<std::size_t>(lineno));
    }
  }
  flush();
  return cases;
}

std::vector<CorpusCase> parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EmptyInput("cannot open corpus file " + path);
  return parse_corpus(in);
}

EvalContext make_context(const std::string& ring, const std::string& ideal, Z truncation,
                         std::uint64_t seed, int trials) {
  EvalContext ctx;
  ctx.spec = parse_ring_spec(ring);
  ctx.seed = seed;
  ctx.trials = trials;
  ctx.truncation = truncation;
  if (ctx.spec.axis) {
    Z n = truncation > 0 ? truncation : 12;
    ctx.model = BranchedRingModel::axis_ring(ctx.spec.branches, n);
    ctx.axis_gens = parse_axis_ideal(ideal, *ctx.model);
  } else {
    ctx.H = make_semigroup(ctx.spec.gens);
    ctx.ideal = eval_ideal_expr(ideal, ctx.H);
  }
  return ctx;
}

namespace {

// model sized for the largest ideal value the key will touch
BranchedRingModel& semigroup_model(EvalContext& ctx, Z max_value) {
  if (!ctx.model || ctx.model->truncation() <
                        BranchedRingModel::semigroup_ring_for(ctx.H, max_value).truncation()) {
    if (ctx.truncation > 0)
      ctx.model = BranchedRingModel::semigroup_ring(ctx.H, ctx.truncation);
    else
      ctx.model = BranchedRingModel::semigroup_ring_for(ctx.H, max_value);
  }
  return *ctx.model;
}

Z max_mingen(const elias::ValueIdeal& I) {
  auto g = I.minimal_generators();
  return g.back();
}

std::string evaluate_semigroup_key(EvalContext& ctx, const std::string& name,
                                   const std::string& arg) {
  const SemigroupPtr& H = ctx.H;
  const ValueIdeal& I = *ctx.ideal;
  if (name == "e") return std::to_string(H->multiplicity());
  if (name == "type") return std::to_string(H->cm_type());
  if (name == "frobenius") return std::to_string(H->frobenius());
  if (name == "genus") return std::to_string(H->genus());
  if (name == "gorenstein") return yn(H->is_symmetric());
  if (name == "generators") return join_values(H->generators());
  if (name == "pf") return join_values(H->pseudo_frobenius());
  if (name == "apery") {
    Z mod = arg.empty() ? H->multiplicity() : std::stoll(arg);
    return join_values(H->apery_set(mod));
  }
  if (name == "hilbert") {
    Z k = std::stoll(arg);
    std::vector<Z> prefix;
    for (Z s = 0; s < k; ++s) prefix.push_back(hilbert_function(H, s));
    return join_values(prefix);
  }
  if (name == "mingens") return join_values(I.minimal_generators());
  if (name == "mu") return std::to_string(I.mu());
  if (name == "order") return std::to_string(order(I));
  if (name == "colength")
    return std::to_string(quotient_length(ValueIdeal::unit(H), I));
  if (name == "values") return I.to_string();
  if (name == "type_ideal") return std::to_string(type_of_ideal(I));
  if (name == "type_quotient") return std::to_string(type_of_quotient(I));
  if (name == "elias") return yn(is_elias(I).elias);
  if (name == "witness") {
    auto w = is_elias(I).witness;
    return w ? std::to_string(*w) : "none";
  }
  if (name == "ulrich") return yn(is_ulrich(I));
  if (name == "mfull_te") return yn(is_mfull_te(I));
  if (name == "full") return yn(is_full(I));
  if (name == "integrally_closed") return yn(is_integrally_closed(I));
  if (name == "extension_module") return yn(is_extension_module(I));
  if (name == "eli") return std::to_string(elias_index(H));
  if (name == "ulr") return std::to_string(ulrich_index(H));
  if (name == "gll_monomial") return std::to_string(gll_monomial(H));
  if (name == "gr_cm") return yn(gr_is_cm(H));
  if (name == "frobext_eli")
    return std::to_string(elias_index(frobenius_extension(H)));
  if (name == "equals") return yn(I == eval_ideal_expr(arg, H));
  if (name == "subset") return yn(subset_of(I, eval_ideal_expr(arg, H)));
  if (name == "contains") return yn(subset_of(eval_ideal_expr(arg, H), I));
  if (name == "smallmu") return yn(elias_via_small_mu(I).direct.has_value());
  if (name == "smallmu_product") return yn(elias_via_small_mu(I).product.has_value());
  if (name == "ulrich_cover") {
    ValueIdeal J = eval_ideal_expr(arg, H);
    return yn(elias_via_ulrich_cover(I, J).has_value());
  }
  if (name == "delta_one") return yn(gorenstein_report(I).delta_one);
  if (name == "auslander_index") return std::to_string(gorenstein_report(I).auslander_index);
  if (name == "in_principal") {
    BranchedRingModel& model = semigroup_model(ctx, max_mingen(I));
    SeriesElement x = parse_series(arg, model);
    std::vector<SeriesElement> gens;
    for (Z w : I.minimal_generators()) gens.push_back(SeriesElement::monomial(1, 0, w));
    return yn(contains_in_principal(model, gens, x));
  }
  if (name == "elias_linear") {
    BranchedRingModel& model = semigroup_model(ctx, max_mingen(I));
    std::vector<SeriesElement> gens;
    for (Z w : I.minimal_generators()) gens.push_back(SeriesElement::monomial(1, 0, w));
    return yn(is_elias_linear(model, gens).elias);
  }
  if (name == "gll_success_at") {
    Z s = std::stoll(arg);
    Z vmax = max_mingen(ValueIdeal::power_of_maximal(H, s));
    BranchedRingModel& model = semigroup_model(ctx, vmax);
    auto rows = gll_randomized(model, s, ctx.trials, ctx.seed);
    return yn(rows.back().status == GllStatus::Success);
  }
  throw ParseError("unknown expectation key '" + name + "'", 0);
}

std::string evaluate_axis_key(EvalContext& ctx, const std::string& name, const std::string& arg) {
  BranchedRingModel& model = *ctx.model;
  if (name == "elias") return yn(is_elias_linear(model, ctx.axis_gens).elias);
  if (name == "colength") return std::to_string(colength_linear(model, ctx.axis_gens));
  if (name == "in_principal") {
    SeriesElement x = parse_series(arg, model);
    return yn(contains_in_principal(model, ctx.axis_gens, x));
  }
  if (name == "gll_success_at") {
    Z s = std::stoll(arg);
    auto rows = gll_randomized(model, s, ctx.trials, ctx.seed);
    return yn(rows.back().status == GllStatus::Success);
  }
  throw ParseError("key '" + name + "' is not available for axis rings", 0);
}

}  // namespace

std::string evaluate_key(EvalContext& ctx, const std::string& key) {
  auto [name, arg] = split_key(key);
  if (ctx.spec.axis) return evaluate_axis_key(ctx, name, arg);
  return evaluate_semigroup_key(ctx, name, arg);
}

CaseOutcome run_case(const CorpusCase& c, std::uint64_t seed, int trials) {
  CaseOutcome out;
  out.name = c.name;
  try {
    EvalContext ctx = make_context(c.ring, c.ideal, c.truncation, case_seed(seed, c.name), trials);
    for (const CorpusExpect& e : c.expects) {
      std::string got = evaluate_key(ctx, e.key);
      if (got != e.value) {
        out.pass = false;
        out.diffs.push_back(e.key + ": expected " + e.value + ", got " + got + "  [" +
                            e.provenance + "]");
      }
    }
  } catch (const std::exception& ex) {
    out.pass = false;
    out.diffs.push_back(std::string("error: ") + ex.what());
  }
  return out;
}

CorpusSummary run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter,
                         int jobs, std::uint64_t seed, int trials) {
  std::vector<const CorpusCase*> selected;
  for (const auto& c : cases)
    if (filter.empty() || c.name.find(filter) != std::string::npos) selected.push_back(&c);

  CorpusSummary summary;
  summary.outcomes.resize(selected.size());
  // cases are independent; output order is restored afterwards
#ifdef _OPENMP
  if (jobs < 1) jobs = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (std::size_t i = 0; i < selected.size(); ++i)
    summary.outcomes[i] = run_case(*selected[i], seed, trials);

  for (const auto& o : summary.outcomes) (o.pass ? summary.passed : summary.failed)++;
  return summary;
}

}  // namespace elias

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "elias/corpus.hpp"

using namespace elias;

namespace {

std::vector<CorpusCase> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in);
}

}  // namespace

TEST_CASE("corpus parsing") {
  auto cases = parse(
      "# a comment\n"
      "case first\n"
      "ring 4,5,11\n"
      "ideal mpow:2\n"
      "expect mu=3            # ref\n"
      "expect elias=true      # ref\n"
      "\n"
      "case second\n"
      "ring axis:3\n"
      "ideal gens: a-b, b-c\n"
      "trunc 12\n"
      "expect colength=2      # ref\n");
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].name == "first");
  CHECK(cases[0].ring == "4,5,11");
  CHECK(cases[0].ideal == "mpow:2");
  REQUIRE(cases[0].expects.size() == 2);
  CHECK(cases[0].expects[0].key == "mu");
  CHECK(cases[0].expects[0].value == "3");
  CHECK(cases[0].expects[0].provenance == "ref");
  CHECK(cases[1].truncation == 12);

  // every expectation needs a provenance note
  CHECK_THROWS_AS(parse("case x\nring 2,3\nexpect mu=1\n"), ParseError);
  // expectations cannot appear outside a case
  CHECK_THROWS_AS(parse("expect mu=1 # ref\n"), ParseError);
  // a case needs a ring
  CHECK_THROWS_AS(parse("case x\nexpect mu=1 # ref\n"), ParseError);
}

TEST_CASE("running cases") {
  auto cases = parse(
      "case good\n"
      "ring 4,5,11\n"
      "ideal mpow:2\n"
      "expect mu=3 # ref\n"
      "expect equals(product(m,m))=true # direct\n"
      "case bad\n"
      "ring 4,5,11\n"
      "ideal mpow:2\n"
      "expect mu=7 # deliberately wrong\n");
  CaseOutcome ok = run_case(cases[0], 1, 4);
  CHECK(ok.pass);
  CaseOutcome bad = run_case(cases[1], 1, 4);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.diffs.size() == 1);
  CHECK(bad.diffs[0].find("expected 7, got 3") != std::string::npos);

  CorpusSummary all = run_corpus(cases, "", 2, 1, 4);
  CHECK(all.passed == 1);
  CHECK(all.failed == 1);

  CorpusSummary filtered = run_corpus(cases, "good", 2, 1, 4);
  CHECK(filtered.passed == 1);
  CHECK(filtered.failed == 0);
}

TEST_CASE("evaluation keys") {
  EvalContext ctx = make_context("4,5,11", "mpow:2", 0, 7, 4);
  CHECK(evaluate_key(ctx, "e") == "4");
  CHECK(evaluate_key(ctx, "type") == "2");
  CHECK(evaluate_key(ctx, "frobenius") == "7");
  CHECK(evaluate_key(ctx, "gorenstein") == "false");
  CHECK(evaluate_key(ctx, "pf") == "6,7");
  CHECK(evaluate_key(ctx, "apery") == "0,5,10,11");
  CHECK(evaluate_key(ctx, "mingens") == "8,9,10");
  CHECK(evaluate_key(ctx, "order") == "2");
  CHECK(evaluate_key(ctx, "colength") == "4");
  CHECK(evaluate_key(ctx, "type_ideal") == "3");
  CHECK(evaluate_key(ctx, "type_quotient") == "3");
  CHECK(evaluate_key(ctx, "elias") == "true");
  CHECK(evaluate_key(ctx, "ulrich") == "false");
  CHECK(evaluate_key(ctx, "eli") == "2");
  CHECK(evaluate_key(ctx, "ulr") == "3");
  CHECK(evaluate_key(ctx, "gll_monomial") == "3");
  CHECK(evaluate_key(ctx, "smallmu") == "true");
  CHECK(evaluate_key(ctx, "subset(m)") == "true");
  CHECK(evaluate_key(ctx, "contains(conductor)") == "false");
  CHECK(evaluate_key(ctx, "in_principal(t^4)") == "false");
  CHECK_THROWS_AS(evaluate_key(ctx, "no_such_key"), ParseError);

  EvalContext hil = make_context("6,7,15", "m", 0, 7, 4);
  CHECK(evaluate_key(hil, "hilbert(6)") == "1,3,4,5,5,6");
  CHECK(evaluate_key(hil, "gr_cm") == "false");

  EvalContext axis = make_context("axis:3", "gens: a-b, b-c", 12, 7, 4);
  CHECK(evaluate_key(axis, "elias") == "true");
  CHECK(evaluate_key(axis, "colength") == "2");
  CHECK_THROWS_AS(evaluate_key(axis, "mu"), ParseError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/property_suite.hpp"

// Moderate sample counts keep the unit run fast; the acceptance suite runs
// the same properties at full scale.

TEST_CASE("properties (a)-(j) over random rings and ideals") {
  suite::Result r = suite::run_main_suite(160, 0xE11A5);
  for (const auto& v : r.violations) MESSAGE(v);
  CHECK(r.violations.empty());
  CHECK(r.samples == 160);
}

TEST_CASE("Gorenstein reporting over symmetric rings") {
  suite::Result r = suite::run_gorenstein_suite(80, 0x60937);
  for (const auto& v : r.violations) MESSAGE(v);
  CHECK(r.violations.empty());
}

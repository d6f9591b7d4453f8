#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elias/value_ideal.hpp"
#include "support/oracles.hpp"
#include "support/random_rings.hpp"

using namespace elias;

namespace {

const std::vector<Z> kGens = {4, 5, 11};

SemigroupPtr H4511() {
  static SemigroupPtr H = make_semigroup(kGens);
  return H;
}

// checks the H-closure invariant on the normalized window
bool closed_under_generators(const ValueIdeal& I) {
  for (Z z = I.min_value(); z < I.stable_from(); ++z) {
    if (!I.has(z)) continue;
    for (Z g : I.ambient()->generators())
      if (!I.has(z + g)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("from_generators") {
  auto H = H4511();
  ValueIdeal R = ValueIdeal::unit(H);
  CHECK(R.to_string() == "0,4,5,8+");
  CHECK(R.is_unit());

  ValueIdeal m2 = ValueIdeal::from_generators(H, {8, 9, 10});
  CHECK(m2.to_string() == "8,9,10,12+");
  oracle::Window w = oracle::ideal_values(kGens, {8, 9, 10}, 40);
  CHECK(oracle::agree(m2, w, 0, 40));

  ValueIdeal K = ValueIdeal::from_generators(H, {0, 1});
  CHECK(K.to_string() == "0,1,4,5,6,8+");
  oracle::Window wk = oracle::ideal_values(kGens, {0, 1}, 40);
  CHECK(oracle::agree(K, wk, 0, 40));

  CHECK_THROWS_AS(ValueIdeal::from_generators(H, {}), EmptyGenerators);
}

TEST_CASE("maximal ideal and its powers") {
  auto H = H4511();
  ValueIdeal m = ValueIdeal::maximal(H);
  CHECK(m.to_string() == "4,5,8+");
  CHECK(ValueIdeal::power_of_maximal(H, 0) == ValueIdeal::unit(H));
  ValueIdeal m2 = ValueIdeal::power_of_maximal(H, 2);
  CHECK(m2.to_string() == "8,9,10,12+");
  CHECK_FALSE(m2.has(11));  // 11 is not a sum of two positive values

  auto H6 = make_semigroup({6, 7, 15});
  ValueIdeal m4 = ValueIdeal::power_of_maximal(H6, 4);
  CHECK(m4.min_value() == 24);
  CHECK(m4.mu() == 5);
}

TEST_CASE("sum, product, intersection") {
  auto H = H4511();
  sampler::RingSampler gen(7);
  for (int i = 0; i < 10; ++i) {
    ValueIdeal I = gen.mprimary_ideal(H);
    CHECK(product(ValueIdeal::unit(H), I) == I);
  }
  ValueIdeal m = ValueIdeal::maximal(H);
  CHECK(product(m, m) == ValueIdeal::power_of_maximal(H, 2));

  ValueIdeal a = ValueIdeal::from_generators(H, {8});
  ValueIdeal b = ValueIdeal::from_generators(H, {9});
  ValueIdeal both = intersect(a, b);
  CHECK(both.to_string() == "13,17+");  // oracle: direct set intersection
  oracle::Window wa = oracle::ideal_values(kGens, {8}, 50);
  oracle::Window wb = oracle::ideal_values(kGens, {9}, 50);
  CHECK(oracle::agree(both, oracle::intersect(wa, wb, 50), 0, 50));

  auto H2 = make_semigroup({2, 3});
  CHECK_THROWS_AS(sum(ValueIdeal::unit(H), ValueIdeal::unit(H2)), AmbientMismatch);
}

TEST_CASE("colon") {
  auto H = H4511();
  ValueIdeal m = ValueIdeal::maximal(H);
  ValueIdeal m2 = ValueIdeal::power_of_maximal(H, 2);
  sampler::RingSampler gen(11);
  for (int i = 0; i < 10; ++i) {
    ValueIdeal I = gen.mprimary_ideal(H);
    CHECK(colon(I, ValueIdeal::unit(H)) == I);
  }
  // m^2 : m = m
  CHECK(colon(m2, m) == m);

  // K : m^2 = {-4} u {z >= 0}, minimal generators {-4, 2, 3}
  ValueIdeal K = ValueIdeal::canonical(H);
  ValueIdeal c = colon(K, m2);
  CHECK(c.min_value() == -4);
  CHECK(c.to_string() == "-4,0+");
  CHECK(c.minimal_generators() == std::vector<Z>{-4, 2, 3});
  CHECK(c.mu() == 3);
}

TEST_CASE("minimal generators and mu") {
  auto H = H4511();
  CHECK(ValueIdeal::unit(H).minimal_generators() == std::vector<Z>{0});
  CHECK(ValueIdeal::unit(H).mu() == 1);
  ValueIdeal m2 = ValueIdeal::power_of_maximal(H, 2);
  CHECK(m2.minimal_generators() == std::vector<Z>{8, 9, 10});
}

TEST_CASE("quotient length") {
  auto H = H4511();
  ValueIdeal m = ValueIdeal::maximal(H);
  ValueIdeal m2 = ValueIdeal::power_of_maximal(H, 2);
  CHECK(quotient_length(m, m) == 0);
  CHECK(quotient_length(ValueIdeal::unit(H), m) == 1);
  CHECK(quotient_length(colon(m2, m), m2) == 3);  // {4,5,11}
  CHECK_THROWS_AS(quotient_length(m2, m), NotContained);
}

TEST_CASE("order") {
  auto H = H4511();
  CHECK(order(ValueIdeal::maximal(H)) == 1);
  CHECK(order(ValueIdeal::power_of_maximal(H, 2)) == 2);
  CHECK(order(ValueIdeal::from_generators(H, {11})) == 1);  // 11 not in val(m^2)
  CHECK(order(ValueIdeal::unit(H)) == 0);
  ValueIdeal K = ValueIdeal::canonical(H);
  CHECK_THROWS_AS(order(colon(K, ValueIdeal::power_of_maximal(H, 2))), NotIntegral);
}

TEST_CASE("hilbert function") {
  auto H6 = make_semigroup({6, 7, 15});
  std::vector<Z> expected = {1, 3, 4, 5, 5, 6};
  for (Z s = 0; s < 6; ++s) CHECK(hilbert_function(H6, s) == expected[static_cast<std::size_t>(s)]);
  auto H = H4511();
  CHECK(hilbert_function(H, 0) == 1);
  for (Z s = 5; s < 9; ++s) CHECK(hilbert_function(H, s) == 4);
}

TEST_CASE("canonical ideal") {
  CHECK(ValueIdeal::canonical(make_semigroup({2, 3})) == ValueIdeal::unit(make_semigroup({2, 3})));
  CHECK(ValueIdeal::canonical(make_semigroup({1})).is_unit());

  auto H = H4511();
  ValueIdeal K = ValueIdeal::canonical(H);
  CHECK(K.to_string() == "0,1,4,5,6,8+");
  CHECK(K.min_value() == 0);
  CHECK(K.mu() == H->cm_type());
  CHECK(colon(K, K) == ValueIdeal::unit(H));

  auto Hn = make_semigroup({4, 5, 6, 7});
  CHECK(ValueIdeal::canonical(Hn).mu() == Hn->cm_type());
  CHECK(ValueIdeal::canonical(Hn).mu() == 3);
}

TEST_CASE("conductor and extension modules") {
  CHECK(ValueIdeal::conductor(make_semigroup({1})).is_unit());
  auto H = H4511();
  ValueIdeal c = ValueIdeal::conductor(H);
  CHECK(c.to_string() == "8+");
  CHECK(is_extension_module(c));
  CHECK_FALSE(is_extension_module(ValueIdeal::maximal(H)));  // 4+1 = 5 in M, 5+1 = 6 not
  CHECK(is_integrally_closed(c));
}

TEST_CASE("trace and inverse") {
  auto H = H4511();
  CHECK(trace_ideal(ValueIdeal::unit(H)).is_unit());
  ValueIdeal m2 = ValueIdeal::power_of_maximal(H, 2);
  ValueIdeal tr = trace_ideal(m2);
  CHECK(tr.minimal_generators() == std::vector<Z>{8, 9, 10, 11});

  ValueIdeal K = ValueIdeal::canonical(H);
  CHECK(product(K, inverse(K)) == trace_ideal(K));
}

TEST_CASE("integral closure") {
  auto H = H4511();
  ValueIdeal m = ValueIdeal::maximal(H);
  CHECK(is_integrally_closed(m));
  ValueIdeal m2 = ValueIdeal::power_of_maximal(H, 2);
  ValueIdeal closure = integral_closure(m2);
  CHECK(closure.minimal_generators() == std::vector<Z>{8, 9, 10, 11});
  CHECK_FALSE(is_integrally_closed(m2));  // 11 in the closure, not in val(m^2)
  ValueIdeal K = ValueIdeal::canonical(H);
  CHECK_THROWS_AS(integral_closure(colon(K, m2)), NotIntegral);
}

TEST_CASE("randomized value-ideal invariants") {
  sampler::RingSampler gen(424242);
  for (int i = 0; i < 120; ++i) {
    SemigroupPtr H = gen.semigroup();
    ValueIdeal I = gen.mprimary_ideal(H);
    ValueIdeal J = gen.mprimary_ideal(H);
    ValueIdeal K = ValueIdeal::canonical(H);

    // every normalized ideal passes the closure invariant
    CHECK(closed_under_generators(I));
    CHECK(closed_under_generators(colon(I, J)));

    // colon is shift-invariant in both arguments jointly
    Z x = gen.pick(1, 9);
    CHECK(colon(shift(I, x), shift(J, x)) == colon(I, J));
    CHECK(colon(product(ValueIdeal::from_generators(H, {x}), I),
                product(ValueIdeal::from_generators(H, {x}), J)) == colon(I, J));

    // product(I, colon(J, I)) is contained in J
    CHECK(subset_of(product(I, colon(J, I)), J));

    // canonical duality K : (K : I) = I
    CHECK(colon(K, colon(K, I)) == I);

    // rebuild from minimal generators
    CHECK(ValueIdeal::from_generators(H, I.minimal_generators()) == I);

    // hilbert function reaches e and stays there; deficiency is non-negative
    Z e = H->multiplicity();
    Z s = 0;
    Z deficiency = 0;
    for (; s < H->frobenius() + e + 8; ++s) {
      Z hf = hilbert_function(H, s);
      CHECK(hf <= e);
      deficiency += e - hf;
      if (hf == e && hilbert_function(H, s + 1) == e) break;
    }
    CHECK(deficiency >= 0);

    // full-window product agrees with the minimal-generator product
    Z hi = I.stable_from() + J.stable_from() + H->frobenius() + 2;
    oracle::Window wi, wj;
    wi.hi = I.stable_from();
    for (Z z = I.min_value(); z < I.stable_from(); ++z)
      if (I.has(z)) wi.vals.insert(z);
    wj.hi = J.stable_from();
    for (Z z = J.min_value(); z < J.stable_from(); ++z)
      if (J.has(z)) wj.vals.insert(z);
    CHECK(oracle::agree(product(I, J), oracle::sumset(wi, wj, hi), I.min_value() + J.min_value(),
                        hi));
  }
}

#pragma once

// The randomized property suites shared by the unit tests and the
// acceptance runner.  Each property records a violation string instead of
// asserting, so a single run reports every failure at once.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "elias/criteria.hpp"
#include "elias/oracle.hpp"
#include "support/random_rings.hpp"

namespace suite {

using namespace elias;

struct Result {
  int samples = 0;
  std::vector<std::string> violations;

  void violate(const std::string& what, const SemigroupPtr& H, const ValueIdeal* I) {
    std::ostringstream os;
    os << what << "  [H=<" << H->to_string() << ">";
    if (I) os << " I=" << I->to_string();
    os << "]";
    violations.push_back(os.str());
  }
};

struct RingFacts {
  Z eli = 0, ulr = 0, gllm = 0;
  bool grcm = false;
};

inline RingFacts ring_facts(const SemigroupPtr& H) {
  return {elias_index(H), ulrich_index(H), gll_monomial(H), gr_is_cm(H)};
}

/// Properties (a)-(j): types, unanimity, inclusion-closure, principal and
/// canonical ideals, Ulrich equivalences, the m-full factorization, index
/// chains, conductor/trace exclusions, extension modules, and the
/// series-oracle agreement.
inline Result run_main_suite(int n_samples, std::uint64_t seed, bool with_series_oracle = true) {
  sampler::RingSampler gen(seed);
  Result res;

  SemigroupPtr H;
  std::optional<RingFacts> facts;
  std::optional<BranchedRingModel> model;

  for (int i = 0; i < n_samples; ++i) {
    if (i % 4 == 0 || !H) {
      H = gen.semigroup(8, 20);
      facts.reset();
      model.reset();
    }
    ValueIdeal I = gen.mprimary_ideal(H);
    ++res.samples;

    try {
      // (a) type(I) >= type(R/I)
      Z ti = type_of_ideal(I);
      Z tq = type_of_quotient(I);
      if (ti < tq) res.violate("(a) type(I) < type(R/I)", H, &I);

      // (b) four-way unanimity (is_elias hard-asserts; surface any throw)
      EliasResult er = is_elias(I);
      if (!er.methods.unanimous()) res.violate("(b) methods disagree", H, &I);
      if (er.elias != (ti == tq)) res.violate("(b) verdict mismatch", H, &I);

      // (c) Elias is closed under inclusion
      if (er.elias) {
        ValueIdeal smaller = product(ValueIdeal::maximal(H), I);
        if (!is_elias(smaller).elias) res.violate("(c) mI not Elias below Elias I", H, &I);
        ValueIdeal J = gen.mprimary_ideal(H);
        ValueIdeal meet = intersect(I, J);
        if (!is_elias(meet).elias) res.violate("(c) intersection not Elias", H, &meet);
      }

      // (d) principal and canonical ideals are Elias
      {
        Z v = I.min_value();
        if (!is_elias(ValueIdeal::from_generators(H, {v})).elias)
          res.violate("(d) principal ideal not Elias", H, &I);
        ValueIdeal K = ValueIdeal::canonical(H);
        ValueIdeal Kshift = shift(K, H->frobenius() + 1);
        if (!Kshift.is_mprimary() || !is_elias(Kshift).elias)
          res.violate("(d) shifted canonical ideal not Elias", H, nullptr);
      }

      // (e) Ulrich <=> mu = e <=> type = e
      {
        bool u = is_ulrich(I);
        if (u != (I.mu() == H->multiplicity())) res.violate("(e) ulrich vs mu", H, &I);
        if (u != (ti == H->multiplicity())) res.violate("(e) ulrich vs type", H, &I);
      }

      // (f) m-full + Elias => I = t^e J with J Ulrich
      if (is_mfull_te(I) && er.elias) {
        Z e = H->multiplicity();
        if (!subset_of(I, ValueIdeal::from_generators(H, {e}))) {
          res.violate("(f) m-full Elias ideal not inside (t^e)", H, &I);
        } else {
          ValueIdeal J = shift(I, -e);
          if (!J.is_mprimary() || !is_ulrich(J)) res.violate("(f) quotient not Ulrich", H, &I);
        }
      }

      // (g) index chain, with equalities under a CM associated graded ring
      if (!facts) facts = ring_facts(H);
      if (!(facts->eli <= facts->gllm && facts->gllm <= facts->ulr + 1))
        res.violate("(g) index chain broken", H, nullptr);
      if (facts->grcm && !(facts->eli == facts->gllm && facts->gllm == facts->ulr + 1))
        res.violate("(g) CM graded ring without index equalities", H, nullptr);

      // (h) conductor and proper trace ideals are never Elias
      {
        ValueIdeal c = ValueIdeal::conductor(H);
        if (is_elias(c).elias) res.violate("(h) conductor Elias", H, nullptr);
        ValueIdeal tr = trace_ideal(I);
        if (!tr.is_unit() && is_elias(tr).elias) res.violate("(h) trace ideal Elias", H, &I);
      }

      // (i) extension module + Elias => (I : m) n R inside the conductor
      {
        Z a = H->frobenius() + 1 + gen.pick(0, 2 * H->multiplicity());
        ValueIdeal seg = ValueIdeal::from_window(H, a, a, [](Z) { return true; });
        if (is_extension_module(seg) && is_elias(seg).elias) {
          ValueIdeal socle = intersect(colon(seg, ValueIdeal::maximal(H)), ValueIdeal::unit(H));
          if (!subset_of(socle, ValueIdeal::conductor(H)))
            res.violate("(i) extension-module socle escapes the conductor", H, &seg);
        }
        if (is_extension_module(I) && is_elias(I).elias) {
          ValueIdeal socle = intersect(colon(I, ValueIdeal::maximal(H)), ValueIdeal::unit(H));
          if (!subset_of(socle, ValueIdeal::conductor(H)))
            res.violate("(i) extension-module socle escapes the conductor", H, &I);
        }
      }

      // (j) series oracle agrees with the value-set engine
      if (with_series_oracle) {
        if (!model)
          model = BranchedRingModel::semigroup_ring_for(
              H, H->frobenius() + 2 * H->multiplicity() + 2);
        std::vector<SeriesElement> gens;
        for (Z w : I.minimal_generators()) gens.push_back(SeriesElement::monomial(1, 0, w));
        EliasLinearResult lin = is_elias_linear(*model, gens);
        if (lin.elias != er.elias) res.violate("(j) series oracle disagrees", H, &I);
      }
    } catch (const std::exception& ex) {
      res.violate(std::string("exception: ") + ex.what(), H, &I);
    }
  }
  return res;
}

/// Gorenstein reporting: delta(R/I) = 1 iff Elias, ind(R) = eli(R), and
/// the inverse/trace criteria, over symmetric semigroups.
inline Result run_gorenstein_suite(int n_samples, std::uint64_t seed) {
  sampler::RingSampler gen(seed);
  Result res;
  SemigroupPtr H;
  for (int i = 0; i < n_samples; ++i) {
    if (i % 4 == 0 || !H) H = gen.symmetric_semigroup(8, 20);
    ValueIdeal I = gen.mprimary_ideal(H);
    ++res.samples;
    try {
      GorensteinReport rep = gorenstein_report(I);
      bool el = is_elias(I).elias;
      if (rep.delta_one != el) res.violate("delta(R/I) = 1 iff Elias failed", H, &I);
      if (rep.inverse_criterion != el) res.violate("1 in m I^{-1} iff Elias failed", H, &I);
      if (rep.auslander_index != elias_index(H)) res.violate("ind(R) != eli(R)", H, nullptr);
      if (el && !subset_of(I, product(ValueIdeal::maximal(H), trace_ideal(I))))
        res.violate("Elias ideal not inside m tr(I)", H, &I);
    } catch (const std::exception& ex) {
      res.violate(std::string("exception: ") + ex.what(), H, &I);
    }
  }
  return res;
}

}  // namespace suite

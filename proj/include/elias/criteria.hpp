#pragma once

#include <optional>
#include <vector>

#include "elias/value_ideal.hpp"

namespace elias {

/// type(R/I) = l((I : m) n R / I), the socle length of R/I.
/// Requires I m-primary (integral and proper).
Z type_of_quotient(const ValueIdeal& I);

/// Cohen-Macaulay type of I as a module, computed by two independent
/// routes: mu(K :_Q I) with K the canonical ideal, and the socle length
/// l(((xI : m) n I) / xI) with the monomial non-zerodivisor x = t^e.
/// The two must agree; disagreement raises InternalDisagreement.
/// Defined for any nonzero fractional ideal (it is shift-invariant).
Z type_of_ideal(const ValueIdeal& I);

struct EliasMethods {
  bool type_equality = false;     // type(I) = type(R/I)
  bool colon_te = false;          // xI : m inside (x), x = t^e
  bool fractional_colon = false;  // I :_Q m inside R
  bool canonical = false;         // K inside m(K :_Q I)
  bool unanimous() const {
    return type_equality == colon_te && colon_te == fractional_colon &&
           fractional_colon == canonical;
  }
};

struct EliasResult {
  bool elias = false;
  EliasMethods methods;
  std::optional<Z> witness;  // value in (I :_Q m) \ R when not Elias
};

/// Evaluates all four characterizations and asserts unanimity.
EliasResult is_elias(const ValueIdeal& I);

/// mu(I) = e, cross-asserted with type(I) = e and with t^e I = m I.
bool is_ulrich(const ValueIdeal& I);
/// m-fullness decided with the monomial witness x = t^e only:
/// (Im : t^e) n R = I.
bool is_mfull_te(const ValueIdeal& I);
/// (Im : m) n R = I.
bool is_full(const ValueIdeal& I);

struct SmallMuCertificates {
  struct Direct {  // mu(I) < e and type(R/I) >= e-1: I is Elias
    Z mu, e, type_quotient;
  };
  struct Product {  // mu(mI) <= mu(I) = e-1: mI is Elias and (mI : m) n R = I
    Z mu_mI, mu_I;
  };
  std::optional<Direct> direct;
  std::optional<Product> product;
};

/// Sufficient criteria from generator counts.  Every certificate is
/// cross-checked against is_elias before being returned.
SmallMuCertificates elias_via_small_mu(const ValueIdeal& I);

struct UlrichCoverCertificate {
  // for each minimal generator w of J, a value in (w + M) \ (e + E_I)
  std::vector<std::pair<Z, Z>> generator_witness;
};

/// Sufficient criterion from an Ulrich cover J >= I with x = t^e: if
/// m y is not contained in xI for any minimal generator y of J, then I is
/// Elias.  Returns nullopt when the hypothesis fails for some generator.
std::optional<UlrichCoverCertificate> elias_via_ulrich_cover(const ValueIdeal& I,
                                                             const ValueIdeal& J);

/// Smallest s with m^s Elias.  The search is capped by the proved bound
/// ceil((F+1)/e) + 1, past which m^s lies in (t^e).
Z elias_index(const SemigroupPtr& H);
/// Smallest s with mu(m^s) = e.
Z ulrich_index(const SemigroupPtr& H);
/// Smallest s with val(m^s) inside g + H for some generator g: an exact
/// upper bound for the generalized Loewy length (monomial witnesses only;
/// the series oracle refines with randomized non-monomial witnesses).
Z gll_monomial(const SemigroupPtr& H);

/// Cohen-Macaulayness of the associated graded ring, decided by the
/// initial-form criterion (m^{s+1} : t^e) n R = m^s for all s up to the
/// stabilization index plus one confirmation step.
bool gr_is_cm(const SemigroupPtr& H);

/// For symmetric H (not N): the semigroup generated by H and its Frobenius
/// number.  Its Elias index is at most 2.
SemigroupPtr frobenius_extension(const SemigroupPtr& H);

struct GorensteinReport {
  bool delta_one = false;      // Auslander delta(R/I) = 1, iff I is Elias
  Z auslander_index = 0;       // ind(R), computed through the delta route; = eli(R)
  bool inverse_criterion = false;  // 0 in val(m I^{-1}), iff Elias
  bool trace_containment = true;   // I inside m tr(I) whenever Elias
  struct PrincipalColon {
    Z v;               // monomial x = t^v in I
    bool colon_elias;  // (x : I) Elias
    bool v_in_mI;      // v in val(mI); must equal colon_elias
  };
  std::vector<PrincipalColon> principal_checks;
};

/// Gorenstein-only reporting; raises NotGorenstein on non-symmetric H and
/// InternalDisagreement when any of the dual criteria disagree.
GorensteinReport gorenstein_report(const ValueIdeal& I);

}  // namespace elias

#include "elias/criteria.hpp"

#include <algorithm>
#include <string>

namespace elias {

namespace {

void require_mprimary(const ValueIdeal& I, const char* who) {
  if (!I.is_mprimary())
    throw NotMPrimary(std::string(who) + " needs an m-primary ideal, got " + I.to_string());
}

// incrementally computed powers of the maximal ideal
class PowerCache {
public:
  explicit PowerCache(SemigroupPtr H)
      : H_(std::move(H)), m_(ValueIdeal::maximal(H_)), pows_{ValueIdeal::unit(H_)} {}
  const ValueIdeal& get(Z s) {
    while (static_cast<Z>(pows_.size()) <= s) pows_.push_back(product(m_, pows_.back()));
    return pows_[static_cast<std::size_t>(s)];
  }
  const ValueIdeal& m() const { return m_; }

private:
  SemigroupPtr H_;
  ValueIdeal m_;
  std::vector<ValueIdeal> pows_;
};

constexpr Z kIndexSearchSlack = 8;

}  // namespace

Z type_of_quotient(const ValueIdeal& I) {
  require_mprimary(I, "type_of_quotient");
  const SemigroupPtr& H = I.ambient();
  ValueIdeal socle = intersect(colon(I, ValueIdeal::maximal(H)), ValueIdeal::unit(H));
  return quotient_length(socle, I);
}

Z type_of_ideal(const ValueIdeal& I) {
  const SemigroupPtr& H = I.ambient();
  ValueIdeal K = ValueIdeal::canonical(H);
  Z via_canonical = colon(K, I).mu();

  Z e = H->multiplicity();
  ValueIdeal xI = shift(I, e);
  ValueIdeal socle = intersect(colon(xI, ValueIdeal::maximal(H)), I);
  Z via_socle = quotient_length(socle, xI);

  if (via_canonical != via_socle)
    throw InternalDisagreement("type_of_ideal routes disagree on " + I.to_string() + ": mu(K:I)=" +
                               std::to_string(via_canonical) + ", socle route gives " +
                               std::to_string(via_socle));
  return via_canonical;
}

EliasResult is_elias(const ValueIdeal& I) {
  require_mprimary(I, "is_elias");
  const SemigroupPtr& H = I.ambient();
  const Z e = H->multiplicity();
  ValueIdeal R = ValueIdeal::unit(H);
  ValueIdeal m = ValueIdeal::maximal(H);
  ValueIdeal K = ValueIdeal::canonical(H);

  EliasResult r;
  Z ti = type_of_ideal(I);
  Z tq = type_of_quotient(I);
  if (ti < tq)
    throw InternalDisagreement("type(I) < type(R/I) on " + I.to_string());
  r.methods.type_equality = (ti == tq);

  ValueIdeal x_principal = ValueIdeal::from_generators(H, {e});
  r.methods.colon_te = subset_of(colon(shift(I, e), m), x_principal);

  ValueIdeal frac = colon(I, m);
  r.methods.fractional_colon = subset_of(frac, R);

  r.methods.canonical = subset_of(K, product(m, colon(K, I)));

  if (!r.methods.unanimous())
    throw InternalDisagreement(
        "Elias characterizations disagree on " + I.to_string() + ": type_equality=" +
        std::to_string(r.methods.type_equality) + " colon_te=" + std::to_string(r.methods.colon_te) +
        " fractional_colon=" + std::to_string(r.methods.fractional_colon) +
        " canonical=" + std::to_string(r.methods.canonical));

  r.elias = r.methods.fractional_colon;
  if (!r.elias) {
    Z hi = std::max(frac.stable_from(), H->frobenius() + 1);
    for (Z z = frac.min_value(); z < hi; ++z) {
      if (frac.has(z) && !H->contains(z)) {
        r.witness = z;
        break;
      }
    }
  }
  return r;
}

bool is_ulrich(const ValueIdeal& I) {
  require_mprimary(I, "is_ulrich");
  const SemigroupPtr& H = I.ambient();
  Z e = H->multiplicity();
  bool by_mu = (I.mu() == e);
  bool by_type = (type_of_ideal(I) == e);
  bool by_reduction = (shift(I, e) == product(ValueIdeal::maximal(H), I));
  if (by_mu != by_type || by_mu != by_reduction)
    throw InternalDisagreement("Ulrich criteria disagree on " + I.to_string());
  return by_mu;
}

bool is_mfull_te(const ValueIdeal& I) {
  require_mprimary(I, "is_mfull_te");
  const SemigroupPtr& H = I.ambient();
  ValueIdeal mI = product(ValueIdeal::maximal(H), I);
  ValueIdeal q = intersect(shift(mI, -H->multiplicity()), ValueIdeal::unit(H));
  return q == I;
}

bool is_full(const ValueIdeal& I) {
  require_mprimary(I, "is_full");
  const SemigroupPtr& H = I.ambient();
  ValueIdeal mI = product(ValueIdeal::maximal(H), I);
  ValueIdeal q = intersect(colon(mI, ValueIdeal::maximal(H)), ValueIdeal::unit(H));
  return q == I;
}

SmallMuCertificates elias_via_small_mu(const ValueIdeal& I) {
  require_mprimary(I, "elias_via_small_mu");
  const SemigroupPtr& H = I.ambient();
  Z e = H->multiplicity();
  SmallMuCertificates c;

  Z mu_I = I.mu();
  if (mu_I < e) {
    Z tq = type_of_quotient(I);
    if (tq >= e - 1) {
      c.direct = SmallMuCertificates::Direct{mu_I, e, tq};
      if (!is_elias(I).elias)
        throw InternalDisagreement("small-mu certificate for a non-Elias ideal " + I.to_string());
    }
  }

  ValueIdeal mI = product(ValueIdeal::maximal(H), I);
  Z mu_mI = mI.mu();
  if (mu_mI <= mu_I && mu_I == e - 1) {
    c.product = SmallMuCertificates::Product{mu_mI, mu_I};
    bool mI_elias = is_elias(mI).elias;
    ValueIdeal back = intersect(colon(mI, ValueIdeal::maximal(H)), ValueIdeal::unit(H));
    if (!mI_elias || back != I)
      throw InternalDisagreement("product small-mu certificate failed on " + I.to_string());
  }
  return c;
}

std::optional<UlrichCoverCertificate> elias_via_ulrich_cover(const ValueIdeal& I,
                                                             const ValueIdeal& J) {
  require_mprimary(I, "elias_via_ulrich_cover");
  if (!subset_of(I, J)) throw NotContained("I must be contained in the Ulrich cover J");
  if (!is_ulrich(J)) throw JNotUlrich("cover " + J.to_string() + " is not Ulrich");

  const SemigroupPtr& H = I.ambient();
  Z e = H->multiplicity();
  ValueIdeal xI = shift(I, e);
  ValueIdeal m = ValueIdeal::maximal(H);

  UlrichCoverCertificate cert;
  for (Z w : J.minimal_generators()) {
    ValueIdeal wm = shift(m, w);
    if (subset_of(wm, xI)) return std::nullopt;  // hypothesis fails for this generator
    Z witness = -1;
    for (Z z = wm.min_value(); z < std::max(wm.stable_from(), xI.stable_from()) + 1; ++z) {
      if (wm.has(z) && !xI.has(z)) {
        witness = z;
        break;
      }
    }
    cert.generator_witness.emplace_back(w, witness);
  }
  if (!is_elias(I).elias)
    throw InternalDisagreement("Ulrich-cover certificate for a non-Elias ideal " + I.to_string());
  return cert;
}

Z elias_index(const SemigroupPtr& H) {
  PowerCache pc(H);
  Z e = H->multiplicity();
  Z F = H->frobenius();
  Z bound = (F + 1 + e - 1) / e + 1;  // past this, m^s lies in (t^e)
  for (Z s = 1; s <= bound; ++s)
    if (is_elias(pc.get(s)).elias) return s;
  throw InternalDisagreement("Elias index search exceeded its provable bound on <" +
                             H->to_string() + ">");
}

Z ulrich_index(const SemigroupPtr& H) {
  PowerCache pc(H);
  Z e = H->multiplicity();
  Z cap = H->frobenius() + e + kIndexSearchSlack;
  for (Z s = 1; s <= cap; ++s)
    if (pc.get(s).mu() == e) return s;
  throw InternalDisagreement("Ulrich index search exceeded its bound on <" + H->to_string() + ">");
}

Z gll_monomial(const SemigroupPtr& H) {
  PowerCache pc(H);
  Z e = H->multiplicity();
  Z F = H->frobenius();
  Z bound = (F + 1 + e - 1) / e + 1;
  for (Z s = 1; s <= bound; ++s) {
    for (Z g : H->generators()) {
      if (subset_of(pc.get(s), ValueIdeal::from_generators(H, {g}))) return s;
    }
  }
  throw InternalDisagreement("monomial gll search exceeded its provable bound on <" +
                             H->to_string() + ">");
}

bool gr_is_cm(const SemigroupPtr& H) {
  PowerCache pc(H);
  Z e = H->multiplicity();
  Z cap = H->frobenius() + e + kIndexSearchSlack;
  // find the stabilization index: first s with val(m^{s+1}) = e + val(m^s)
  Z stab = -1;
  for (Z s = 0; s <= cap; ++s) {
    if (pc.get(s + 1) == shift(pc.get(s), e)) {
      stab = s;
      break;
    }
  }
  if (stab < 0)
    throw InternalDisagreement("reduction number search exceeded its bound on <" +
                               H->to_string() + ">");
  ValueIdeal R = ValueIdeal::unit(H);
  for (Z s = 0; s <= stab + 1; ++s) {
    ValueIdeal q = intersect(shift(pc.get(s + 1), -e), R);
    if (q != pc.get(s)) return false;
  }
  return true;
}

SemigroupPtr frobenius_extension(const SemigroupPtr& H) {
  if (H->is_regular())
    throw NotSymmetric("the Frobenius extension needs H distinct from N");
  if (!H->is_symmetric())
    throw NotSymmetric("<" + H->to_string() + "> has type " + std::to_string(H->cm_type()));
  std::vector<Z> gens = H->generators();
  gens.push_back(H->frobenius());
  return make_semigroup(std::move(gens));
}

GorensteinReport gorenstein_report(const ValueIdeal& I) {
  const SemigroupPtr& H = I.ambient();
  if (!H->is_symmetric())
    throw NotGorenstein("<" + H->to_string() + "> has type " + std::to_string(H->cm_type()));
  require_mprimary(I, "gorenstein_report");

  ValueIdeal R = ValueIdeal::unit(H);
  ValueIdeal m = ValueIdeal::maximal(H);
  GorensteinReport rep;

  bool elias = is_elias(I).elias;
  rep.delta_one = elias;

  // 1 in m I^{-1}, in monomial form
  rep.inverse_criterion = product(m, inverse(I)).has(0);
  if (rep.inverse_criterion != elias)
    throw InternalDisagreement("inverse criterion disagrees with the Elias verdict on " +
                               I.to_string());

  if (elias) {
    rep.trace_containment = subset_of(I, product(m, trace_ideal(I)));
    if (!rep.trace_containment)
      throw InternalDisagreement("Elias ideal not contained in m * tr(I): " + I.to_string());
  }

  // Auslander index through the delta route: first s with delta(R/m^s) = 1,
  // i.e. 0 in val(m * (m^s)^{-1}).  Must equal the Elias index.
  {
    PowerCache pc(H);
    Z e = H->multiplicity();
    Z bound = (H->frobenius() + e) / e + 2;
    Z ind = -1;
    for (Z s = 1; s <= bound; ++s) {
      if (product(m, inverse(pc.get(s))).has(0)) {
        ind = s;
        break;
      }
    }
    Z eli = elias_index(H);
    if (ind != eli)
      throw InternalDisagreement("Auslander index " + std::to_string(ind) +
                                 " differs from Elias index " + std::to_string(eli));
    rep.auslander_index = ind;
  }

  // x : I is Elias iff x in mI, checked for a minimal generator of I and
  // for a monomial known to lie in mI.
  ValueIdeal mI = product(m, I);
  std::vector<Z> picks = {I.minimal_generators().front(), I.min_value() + H->multiplicity()};
  for (Z v : picks) {
    ValueIdeal xi = colon(ValueIdeal::from_generators(H, {v}), I);
    if (!subset_of(xi, R))
      throw InternalDisagreement("x : I escaped R for x = t^" + std::to_string(v));
    bool colon_elias = xi.is_unit() ? false : is_elias(xi).elias;
    bool in_mI = mI.has(v);
    if (colon_elias != in_mI)
      throw InternalDisagreement("principal colon criterion failed for x = t^" +
                                 std::to_string(v));
    rep.principal_checks.push_back({v, colon_elias, in_mI});
  }
  return rep;
}

}  // namespace elias

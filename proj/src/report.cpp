#include "elias/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace elias {

using nlohmann::json;

bool operator==(const CriteriaReport& a, const CriteriaReport& b) {
  auto methods_eq = [](const EliasMethods& x, const EliasMethods& y) {
    return x.type_equality == y.type_equality && x.colon_te == y.colon_te &&
           x.fractional_colon == y.fractional_colon && x.canonical == y.canonical;
  };
  auto smallmu_eq = [](const SmallMuCertificates& x, const SmallMuCertificates& y) {
    if (x.direct.has_value() != y.direct.has_value()) return false;
    if (x.direct && (x.direct->mu != y.direct->mu || x.direct->e != y.direct->e ||
                     x.direct->type_quotient != y.direct->type_quotient))
      return false;
    if (x.product.has_value() != y.product.has_value()) return false;
    if (x.product && (x.product->mu_mI != y.product->mu_mI || x.product->mu_I != y.product->mu_I))
      return false;
    return true;
  };
  return a.ring_generators == b.ring_generators && a.e == b.e && a.ring_type == b.ring_type &&
         a.frobenius == b.frobenius && a.gorenstein == b.gorenstein &&
         a.ideal_generators == b.ideal_generators && a.mu == b.mu && a.order == b.order &&
         a.colength == b.colength && a.type_ideal == b.type_ideal &&
         a.type_quotient == b.type_quotient && a.elias == b.elias &&
         methods_eq(a.methods, b.methods) && a.ulrich == b.ulrich && a.mfull_te == b.mfull_te &&
         a.full == b.full && a.integrally_closed == b.integrally_closed &&
         a.extension_module == b.extension_module && a.eli == b.eli && a.ulr == b.ulr &&
         a.gll_mono == b.gll_mono && a.gll_upper_randomized == b.gll_upper_randomized &&
         a.elias_witness == b.elias_witness && smallmu_eq(a.small_mu, b.small_mu);
}

CriteriaReport build_report(const ValueIdeal& I, const ReportOptions& opts) {
  const SemigroupPtr& H = I.ambient();
  CriteriaReport r;
  r.ring_generators = H->generators();
  r.e = H->multiplicity();
  r.ring_type = H->cm_type();
  r.frobenius = H->frobenius();
  r.gorenstein = H->is_symmetric();

  r.ideal_generators = I.minimal_generators();
  r.mu = static_cast<Z>(r.ideal_generators.size());
  r.order = order(I);
  r.colength = quotient_length(ValueIdeal::unit(H), I);

  r.type_ideal = type_of_ideal(I);
  r.type_quotient = type_of_quotient(I);
  EliasResult er = is_elias(I);
  r.elias = er.elias;
  r.methods = er.methods;
  r.elias_witness = er.witness;

  r.ulrich = is_ulrich(I);
  r.mfull_te = is_mfull_te(I);
  r.full = is_full(I);
  r.integrally_closed = is_integrally_closed(I);
  r.extension_module = is_extension_module(I);

  r.eli = elias_index(H);
  r.ulr = ulrich_index(H);
  r.gll_mono = gll_monomial(H);
  r.small_mu = elias_via_small_mu(I);

  if (opts.gll_trials > 0) {
    Z vmax = ValueIdeal::power_of_maximal(H, r.gll_mono).minimal_generators().back();
    BranchedRingModel model = opts.truncation > 0
                                  ? BranchedRingModel::semigroup_ring(H, opts.truncation)
                                  : BranchedRingModel::semigroup_ring_for(H, vmax);
    auto rows = gll_randomized(model, r.gll_mono, opts.gll_trials, opts.seed);
    for (const GllRow& row : rows) {
      if (row.status == GllStatus::Success) {
        r.gll_upper_randomized = row.s;
        break;
      }
    }
  }
  return r;
}

namespace {

json to_json_obj(const CriteriaReport& r) {
  json j;
  j["ring"] = {{"generators", r.ring_generators}, {"e", r.e},         {"type", r.ring_type},
               {"frobenius", r.frobenius},        {"gorenstein", r.gorenstein}};
  j["ideal"] = {{"generators", r.ideal_generators},
                {"mu", r.mu},
                {"order", r.order},
                {"colength", r.colength}};
  j["type_ideal"] = r.type_ideal;
  j["type_quotient"] = r.type_quotient;
  j["elias"] = r.elias;
  j["elias_methods"] = {{"type_equality", r.methods.type_equality},
                        {"colon_te", r.methods.colon_te},
                        {"fractional_colon", r.methods.fractional_colon},
                        {"canonical", r.methods.canonical}};
  j["predicates"] = {{"ulrich", r.ulrich},
                     {"mfull_te", r.mfull_te},
                     {"full", r.full},
                     {"integrally_closed", r.integrally_closed},
                     {"extension_module", r.extension_module}};
  j["indices"] = {{"eli", r.eli},
                  {"ulr", r.ulr},
                  {"gll_monomial", r.gll_mono},
                  {"gll_upper_randomized",
                   r.gll_upper_randomized ? json(*r.gll_upper_randomized) : json(nullptr)}};
  json certs = json::object();
  if (r.elias_witness) certs["elias_witness"] = *r.elias_witness;
  if (r.small_mu.direct)
    certs["small_mu"] = {{"mu", r.small_mu.direct->mu},
                         {"e", r.small_mu.direct->e},
                         {"type_quotient", r.small_mu.direct->type_quotient}};
  if (r.small_mu.product)
    certs["small_mu_product"] = {{"mu_mI", r.small_mu.product->mu_mI},
                                 {"mu_I", r.small_mu.product->mu_I}};
  j["certificates"] = certs;
  return j;
}

}  // namespace

std::string report_to_json(const CriteriaReport& r) { return to_json_obj(r).dump(2); }

CriteriaReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  CriteriaReport r;
  r.ring_generators = j.at("ring").at("generators").get<std::vector<Z>>();
  r.e = j.at("ring").at("e").get<Z>();
  r.ring_type = j.at("ring").at("type").get<Z>();
  r.frobenius = j.at("ring").at("frobenius").get<Z>();
  r.gorenstein = j.at("ring").at("gorenstein").get<bool>();
  r.ideal_generators = j.at("ideal").at("generators").get<std::vector<Z>>();
  r.mu = j.at("ideal").at("mu").get<Z>();
  r.order = j.at("ideal").at("order").get<Z>();
  r.colength = j.at("ideal").at("colength").get<Z>();
  r.type_ideal = j.at("type_ideal").get<Z>();
  r.type_quotient = j.at("type_quotient").get<Z>();
  r.elias = j.at("elias").get<bool>();
  const json& m = j.at("elias_methods");
  r.methods.type_equality = m.at("type_equality").get<bool>();
  r.methods.colon_te = m.at("colon_te").get<bool>();
  r.methods.fractional_colon = m.at("fractional_colon").get<bool>();
  r.methods.canonical = m.at("canonical").get<bool>();
  const json& p = j.at("predicates");
  r.ulrich = p.at("ulrich").get<bool>();
  r.mfull_te = p.at("mfull_te").get<bool>();
  r.full = p.at("full").get<bool>();
  r.integrally_closed = p.at("integrally_closed").get<bool>();
  r.extension_module = p.at("extension_module").get<bool>();
  const json& ix = j.at("indices");
  r.eli = ix.at("eli").get<Z>();
  r.ulr = ix.at("ulr").get<Z>();
  r.gll_mono = ix.at("gll_monomial").get<Z>();
  if (!ix.at("gll_upper_randomized").is_null())
    r.gll_upper_randomized = ix.at("gll_upper_randomized").get<Z>();
  const json& c = j.at("certificates");
  if (c.contains("elias_witness")) r.elias_witness = c.at("elias_witness").get<Z>();
  if (c.contains("small_mu"))
    r.small_mu.direct = SmallMuCertificates::Direct{c.at("small_mu").at("mu").get<Z>(),
                                                    c.at("small_mu").at("e").get<Z>(),
                                                    c.at("small_mu").at("type_quotient").get<Z>()};
  if (c.contains("small_mu_product"))
    r.small_mu.product =
        SmallMuCertificates::Product{c.at("small_mu_product").at("mu_mI").get<Z>(),
                                     c.at("small_mu_product").at("mu_I").get<Z>()};
  return r;
}

namespace {

std::string join(const std::vector<Z>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

const char* yn(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string report_to_table(const CriteriaReport& r) {
  std::ostringstream os;
  os << "ring        <" << join(r.ring_generators) << ">  e=" << r.e << " type=" << r.ring_type
     << " F=" << r.frobenius << " gorenstein=" << yn(r.gorenstein) << "\n";
  os << "ideal       gens {" << join(r.ideal_generators) << "}  mu=" << r.mu
     << " order=" << r.order << " colength=" << r.colength << "\n";
  os << "type        type(I)=" << r.type_ideal << "  type(R/I)=" << r.type_quotient << "\n";
  os << "elias       " << yn(r.elias) << "   [type_equality=" << yn(r.methods.type_equality)
     << " colon_te=" << yn(r.methods.colon_te)
     << " fractional_colon=" << yn(r.methods.fractional_colon)
     << " canonical=" << yn(r.methods.canonical) << "]\n";
  if (r.elias_witness)
    os << "witness     t^" << *r.elias_witness << " lies in (I : m) but not in R\n";
  os << "predicates  ulrich=" << yn(r.ulrich) << " mfull_te=" << yn(r.mfull_te)
     << " full=" << yn(r.full) << " integrally_closed=" << yn(r.integrally_closed)
     << " extension_module=" << yn(r.extension_module) << "\n";
  os << "indices     eli=" << r.eli << " ulr=" << r.ulr << " gll_monomial=" << r.gll_mono;
  if (r.gll_upper_randomized) os << " gll_upper_randomized=" << *r.gll_upper_randomized;
  os << "\n";
  if (r.small_mu.direct)
    os << "certificate small-mu: mu=" << r.small_mu.direct->mu << " < e=" << r.small_mu.direct->e
       << ", type(R/I)=" << r.small_mu.direct->type_quotient << " >= e-1\n";
  if (r.small_mu.product)
    os << "certificate small-mu product: mu(mI)=" << r.small_mu.product->mu_mI
       << " <= mu(I)=" << r.small_mu.product->mu_I << " = e-1, so mI is Elias\n";
  return os.str();
}

AxisReport build_axis_report(const BranchedRingModel& model,
                             const std::vector<SeriesElement>& gens) {
  AxisReport r;
  r.branches = model.branches();
  r.truncation = model.truncation();
  for (const SeriesElement& g : gens) r.ideal_generators.push_back(g.to_string(model.branch_names()));
  EliasLinearResult er = is_elias_linear(model, gens);
  r.elias = er.elias;
  if (er.witness) r.witness = er.witness->to_string(model.branch_names());
  r.colength = colength_linear(model, gens);
  return r;
}

std::string axis_report_to_json(const AxisReport& r) {
  json j;
  j["ring"] = {{"model", "axis"}, {"branches", r.branches}};
  j["ideal"] = {{"generators", r.ideal_generators}};
  j["elias"] = r.elias;
  j["colength"] = r.colength;
  j["truncation"] = r.truncation;
  json certs = json::object();
  if (r.witness) certs["elias_witness"] = *r.witness;
  j["certificates"] = certs;
  return j.dump(2);
}

std::string axis_report_to_table(const AxisReport& r) {
  std::ostringstream os;
  os << "ring        axis:" << r.branches << "  (truncation " << r.truncation << ")\n";
  os << "ideal       gens {";
  for (std::size_t i = 0; i < r.ideal_generators.size(); ++i) {
    if (i) os << ", ";
    os << r.ideal_generators[i];
  }
  os << "}\n";
  os << "elias       " << yn(r.elias) << "\n";
  if (r.witness) os << "witness     " << *r.witness << " lies in (I : m) but not in R\n";
  os << "colength    " << r.colength << "\n";
  return os.str();
}

}  // namespace elias

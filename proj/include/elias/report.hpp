#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elias/criteria.hpp"
#include "elias/oracle.hpp"

namespace elias {

/// The full invariant/predicate bundle for one (ring, ideal) pair.
/// Serializes to a stable JSON object; parse(print(report)) == report.
struct CriteriaReport {
  // ring
  std::vector<Z> ring_generators;
  Z e = 0;
  Z ring_type = 0;
  Z frobenius = 0;
  bool gorenstein = false;
  // ideal
  std::vector<Z> ideal_generators;
  Z mu = 0;
  Z order = 0;
  Z colength = 0;

  Z type_ideal = 0;
  Z type_quotient = 0;
  bool elias = false;
  EliasMethods methods;

  bool ulrich = false, mfull_te = false, full = false;
  bool integrally_closed = false, extension_module = false;

  Z eli = 0, ulr = 0, gll_mono = 0;
  std::optional<Z> gll_upper_randomized;

  std::optional<Z> elias_witness;
  SmallMuCertificates small_mu;

  friend bool operator==(const CriteriaReport& a, const CriteriaReport& b);
};

struct ReportOptions {
  // trials > 0 runs the randomized gll search through the series oracle
  int gll_trials = 0;
  std::uint64_t seed = 12345;
  Z truncation = 0;  // 0 = model default
};

CriteriaReport build_report(const ValueIdeal& I, const ReportOptions& opts = {});

std::string report_to_json(const CriteriaReport& r);
CriteriaReport report_from_json(const std::string& text);
std::string report_to_table(const CriteriaReport& r);

/// Reduced report for axis rings (series-oracle path).
struct AxisReport {
  int branches = 0;
  std::vector<std::string> ideal_generators;
  bool elias = false;
  Z colength = 0;
  std::optional<std::string> witness;
  Z truncation = 0;
};

AxisReport build_axis_report(const BranchedRingModel& model,
                             const std::vector<SeriesElement>& gens);
std::string axis_report_to_json(const AxisReport& r);
std::string axis_report_to_table(const AxisReport& r);

}  // namespace elias

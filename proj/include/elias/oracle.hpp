#pragma once

#include <cstdint>
#include <optional>

#include "elias/series.hpp"
#include "elias/value_ideal.hpp"

namespace elias {

/// Basis of the subspace sum_i g_i * R inside the truncated window,
/// built by multiplying each generator by the spanning ring monomials and
/// row-reducing.  Throws NotInRing if a generator violates the ring
/// constraint.
linalg::RowBasis ideal_subspace(const BranchedRingModel& model,
                                const std::vector<SeriesElement>& gens);

struct EliasLinearResult {
  bool elias = false;
  std::optional<SeriesElement> witness;  // element of (I :_Q m) \ R on failure
  Z truncation_used = 0;
};

/// Decides whether the ideal generated by `gens` is Elias by computing a
/// basis of { q : q * g in I for every generator g of m } and testing its
/// containment in R.  With stability_check the whole computation is re-run
/// at doubled truncation; disagreement raises TruncationUnsound.
EliasLinearResult is_elias_linear(const BranchedRingModel& model,
                                  const std::vector<SeriesElement>& gens,
                                  bool stability_check = true);

/// l(R/I) inside the truncated window (dim R - dim I), stability-checked.
Z colength_linear(const BranchedRingModel& model, const std::vector<SeriesElement>& gens,
                  bool stability_check = true);

/// True iff every generator divides by x with quotient in R.  x must be a
/// non-zerodivisor (no branch identically zero), else ZeroDivisorWitness.
bool contains_in_principal(const BranchedRingModel& model,
                           const std::vector<SeriesElement>& gens, const SeriesElement& x,
                           bool stability_check = true);

enum class GllStatus { Success, NoWitnessFound };

struct GllRow {
  Z s = 0;
  GllStatus status = GllStatus::NoWitnessFound;
  // witness = sum of coeff[i] * (i-th generator of m); empty when no witness
  std::vector<long> witness_coeffs;
  int trial_index = -1;
};

/// For each s <= s_max, searches for x in m with m^s inside (x).  Trial k
/// for k < #generators tries the k-th generator alone; later trials draw
/// random nonzero coefficients from {-17..-1, 1..17}.  A Success row is an
/// exact, stability-checked upper-bound certificate for gll(R);
/// NoWitnessFound is only ever probabilistic evidence.  Deterministic and
/// order-independent given the seed (the generator is split per trial).
std::vector<GllRow> gll_randomized(const BranchedRingModel& model, Z s_max, int trials,
                                   std::uint64_t seed);

/// Generators of m^s for the model: minimal generator monomials of the
/// value set in the semigroup case, the elements a_i^s for axis rings.
std::vector<SeriesElement> power_generators(const BranchedRingModel& model, Z s);

/// Re-runs `verdict` at doubled truncation and compares.  Returns the base
/// verdict on agreement, raises TruncationUnsound otherwise.
template <class F>
bool stability_checked(const BranchedRingModel& model, F&& verdict) {
  bool base = verdict(model);
  bool doubled = verdict(model.with_truncation(2 * model.truncation()));
  if (base != doubled)
    throw TruncationUnsound("verdict at truncation " + std::to_string(model.truncation()) +
                            " differs from truncation " +
                            std::to_string(2 * model.truncation()));
  return base;
}

}  // namespace elias

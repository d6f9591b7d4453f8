#pragma once

#include <functional>
#include <string>
#include <vector>

#include "elias/semigroup.hpp"

namespace elias {

/// A relative (fractional) monomial ideal of k[[H]], represented by its
/// value set E: a bounded-below subset of Z with E + H contained in E.
/// Stored in canonical form as the minimum value `lo`, a boolean window
/// over [lo, stable) and the guarantee that every z >= stable is present.
/// Two ideals are equal iff their canonical forms coincide.
///
/// A monomial ideal equals the set of series with support in its value
/// set, so every ideal operation used here restricts to a value-set
/// operation (see docs/notes.md for the window-sizing lemma).
class ValueIdeal {
public:
  static ValueIdeal from_generators(SemigroupPtr H, std::vector<Z> vals);
  static ValueIdeal unit(SemigroupPtr H);     // R itself
  static ValueIdeal maximal(SemigroupPtr H);  // m = positive values of H
  static ValueIdeal power_of_maximal(SemigroupPtr H, Z s);
  /// Canonical fractional ideal K = { z : F - z not in H }, min value 0.
  static ValueIdeal canonical(SemigroupPtr H);
  /// Conductor { z : z >= F + 1 } of the integral closure k[[t]] in k[[H]].
  static ValueIdeal conductor(SemigroupPtr H);

  /// Builds from an arbitrary window predicate.  Caller guarantees that the
  /// set is H-closed and that every z >= hi is present.
  static ValueIdeal from_window(SemigroupPtr H, Z lo, Z hi,
                                const std::function<bool(Z)>& present);

  const SemigroupPtr& ambient() const { return H_; }
  Z min_value() const { return lo_; }
  Z stable_from() const { return stable_; }

  bool has(Z z) const {
    if (z < lo_) return false;
    if (z >= stable_) return true;
    return window_[static_cast<std::size_t>(z - lo_)];
  }

  bool is_integral() const;       // E contained in H
  bool is_unit() const;           // E = H
  bool is_mprimary() const;       // integral and proper
  bool is_final_segment() const { return stable_ == lo_; }

  /// E \ (E + M): the valuations of a minimal generating set.
  std::vector<Z> minimal_generators() const;
  Z mu() const { return static_cast<Z>(minimal_generators().size()); }

  std::string to_string() const;  // e.g. "8,9,10,12+"

  friend bool operator==(const ValueIdeal& a, const ValueIdeal& b) {
    return same_ambient(a.H_, b.H_) && a.lo_ == b.lo_ && a.stable_ == b.stable_ &&
           a.window_ == b.window_;
  }
  friend bool operator!=(const ValueIdeal& a, const ValueIdeal& b) { return !(a == b); }

private:
  ValueIdeal(SemigroupPtr H, Z lo, Z stable, std::vector<bool> window)
      : H_(std::move(H)), lo_(lo), stable_(stable), window_(std::move(window)) {}

  SemigroupPtr H_;
  Z lo_ = 0;
  Z stable_ = 0;
  std::vector<bool> window_;  // [lo_, stable_), canonical: back() is false if nonempty

  friend ValueIdeal shift(const ValueIdeal&, Z);
};

ValueIdeal sum(const ValueIdeal& I, const ValueIdeal& J);
ValueIdeal product(const ValueIdeal& I, const ValueIdeal& J);
ValueIdeal intersect(const ValueIdeal& I, const ValueIdeal& J);
/// Fractional colon I :_Q J = { z : z + g in E_I for every minimal generator
/// g of J }.  Testing minimal generators of J suffices because E_I is an
/// H-module and colons of support-defined ideals are support-defined.
ValueIdeal colon(const ValueIdeal& I, const ValueIdeal& J);
ValueIdeal shift(const ValueIdeal& I, Z h);
ValueIdeal inverse(const ValueIdeal& I);      // R :_Q I
ValueIdeal trace_ideal(const ValueIdeal& I);  // I * (R :_Q I)
ValueIdeal integral_closure(const ValueIdeal& I);
bool is_integrally_closed(const ValueIdeal& I);
/// True iff I is a module over the integral closure k[[t]], i.e. E+1 <= E.
bool is_extension_module(const ValueIdeal& I);

bool subset_of(const ValueIdeal& I, const ValueIdeal& J);
/// l(J/I); requires I contained in J, else NotContained.
Z quotient_length(const ValueIdeal& J, const ValueIdeal& I);
/// m-adic order: the largest s with E contained in val(m^s); 0 for R.
Z order(const ValueIdeal& I);
/// l(m^s / m^{s+1}).
Z hilbert_function(const SemigroupPtr& H, Z s);

}  // namespace elias

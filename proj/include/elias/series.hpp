#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "elias/linalg.hpp"
#include "elias/semigroup.hpp"

namespace elias {

using linalg::Rational;

/// An exact-rational tuple of truncated Laurent series, one per branch.
/// Exponent bounds are enforced by the owning BranchedRingModel.
struct SeriesElement {
  std::vector<std::map<Z, Rational>> coeffs;  // branch -> exponent -> coefficient

  explicit SeriesElement(int branches = 1) : coeffs(static_cast<std::size_t>(branches)) {}
  static SeriesElement monomial(int branches, int branch, Z exp, Rational c = 1);

  int branches() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  bool branch_zero(int b) const { return coeffs[static_cast<std::size_t>(b)].empty(); }
  void set(int branch, Z exp, Rational c);
  Rational get(int branch, Z exp) const;
  SeriesElement& add_scaled(const SeriesElement& other, const Rational& c);

  std::string to_string(const std::vector<std::string>& branch_names) const;

  friend bool operator==(const SeriesElement& a, const SeriesElement& b) {
    return a.coeffs == b.coeffs;
  }
};

/// A subring of a product of n truncated Laurent-series lines over Q:
/// either a numerical semigroup ring k[[H]] on a single line, or the axis
/// ring k[[a_1..a_n]]/(a_i a_j) embedded as tuples with equal constant
/// terms.  Exponents are kept in [-B, N); every verdict derived from a
/// model should be re-checked at truncation 2N (see oracle.hpp).
class BranchedRingModel {
public:
  enum class Kind { Semigroup, Axis };

  /// truncation = 0 picks the default 2(F+1) + 2*max(generator).
  /// enforce_minimum = false permits deliberately unsound truncations
  /// (the stability check is then the only guard).
  static BranchedRingModel semigroup_ring(SemigroupPtr H, Z truncation = 0,
                                          bool enforce_minimum = true);
  /// Sized for ideals whose generator values reach max_value:
  /// truncation 2(max_value + F + 1) + 2*max(generator).
  static BranchedRingModel semigroup_ring_for(SemigroupPtr H, Z max_value);
  static BranchedRingModel axis_ring(int branches, Z truncation, bool enforce_minimum = true);

  Kind kind() const { return kind_; }
  int branches() const { return branches_; }
  Z truncation() const { return truncation_; }
  Z lower_bound() const { return lower_bound_; }
  const SemigroupPtr& semigroup() const { return H_; }
  std::vector<std::string> branch_names() const;
  BranchedRingModel with_truncation(Z n) const;

  /// Generators of the maximal ideal: t^g for the semigroup generators, or
  /// the n coordinate elements a_i.
  std::vector<SeriesElement> maximal_ideal_generators() const;
  /// Largest exponent appearing in any maximal-ideal generator; the colon
  /// computation keeps this as a guard band below the truncation order.
  Z max_generator_degree() const;

  /// Structural membership test for the subring.
  bool in_ring(const SeriesElement& f) const { return in_ring_below(f, truncation_); }
  /// Same test restricted to exponents < limit (used after exact division,
  /// where only an initial segment of the quotient is determined).
  bool in_ring_below(const SeriesElement& f, Z limit) const;

  /// Componentwise product, truncated at N.  Throws InternalDisagreement if
  /// an exponent would fall below -B.
  SeriesElement multiply(const SeriesElement& a, const SeriesElement& b) const;

  /// Monomials spanning the ring inside the truncated window.
  std::vector<SeriesElement> ring_monomials() const;

  // flat coordinates over branch x exponent, exponents in [-B, N)
  int dim() const { return branches_ * static_cast<int>(truncation_ + lower_bound_); }
  int coord(int branch, Z exp) const;
  std::pair<int, Z> coord_info(int c) const;
  linalg::SparseVec to_vec(const SeriesElement& f) const;
  SeriesElement from_vec(const linalg::SparseVec& v) const;

private:
  Kind kind_ = Kind::Semigroup;
  int branches_ = 1;
  Z truncation_ = 0;
  Z lower_bound_ = 0;
  SemigroupPtr H_;
};

}  // namespace elias

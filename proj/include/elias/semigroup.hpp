#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "elias/errors.hpp"

namespace elias {

using Z = std::int64_t;

/// A numerical semigroup H: a cofinite additive submonoid of the
/// non-negative integers, stored as a membership table together with the
/// derived combinatorial data (Frobenius number, Apery sets, the
/// pseudo-Frobenius set whose size is the Cohen-Macaulay type of k[[H]]).
///
/// Instances are immutable after construction and safe to share across
/// threads.
class NumericalSemigroup {
public:
  /// Builds the semigroup generated by `gens` and minimizes the generating
  /// set.  Throws EmptyInput, InvalidGenerator, NotCofinite, InputTooLarge.
  static NumericalSemigroup from_generators(std::vector<Z> gens);

  /// Minimal generating set, sorted ascending.
  const std::vector<Z>& generators() const { return gens_; }
  Z multiplicity() const { return gens_.front(); }
  Z max_generator() const { return gens_.back(); }
  Z frobenius() const { return frobenius_; }
  Z genus() const { return genus_; }
  bool is_regular() const { return frobenius_ < 0; }  // H = N, k[[H]] = k[[t]]

  bool contains(Z z) const {
    if (z < 0) return false;
    if (static_cast<std::size_t>(z) >= members_.size()) return true;
    return members_[static_cast<std::size_t>(z)];
  }

  /// PF(H) = { z not in H : z + h in H for every positive h in H }.
  /// For H = N this is {-1}; the Frobenius number always belongs to it.
  const std::vector<Z>& pseudo_frobenius() const { return pf_; }
  Z cm_type() const { return static_cast<Z>(pf_.size()); }
  bool is_symmetric() const { return cm_type() == 1; }

  /// The m smallest elements of H, one in each residue class mod m.
  /// Throws NotMember unless m is a positive element of H.
  std::vector<Z> apery_set(Z m) const;

  std::string to_string() const;  // e.g. "4,5,11"

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }
  friend bool operator!=(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return !(a == b);
  }

private:
  NumericalSemigroup() = default;

  std::vector<Z> gens_;
  std::vector<bool> members_;  // indices [0, frobenius + max_generator + 1]
  Z frobenius_ = -1;
  Z genus_ = 0;
  std::vector<Z> pf_;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr make_semigroup(std::vector<Z> gens) {
  return std::make_shared<const NumericalSemigroup>(
      NumericalSemigroup::from_generators(std::move(gens)));
}

inline bool same_ambient(const SemigroupPtr& a, const SemigroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace elias

#include "elias/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace elias {

namespace {

// Safe table cap: (sum of the two largest generators) * multiplicity.
// This dominates the Frobenius number, since F <= (e-1)(g_max-1) - 1.
Z table_bound(const std::vector<Z>& sorted_gens) {
  Z top = sorted_gens.back();
  Z second = sorted_gens.size() >= 2 ? sorted_gens[sorted_gens.size() - 2] : top;
  return (top + second) * sorted_gens.front();
}

constexpr Z kMaxTableEntries = 200'000'000;

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Z> gens) {
  if (gens.empty()) throw EmptyInput("generator list is empty");
  for (Z g : gens) {
    if (g < 1) throw InvalidGenerator("generators must be >= 1, got " + std::to_string(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Z g = 0;
  for (Z v : gens) g = std::gcd(g, v);
  if (g != 1)
    throw NotCofinite("gcd of generators is " + std::to_string(g) + ", semigroup not cofinite");

  Z bound = table_bound(gens);
  if (bound + 2 > kMaxTableEntries)
    throw InputTooLarge("membership table would need " + std::to_string(bound + 2) + " entries");

  // Forward dynamic programming over [0, bound].
  std::vector<bool> table(static_cast<std::size_t>(bound) + 1, false);
  table[0] = true;
  for (Z z = 1; z <= bound; ++z) {
    for (Z gen : gens) {
      if (gen > z) break;
      if (table[static_cast<std::size_t>(z - gen)]) {
        table[static_cast<std::size_t>(z)] = true;
        break;
      }
    }
  }

  NumericalSemigroup H;
  H.frobenius_ = -1;
  for (Z z = bound; z >= 0; --z) {
    if (!table[static_cast<std::size_t>(z)]) {
      H.frobenius_ = z;
      break;
    }
  }
  H.genus_ = 0;
  for (Z z = 0; z <= H.frobenius_; ++z)
    if (!table[static_cast<std::size_t>(z)]) ++H.genus_;

  // Minimal generators: positive elements with no decomposition into two
  // positive elements.  They all lie in (0, F + multiplicity].
  Z mult = gens.front();
  H.gens_.clear();
  for (Z z = 1; z <= H.frobenius_ + mult; ++z) {
    if (!table[static_cast<std::size_t>(z)]) continue;
    bool decomposable = false;
    for (Z a = 1; a + a <= z; ++a) {
      if (table[static_cast<std::size_t>(a)] && table[static_cast<std::size_t>(z - a)]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) H.gens_.push_back(z);
  }
  if (H.gens_.empty()) H.gens_.push_back(1);  // H = N

  // Trim the table to [0, F + max_generator + 1].
  Z keep = H.frobenius_ + H.gens_.back() + 2;
  table.resize(static_cast<std::size_t>(std::max<Z>(keep, 1)));
  H.members_ = std::move(table);

  if (H.is_regular()) {
    H.pf_ = {-1};
  } else {
    for (Z z = 1; z <= H.frobenius_; ++z) {
      if (H.contains(z)) continue;
      bool pf = true;
      for (Z gen : H.gens_) {
        if (!H.contains(z + gen)) {
          pf = false;
          break;
        }
      }
      if (pf) H.pf_.push_back(z);
    }
  }
  return H;
}

std::vector<Z> NumericalSemigroup::apery_set(Z m) const {
  if (m <= 0 || !contains(m))
    throw NotMember(std::to_string(m) + " is not a positive element of the semigroup");
  if (m > kMaxTableEntries) throw InputTooLarge("apery modulus too large");
  std::vector<Z> result;
  result.reserve(static_cast<std::size_t>(m));
  for (Z r = 0; r < m; ++r) {
    for (Z z = r;; z += m) {
      if (contains(z)) {
        result.push_back(z);
        break;
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ',';
    os << gens_[i];
  }
  return os.str();
}

}  // namespace elias

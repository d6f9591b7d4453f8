#include "elias/value_ideal.hpp"

#include <algorithm>
#include <sstream>

namespace elias {

namespace {

void require_same_ambient(const ValueIdeal& a, const ValueIdeal& b) {
  if (!same_ambient(a.ambient(), b.ambient()))
    throw AmbientMismatch("operands live over different semigroups");
}

}  // namespace

ValueIdeal ValueIdeal::from_window(SemigroupPtr H, Z lo, Z hi,
                                   const std::function<bool(Z)>& present) {
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(std::max<Z>(hi - lo, 0)));
  for (Z z = lo; z < hi; ++z) bits.push_back(present(z));

  Z first = lo;
  std::size_t skip = 0;
  while (skip < bits.size() && !bits[skip]) ++skip;
  first = lo + static_cast<Z>(skip);

  Z stable = hi;
  std::size_t len = bits.size() - skip;
  while (len > 0 && bits[skip + len - 1]) {
    --stable;
    --len;
  }
  std::vector<bool> window(bits.begin() + static_cast<std::ptrdiff_t>(skip),
                           bits.begin() + static_cast<std::ptrdiff_t>(skip + len));
  if (first > stable) first = stable;  // empty window: final segment
  return ValueIdeal(std::move(H), first, stable, std::move(window));
}

ValueIdeal ValueIdeal::from_generators(SemigroupPtr H, std::vector<Z> vals) {
  if (vals.empty()) throw EmptyGenerators("ideal needs at least one generator value");
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  Z lo = vals.front();
  Z hi = vals.back() + H->frobenius() + 1;
  const NumericalSemigroup& S = *H;
  return from_window(H, lo, std::max(lo, hi), [&](Z z) {
    for (Z a : vals) {
      if (a > z) return false;
      if (S.contains(z - a)) return true;
    }
    return false;
  });
}

ValueIdeal ValueIdeal::unit(SemigroupPtr H) { return from_generators(std::move(H), {0}); }

ValueIdeal ValueIdeal::maximal(SemigroupPtr H) {
  std::vector<Z> gens = H->generators();
  return from_generators(std::move(H), std::move(gens));
}

ValueIdeal ValueIdeal::power_of_maximal(SemigroupPtr H, Z s) {
  if (s < 0) throw InvalidGenerator("negative power of the maximal ideal");
  ValueIdeal acc = unit(H);
  if (s == 0) return acc;
  ValueIdeal m = maximal(H);
  for (Z i = 0; i < s; ++i) acc = product(m, acc);
  return acc;
}

ValueIdeal ValueIdeal::canonical(SemigroupPtr H) {
  Z F = H->frobenius();
  const NumericalSemigroup& S = *H;
  return from_window(H, 0, std::max<Z>(0, F + 1), [&](Z z) { return !S.contains(F - z); });
}

ValueIdeal ValueIdeal::conductor(SemigroupPtr H) {
  Z F = H->frobenius();
  return from_window(H, F + 1, F + 1, [](Z) { return true; });
}

bool ValueIdeal::is_integral() const {
  if (lo_ < 0) return false;
  if (stable_ <= H_->frobenius()) return false;  // tail would hit a gap
  for (Z z = lo_; z < stable_; ++z)
    if (has(z) && !H_->contains(z)) return false;
  return true;
}

bool ValueIdeal::is_unit() const { return *this == unit(H_); }

bool ValueIdeal::is_mprimary() const { return lo_ >= 1 && is_integral(); }

std::vector<Z> ValueIdeal::minimal_generators() const {
  // Minimal generators lie below stable + max_generator: past that point,
  // z - max_generator is already in the stable tail.
  std::vector<Z> gens;
  Z hi = stable_ + H_->max_generator();
  for (Z z = lo_; z < hi; ++z) {
    if (!has(z)) continue;
    bool reducible = false;
    for (Z g : H_->generators()) {
      if (has(z - g)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) gens.push_back(z);
  }
  return gens;
}

std::string ValueIdeal::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Z z = lo_; z < stable_; ++z) {
    if (!has(z)) continue;
    if (!first) os << ',';
    os << z;
    first = false;
  }
  if (!first) os << ',';
  os << stable_ << '+';
  return os.str();
}

ValueIdeal sum(const ValueIdeal& I, const ValueIdeal& J) {
  require_same_ambient(I, J);
  Z lo = std::min(I.min_value(), J.min_value());
  Z hi = std::min(I.stable_from(), J.stable_from());
  return ValueIdeal::from_window(I.ambient(), lo, std::max(lo, hi),
                                 [&](Z z) { return I.has(z) || J.has(z); });
}

ValueIdeal product(const ValueIdeal& I, const ValueIdeal& J) {
  require_same_ambient(I, J);
  // E_I + E_J is generated by sums of minimal generators.
  std::vector<Z> gi = I.minimal_generators();
  std::vector<Z> gj = J.minimal_generators();
  std::vector<Z> sums;
  sums.reserve(gi.size() * gj.size());
  for (Z a : gi)
    for (Z b : gj) sums.push_back(a + b);
  return ValueIdeal::from_generators(I.ambient(), std::move(sums));
}

ValueIdeal intersect(const ValueIdeal& I, const ValueIdeal& J) {
  require_same_ambient(I, J);
  Z lo = std::max(I.min_value(), J.min_value());
  Z hi = std::max(I.stable_from(), J.stable_from());
  return ValueIdeal::from_window(I.ambient(), lo, std::max(lo, hi),
                                 [&](Z z) { return I.has(z) && J.has(z); });
}

ValueIdeal colon(const ValueIdeal& I, const ValueIdeal& J) {
  require_same_ambient(I, J);
  std::vector<Z> gens = J.minimal_generators();
  Z gmin = gens.front();
  Z lo = I.min_value() - gmin;
  Z hi = I.stable_from() - gmin;
  return ValueIdeal::from_window(I.ambient(), lo, std::max(lo, hi), [&](Z z) {
    for (Z g : gens)
      if (!I.has(z + g)) return false;
    return true;
  });
}

ValueIdeal shift(const ValueIdeal& I, Z h) {
  return ValueIdeal(I.H_, I.lo_ + h, I.stable_ + h, I.window_);
}

ValueIdeal inverse(const ValueIdeal& I) { return colon(ValueIdeal::unit(I.ambient()), I); }

ValueIdeal trace_ideal(const ValueIdeal& I) { return product(I, inverse(I)); }

ValueIdeal integral_closure(const ValueIdeal& I) {
  if (!I.is_integral()) throw NotIntegral("integral closure needs E contained in H");
  Z lo = I.min_value();
  Z hi = std::max(lo, I.ambient()->frobenius() + 1);
  const NumericalSemigroup& S = *I.ambient();
  return ValueIdeal::from_window(I.ambient(), lo, hi, [&](Z z) { return S.contains(z); });
}

bool is_integrally_closed(const ValueIdeal& I) { return I == integral_closure(I); }

bool is_extension_module(const ValueIdeal& I) { return I.is_final_segment(); }

bool subset_of(const ValueIdeal& I, const ValueIdeal& J) {
  require_same_ambient(I, J);
  Z hi = std::max(I.stable_from(), J.stable_from());
  for (Z z = I.min_value(); z < hi; ++z)
    if (I.has(z) && !J.has(z)) return false;
  return true;
}

Z quotient_length(const ValueIdeal& J, const ValueIdeal& I) {
  require_same_ambient(I, J);
  Z lo = std::min(I.min_value(), J.min_value());
  Z hi = std::max(I.stable_from(), J.stable_from());
  Z count = 0;
  for (Z z = lo; z < hi; ++z) {
    bool inI = I.has(z), inJ = J.has(z);
    if (inI && !inJ)
      throw NotContained("quotient_length(J, I): value " + std::to_string(z) +
                         " of I is missing from J");
    if (inJ && !inI) ++count;
  }
  return count;
}

Z order(const ValueIdeal& I) {
  if (!I.is_integral()) throw NotIntegral("order is defined for ideals contained in R");
  ValueIdeal power = ValueIdeal::unit(I.ambient());
  ValueIdeal m = ValueIdeal::maximal(I.ambient());
  Z s = 0;
  while (true) {
    ValueIdeal next = product(m, power);
    if (!subset_of(I, next)) return s;
    power = next;
    ++s;
  }
}

Z hilbert_function(const SemigroupPtr& H, Z s) {
  ValueIdeal ms = ValueIdeal::power_of_maximal(H, s);
  ValueIdeal next = product(ValueIdeal::maximal(H), ms);
  return quotient_length(ms, next);
}

}  // namespace elias

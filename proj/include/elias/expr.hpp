#pragma once

#include <string>
#include <variant>
#include <vector>

#include "elias/series.hpp"
#include "elias/value_ideal.hpp"

namespace elias {

/// Abstract syntax for the ideal-expression language:
///   R | m | mpow:S | gens:a,b,... | canonical | conductor
///   | trace(E) | inverse(E) | closure(E)
///   | colon(E,E) | product(E,E) | sum(E,E)
/// Whitespace-insensitive; mpow:S is sugar for the S-fold product of m.
struct IdealExpr {
  enum class Node {
    Unit,
    Maximal,
    MPow,
    Gens,
    Canonical,
    Conductor,
    Trace,
    Inverse,
    Closure,
    Colon,
    Product,
    Sum,
  };
  Node node = Node::Unit;
  Z power = 0;            // MPow
  std::vector<Z> values;  // Gens
  std::vector<IdealExpr> children;
};

IdealExpr parse_ideal_expr(const std::string& text);
ValueIdeal eval_ideal_expr(const IdealExpr& e, const SemigroupPtr& H);
ValueIdeal eval_ideal_expr(const std::string& text, const SemigroupPtr& H);

/// Series in CLI syntax: `t^4 + 2*t^5` over semigroup models,
/// `a - b` over axis models (branch names a, b, c, ...).  Coefficients are
/// integers or fractions p/q.
SeriesElement parse_series(const std::string& text, const BranchedRingModel& model);
std::vector<SeriesElement> parse_series_list(const std::string& text,
                                             const BranchedRingModel& model);

/// A ring spec is either a comma-separated generator list or `axis:n`.
struct RingSpec {
  bool axis = false;
  int branches = 0;        // axis
  std::vector<Z> gens;     // semigroup
};
RingSpec parse_ring_spec(const std::string& text);

/// For axis rings the ideal grammar is restricted to `gens:` with series
/// syntax; returns the generator list.
std::vector<SeriesElement> parse_axis_ideal(const std::string& text,
                                            const BranchedRingModel& model);

}  // namespace elias

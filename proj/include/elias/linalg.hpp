#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace elias::linalg {

using Rational = mpq_class;

/// mpq_class(n, d) does not canonicalize on its own; always build fractions
/// through this helper.
inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Sparse row over Q: (column, coefficient) pairs, sorted by column,
/// no zero coefficients.
struct SparseVec {
  std::vector<std::pair<int, Rational>> terms;

  bool empty() const { return terms.empty(); }
  int leading_col() const { return terms.front().first; }
  const Rational* coeff(int col) const;
  void push(int col, Rational c) { terms.emplace_back(col, std::move(c)); }

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.terms == b.terms; }
};

/// dst + c * src, merging sorted term lists.
SparseVec axpy(const SparseVec& dst, const Rational& c, const SparseVec& src);
/// Scales so the leading coefficient becomes 1.
void normalize_leading(SparseVec& v);

/// Reduced echelon basis of a row span, maintained incrementally.
/// Rows are keyed by pivot column; each pivot has coefficient 1 and is
/// eliminated from every other row, so the basis is the canonical RREF of
/// whatever was inserted.
class RowBasis {
public:
  /// Reduces `row` against the basis and inserts the residual if nonzero.
  /// Returns true when the rank grew.
  bool insert(SparseVec row);
  /// Residual of v modulo the span.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

private:
  std::map<int, SparseVec> rows_;  // pivot column -> row
};

/// Canonical reduced row echelon form (serial reference implementation).
std::vector<SparseVec> rref_serial(std::vector<SparseVec> rows);
/// Same result, computed by OpenMP Gauss-Jordan sweeps.  RREF of a span is
/// unique, so this must agree with rref_serial bit for bit.
std::vector<SparseVec> rref_parallel(std::vector<SparseVec> rows);
/// Dispatches to the parallel kernel for large inputs.
std::vector<SparseVec> rref(std::vector<SparseVec> rows);

/// Basis of { q in Q^dim : row . q = 0 for every row }.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int dim);

Rational dot(const SparseVec& a, const SparseVec& b);

}  // namespace elias::linalg

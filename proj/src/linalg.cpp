#include "elias/linalg.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace elias::linalg {

const Rational* SparseVec::coeff(int col) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), col,
                             [](const auto& t, int c) { return t.first < c; });
  if (it == terms.end() || it->first != col) return nullptr;
  return &it->second;
}

SparseVec axpy(const SparseVec& dst, const Rational& c, const SparseVec& src) {
  SparseVec out;
  out.terms.reserve(dst.terms.size() + src.terms.size());
  std::size_t i = 0, j = 0;
  while (i < dst.terms.size() || j < src.terms.size()) {
    if (j == src.terms.size() ||
        (i < dst.terms.size() && dst.terms[i].first < src.terms[j].first)) {
      out.terms.push_back(dst.terms[i++]);
    } else if (i == dst.terms.size() || src.terms[j].first < dst.terms[i].first) {
      Rational v = c * src.terms[j].second;
      if (v != 0) out.push(src.terms[j].first, std::move(v));
      ++j;
    } else {
      Rational v = dst.terms[i].second + c * src.terms[j].second;
      if (v != 0) out.push(dst.terms[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize_leading(SparseVec& v) {
  if (v.empty()) return;
  Rational lead = v.terms.front().second;
  if (lead == 1) return;
  for (auto& [col, c] : v.terms) c /= lead;
}

Rational dot(const SparseVec& a, const SparseVec& b) {
  Rational acc = 0;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    if (a.terms[i].first < b.terms[j].first)
      ++i;
    else if (b.terms[j].first < a.terms[i].first)
      ++j;
    else
      acc += a.terms[i++].second * b.terms[j++].second;
  }
  return acc;
}

SparseVec RowBasis::reduce(SparseVec v) const {
  // Basis rows only have entries at their pivot and at non-pivot columns,
  // so one forward sweep suffices.
  std::size_t i = 0;
  while (i < v.terms.size()) {
    auto it = rows_.find(v.terms[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    v = axpy(v, -v.terms[i].second, it->second);
    // columns before position i are untouched (they are non-pivot)
  }
  return v;
}

bool RowBasis::insert(SparseVec row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  normalize_leading(row);
  int pivot = row.leading_col();
  for (auto& [p, r] : rows_) {
    const Rational* c = r.coeff(pivot);
    if (c) r = axpy(r, -*c, row);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<SparseVec> rref_serial(std::vector<SparseVec> rows) {
  RowBasis basis;
  for (auto& r : rows) basis.insert(std::move(r));
  std::vector<SparseVec> out;
  out.reserve(basis.rank());
  for (const auto& [p, r] : basis.rows()) out.push_back(r);
  return out;
}

std::vector<SparseVec> rref_parallel(std::vector<SparseVec> rows) {
  // Chunked online elimination.  Each chunk is reduced against the current
  // basis in parallel (the basis is read-only there); the few nonzero
  // residuals are then inserted serially, which also handles reductions
  // between rows of the same chunk.  Insertion order matches rref_serial,
  // and the RREF of a span is unique in any case.
  constexpr std::size_t kChunk = 64;
  RowBasis basis;
  std::size_t begin = 0;
  while (begin < rows.size()) {
    const std::size_t end = std::min(begin + kChunk, rows.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (std::size_t i = begin; i < end; ++i) rows[i] = basis.reduce(std::move(rows[i]));
    for (std::size_t i = begin; i < end; ++i)
      if (!rows[i].empty()) basis.insert(std::move(rows[i]));
    begin = end;
  }

  std::vector<SparseVec> out;
  out.reserve(basis.rank());
  for (const auto& [p, r] : basis.rows()) out.push_back(r);
  return out;
}

std::vector<SparseVec> rref(std::vector<SparseVec> rows) {
#ifdef _OPENMP
  if (rows.size() >= 64 && omp_get_max_threads() > 1) return rref_parallel(std::move(rows));
#endif
  return rref_serial(std::move(rows));
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int dim) {
  std::vector<SparseVec> basis = rref(rows);
  std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
  for (const auto& r : basis) is_pivot[static_cast<std::size_t>(r.leading_col())] = true;

  std::vector<SparseVec> out;
  for (int f = 0; f < dim; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<std::pair<int, Rational>> terms;
    terms.emplace_back(f, 1);
    for (const auto& r : basis) {
      const Rational* c = r.coeff(f);
      if (c) terms.emplace_back(r.leading_col(), -*c);
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec v;
    v.terms = std::move(terms);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace elias::linalg

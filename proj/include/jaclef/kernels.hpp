#pragma once

// Elimination kernels over a field backend (ModP or QQ). Each kernel has a
// plain serial reference version, kept for testing and benchmarking, and an
// OpenMP version used by the library.

#include <algorithm>
#include <utility>
#include <vector>

#include <omp.h>

#include "jaclef/backend.hpp"
#include "jaclef/debug.hpp"
#include "jaclef/errors.hpp"

namespace jaclef {

template <class F>
using DenseMatrix = std::vector<std::vector<typename F::Elem>>;

template <class F>
using SparseRow = std::vector<std::pair<int, typename F::Elem>>;

/// Serial Gauss-Jordan. Leaves the nonzero rows of the reduced row echelon
/// form in `a` and returns the pivot columns.
template <class F>
std::vector<int> dense_rref_serial(const F& f, DenseMatrix<F>& a, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && f.is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    auto s = f.inv(a[r][c]);
    for (int j = c; j < ncols; ++j) a[r][j] = f.mul(a[r][j], s);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || f.is_zero(a[i][c])) continue;
      auto factor = a[i][c];
      for (int j = c; j < ncols; ++j) a[i][j] = f.submul(a[i][j], factor, a[r][j]);
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

/// OpenMP elimination. Row updates run in parallel and only touch the
/// nonzero positions of the pivot row. With `reduced` false only rows below
/// the pivot are cleared (row echelon form).
template <class F>
std::vector<int> dense_rref_omp(const F& f, DenseMatrix<F>& a, int ncols, bool reduced = true) {
  std::vector<int> pivots;
  std::vector<int> support;
  const std::ptrdiff_t nrows = static_cast<std::ptrdiff_t>(a.size());
  std::ptrdiff_t r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    std::ptrdiff_t piv = r;
    while (piv < nrows && f.is_zero(a[piv][c])) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[r]);
    auto s = f.inv(a[r][c]);
    support.clear();
    for (int j = c; j < ncols; ++j) {
      if (f.is_zero(a[r][j])) continue;
      a[r][j] = f.mul(a[r][j], s);
      support.push_back(j);
    }
    const auto& prow = a[r];
    const std::ptrdiff_t start = reduced ? 0 : r + 1;
#pragma omp parallel for schedule(static) if (nrows - start > 64)
    for (std::ptrdiff_t i = start; i < nrows; ++i) {
      if (i == r || f.is_zero(a[i][c])) continue;
      auto factor = a[i][c];
      auto& row = a[i];
      for (int j : support) row[j] = f.submul(row[j], factor, prow[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

/// Triangular basis of a row space: one monic row per pivot column, each
/// row zero before its pivot. Pivot columns give a canonical complement, so
/// reduce() computes a unique normal form modulo the row space.
template <class F>
struct Echelon {
  using Elem = typename F::Elem;

  int ncols = 0;
  std::vector<int> row_of_col;  // -1 for non-pivot columns
  std::vector<SparseRow<F>> rows;

  int rank() const { return static_cast<int>(rows.size()); }
  bool is_pivot(int c) const { return row_of_col[c] >= 0; }

  /// Sweeps pivot columns left to right; afterwards v vanishes on every pivot.
  void reduce(const F& f, std::vector<Elem>& v) const {
    for (int c = 0; c < ncols; ++c) {
      if (f.is_zero(v[c])) continue;
      int r = row_of_col[c];
      if (r < 0) continue;
      auto factor = v[c];
      for (const auto& [j, x] : rows[r]) v[j] = f.submul(v[j], factor, x);
    }
  }
};

template <class F>
void normalize_row(const F& f, SparseRow<F>& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow<F> out;
  out.reserve(row.size());
  for (auto& [c, x] : row) {
    if (!out.empty() && out.back().first == c) {
      out.back().second = f.add(out.back().second, x);
    } else {
      out.emplace_back(c, std::move(x));
    }
  }
  std::erase_if(out, [&](const auto& e) { return f.is_zero(e.second); });
  row = std::move(out);
}

template <class F>
void make_monic(const F& f, SparseRow<F>& row) {
  auto s = f.inv(row.front().second);
  for (auto& e : row) e.second = f.mul(e.second, s);
}

/// Echelon basis of the span of sparse rows. Rows with distinct leading
/// columns become pivots without elimination; the remaining rows are reduced
/// against them (in parallel), and only that residual block is eliminated
/// densely.
template <class F>
Echelon<F> structured_echelon(const F& f, std::vector<SparseRow<F>> input, int ncols,
                              bool parallel = true) {
  using Elem = typename F::Elem;
  Echelon<F> ech;
  ech.ncols = ncols;
  ech.row_of_col.assign(ncols, -1);

  for (auto& row : input) normalize_row(f, row);
  std::erase_if(input, [](const auto& row) { return row.empty(); });

  // stage 1: sparsest row per leading column becomes its pivot
  std::vector<int> chosen(ncols, -1);
  for (std::size_t i = 0; i < input.size(); ++i) {
    int lead = input[i].front().first;
    if (chosen[lead] < 0 || input[i].size() < input[chosen[lead]].size()) {
      chosen[lead] = static_cast<int>(i);
    }
  }
  std::vector<char> used(input.size(), 0);
  for (int c = 0; c < ncols; ++c) {
    if (chosen[c] < 0) continue;
    used[chosen[c]] = 1;
    SparseRow<F> row = std::move(input[chosen[c]]);
    make_monic(f, row);
    ech.row_of_col[c] = ech.rank();
    ech.rows.push_back(std::move(row));
  }
  std::vector<SparseRow<F>> pending;
  for (std::size_t i = 0; i < input.size(); ++i)
    if (!used[i]) pending.push_back(std::move(input[i]));
  if (pending.empty()) return ech;

  // stage 2: reduce the rest against the stage-1 pivots
  std::vector<int> free_cols;
  std::vector<int> free_pos(ncols, -1);
  for (int c = 0; c < ncols; ++c) {
    if (ech.row_of_col[c] < 0) {
      free_pos[c] = static_cast<int>(free_cols.size());
      free_cols.push_back(c);
    }
  }
  const int nfree = static_cast<int>(free_cols.size());
  DenseMatrix<F> residual(pending.size(), std::vector<Elem>(nfree, f.zero()));
  const std::ptrdiff_t npending = static_cast<std::ptrdiff_t>(pending.size());
#pragma omp parallel if (parallel && npending > 16)
  {
    std::vector<Elem> acc(ncols, f.zero());
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < npending; ++i) {
      std::fill(acc.begin(), acc.end(), f.zero());
      for (const auto& [c, x] : pending[i]) acc[c] = x;
      ech.reduce(f, acc);
      for (int k = 0; k < nfree; ++k) residual[i][k] = acc[free_cols[k]];
    }
  }

  // stage 3: dense elimination of the residual block
  std::vector<int> piv = parallel ? dense_rref_omp(f, residual, nfree, false)
                                  : dense_rref_serial(f, residual, nfree);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    SparseRow<F> row;
    for (int k = piv[r]; k < nfree; ++k) {
      if (!f.is_zero(residual[r][k])) row.emplace_back(free_cols[k], residual[r][k]);
    }
    make_monic(f, row);
    ech.row_of_col[free_cols[piv[r]]] = ech.rank();
    ech.rows.push_back(std::move(row));
  }
  return ech;
}

/// Basis of {x : A x = 0} for a dense constraint matrix with ncols unknowns.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(const F& f, DenseMatrix<F> a, int ncols,
                                                     bool parallel = true) {
  DenseMatrix<F> original;
  if (debug_checks()) original = a;
  std::vector<int> piv = parallel ? dense_rref_omp(f, a, ncols, true)
                                  : dense_rref_serial(f, a, ncols);
  std::vector<int> is_piv(ncols, -1);
  for (std::size_t r = 0; r < piv.size(); ++r) is_piv[piv[r]] = static_cast<int>(r);
  std::vector<std::vector<typename F::Elem>> basis;
  for (int c = 0; c < ncols; ++c) {
    if (is_piv[c] >= 0) continue;
    std::vector<typename F::Elem> v(ncols, f.zero());
    v[c] = f.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.neg(a[r][c]);
    basis.push_back(std::move(v));
  }
  if (debug_checks()) {
    note_debug_check();
    if (piv.size() + basis.size() != static_cast<std::size_t>(ncols)) {
      throw Error("rank-nullity violated in nullspace");
    }
    for (const auto& v : basis) {
      for (const auto& row : original) {
        auto s = f.zero();
        for (int j = 0; j < ncols; ++j) s = f.add(s, f.mul(row[j], v[j]));
        if (!f.is_zero(s)) throw Error("nullspace vector fails exact verification");
      }
    }
  }
  return basis;
}

}  // namespace jaclef

#pragma once

// Exact sparse linear algebra over a field type T (Rat or Scalar): rank,
// reduced row echelon form, nullspace bases, and multi-RHS solves. Rank-only
// elimination picks pivots for sparsity (Markowitz-style: fewest-entry column,
// then fewest-entry row); RREF/nullspace use strict left-to-right pivot
// columns so results are canonical. A dense fraction-free (Bareiss)
// elimination over Laurent polynomials backs symbolic ranks.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "qhom/error.hpp"
#include "qhom/scalar.hpp"

namespace qhom {

template <class T>
struct SparseMat {
  int rows = 0;
  int cols = 0;
  // Per row: (col, value) sorted by col, no explicit zeros.
  std::vector<std::vector<std::pair<int, T>>> row;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), row(r) {}

  static SparseMat identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.row[i].push_back({i, T(1)});
    return m;
  }

  void add(int r, int c, const T& v) {
    if (v.is_zero()) return;
    auto& rw = row[r];
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const std::pair<int, T>& e, int col) { return e.first < col; });
    if (it != rw.end() && it->first == c) {
      it->second += v;
      if (it->second.is_zero()) rw.erase(it);
    } else {
      rw.insert(it, {c, v});
    }
  }

  T get(int r, int c) const {
    const auto& rw = row[r];
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const std::pair<int, T>& e, int col) { return e.first < col; });
    if (it != rw.end() && it->first == c) return it->second;
    return T(0);
  }

  long nnz() const {
    long n = 0;
    for (const auto& rw : row) n += (long)rw.size();
    return n;
  }

  bool is_zero() const {
    for (const auto& rw : row)
      if (!rw.empty()) return false;
    return true;
  }

  bool operator==(const SparseMat& o) const {
    return rows == o.rows && cols == o.cols && row == o.row;
  }
};

namespace detail {

// dst += c * src  (sorted sparse row merge)
template <class T>
std::vector<std::pair<int, T>> axpy_row(const std::vector<std::pair<int, T>>& dst, const T& c,
                                        const std::vector<std::pair<int, T>>& src) {
  std::vector<std::pair<int, T>> out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      T v = c * src[j].second;
      if (!v.is_zero()) out.push_back({src[j].first, std::move(v)});
      ++j;
    } else {
      T v = dst[i].second + c * src[j].second;
      if (!v.is_zero()) out.push_back({dst[i].first, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

template <class T>
SparseMat<T> mat_mul(const SparseMat<T>& a, const SparseMat<T>& b) {
  if (a.cols != b.rows) throw Error(Errc::internal_consistency, "mat_mul: shape mismatch");
  SparseMat<T> out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    std::vector<std::pair<int, T>> acc;
    for (const auto& [k, v] : a.row[i]) acc = detail::axpy_row(acc, v, b.row[k]);
    out.row[i] = std::move(acc);
  }
  return out;
}

template <class T>
SparseMat<T> mat_sub(const SparseMat<T>& a, const SparseMat<T>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw Error(Errc::internal_consistency, "mat_sub: shape mismatch");
  SparseMat<T> out(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) out.row[i] = detail::axpy_row(a.row[i], T(-1), b.row[i]);
  return out;
}

// Rank by elimination with sparsity-guided pivoting (Markowitz-style:
// fewest-entry column, then shortest row). An occupancy index column ->
// active rows keeps every step local to the rows actually touched.
// Destroys its copy. Deterministic: ties break to the smallest index.
template <class T>
int sparse_rank(SparseMat<T> m) {
  std::vector<std::set<int>> colrows((size_t)m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (const auto& [c, v] : m.row[i]) colrows[(size_t)c].insert(i);

  int rank = 0;
  for (;;) {
    int pc = -1;
    size_t bestc = SIZE_MAX;
    for (int c = 0; c < m.cols; ++c)
      if (!colrows[(size_t)c].empty() && colrows[(size_t)c].size() < bestc) {
        bestc = colrows[(size_t)c].size();
        pc = c;
      }
    if (pc == -1) break;
    int pr = -1;
    size_t best = SIZE_MAX;
    for (int i : colrows[(size_t)pc])
      if (m.row[(size_t)i].size() < best) {
        best = m.row[(size_t)i].size();
        pr = i;
      }
    ++rank;
    // retire the pivot row from the index, then eliminate its column
    for (const auto& [c, v] : m.row[(size_t)pr]) colrows[(size_t)c].erase(pr);
    T pv = m.get(pr, pc);
    std::vector<int> targets(colrows[(size_t)pc].begin(), colrows[(size_t)pc].end());
    for (int i : targets) {
      T v = m.get(i, pc);
      for (const auto& [c, w] : m.row[(size_t)i]) colrows[(size_t)c].erase(i);
      T factor = -T(v / pv);
      m.row[(size_t)i] = detail::axpy_row(m.row[(size_t)i], factor, m.row[(size_t)pr]);
      for (const auto& [c, w] : m.row[(size_t)i]) colrows[(size_t)c].insert(i);
    }
    m.row[(size_t)pr].clear();
  }
  return rank;
}

template <class T>
struct RrefResult {
  int rank = 0;
  std::vector<int> pivot_col;  // pivot column of row i, for i < rank
  SparseMat<T> mat;            // reduced row echelon form (unique)
};

// Unique RREF: pivot columns strictly left to right, full reduction.
template <class T>
RrefResult<T> rref(SparseMat<T> m) {
  RrefResult<T> res;
  int r = 0;  // next pivot row
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    size_t best = SIZE_MAX;
    for (int i = r; i < m.rows; ++i) {
      if (!m.row[i].empty() && m.row[i].front().first == c && m.row[i].size() < best) {
        best = m.row[i].size();
        pr = i;
      }
    }
    if (pr == -1) continue;
    std::swap(m.row[r], m.row[pr]);
    // normalize pivot row
    T inv = T(1) / m.row[r].front().second;
    if (!(inv == T(1))) {
      for (auto& [cc, v] : m.row[r]) v *= inv;
    }
    // eliminate everywhere else
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const auto& rw = m.row[i];
      auto it = std::lower_bound(rw.begin(), rw.end(), c,
                                 [](const std::pair<int, T>& e, int col) { return e.first < col; });
      if (it == rw.end() || it->first != c) continue;
      T coef = -it->second;
      m.row[i] = detail::axpy_row(m.row[i], coef, m.row[r]);
    }
    res.pivot_col.push_back(c);
    ++r;
  }
  res.rank = r;
  // canonical row order: rows sorted by pivot column (already true), zero rows last
  res.mat = std::move(m);
  return res;
}

// Canonical nullspace basis (columns of the result), from the unique RREF:
// one basis vector per free column f, with +1 at f.
template <class T>
SparseMat<T> nullspace(const SparseMat<T>& m) {
  RrefResult<T> r = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : r.pivot_col) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  SparseMat<T> basis(m.cols, (int)free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis.add(f, (int)k, T(1));
    for (int i = 0; i < r.rank; ++i) {
      T v = r.mat.get(i, f);
      if (!v.is_zero()) basis.add(r.pivot_col[i], (int)k, -v);
    }
  }
  return basis;
}

// Solve A X = B column by column via one elimination of [A | B].
// Requires A to have full column rank; returns nullopt if some column of B
// is not in the column span of A.
template <class T>
std::optional<SparseMat<T>> solve_columns(const SparseMat<T>& a, const SparseMat<T>& b) {
  if (a.rows != b.rows) throw Error(Errc::internal_consistency, "solve_columns: shape mismatch");
  SparseMat<T> aug(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    aug.row[i] = a.row[i];
    for (const auto& [c, v] : b.row[i]) aug.row[i].push_back({c + a.cols, v});
  }
  RrefResult<T> r = rref(std::move(aug));
  // pivots must all lie in the A block and cover all its columns
  int apiv = 0;
  for (int c : r.pivot_col) {
    if (c < a.cols)
      ++apiv;
    else
      return std::nullopt;  // pivot in the B block: inconsistent system
  }
  if (apiv != a.cols)
    throw Error(Errc::internal_consistency, "solve_columns: coefficient matrix does not have full column rank");
  SparseMat<T> x(a.cols, b.cols);
  for (int i = 0; i < r.rank; ++i) {
    int var = r.pivot_col[i];
    for (const auto& [c, v] : r.mat.row[i])
      if (c >= a.cols) x.add(var, c - a.cols, v);
  }
  return x;
}

// Fraction-free (Bareiss) rank of a dense Laurent-polynomial matrix.
int bareiss_rank(std::vector<std::vector<LaurentQ>> m);

SparseMat<Rat> specialize_mat(const SparseMat<Scalar>& m, const Rat& q0);

// Rank honoring the field mode: Symbolic -> fraction-free elimination over
// Laurent polynomials; Specialized -> rank over Q at q0, confirmed at the
// partner point when entries are genuinely symbolic (disagreement throws
// generic_rank_uncertain).
int matrix_rank(const SparseMat<Scalar>& m, const ScalarField& field);

}  // namespace qhom

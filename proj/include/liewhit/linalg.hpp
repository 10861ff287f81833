#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace liewhit {

/// Sparse matrix over the rationals. Zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw usage_error("negative matrix dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rational& v) {
    check(r, c);
    if (v == 0)
      entries_.erase({r, c});
    else
      entries_[{r, c}] = v;
  }

  void add(int r, int c, const Rational& v) {
    check(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
      if (v != 0) entries_[{r, c}] = v;
      return;
    }
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }

  Rational at(int r, int c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw usage_error("matrix/vector size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (const auto& [rc, val] : entries_) out[rc.first] += val * v[rc.second];
    return out;
  }

  /// Rows as sparse maps, for the elimination routines below.
  std::vector<std::map<int, Rational>> sparse_rows() const {
    std::vector<std::map<int, Rational>> rows(rows_);
    for (const auto& [rc, val] : entries_) rows[rc.first][rc.second] = val;
    return rows;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw usage_error("matrix product size mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    for (const auto& [rc, av] : a.entries_) {
      auto lo = b.entries_.lower_bound({rc.second, 0});
      auto hi = b.entries_.lower_bound({rc.second + 1, 0});
      for (auto it = lo; it != hi; ++it) out.add(rc.first, it->first.second, av * it->second);
    }
    return out;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw usage_error("matrix difference size mismatch");
    SparseMatrix out = a;
    for (const auto& [rc, bv] : b.entries_) out.add(rc.first, rc.second, -bv);
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw usage_error("matrix index out of bounds");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Rational> entries_;
};

namespace detail {

/// Sparse row echelon form, in place. Returns the pivot column of every
/// surviving row, in elimination order. Rows become monic on their pivot
/// and fully reduced against later pivots.
inline std::vector<int> echelonize(std::vector<std::map<int, Rational>>& rows) {
  std::vector<std::map<int, Rational>> done;
  std::vector<int> pivots;
  // Always eliminate with the sparsest candidate row to keep fill-in low.
  std::vector<std::map<int, Rational>> pending = std::move(rows);
  while (true) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(pending.size()); ++i) {
      if (pending[i].empty()) continue;
      if (best == -1) { best = i; continue; }
      auto key = [&](int j) {
        return std::pair<int, std::size_t>(pending[j].begin()->first, pending[j].size());
      };
      if (key(i) < key(best)) best = i;
    }
    if (best == -1) break;
    std::map<int, Rational> row = std::move(pending[best]);
    pending[best].clear();
    int pc = row.begin()->first;
    Rational lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    for (auto& other : pending) {
      auto it = other.find(pc);
      if (it == other.end()) continue;
      Rational f = it->second;
      for (const auto& [c, v] : row) {
        auto jt = other.find(c);
        if (jt == other.end()) {
          other[c] = -f * v;
        } else {
          jt->second -= f * v;
          if (jt->second == 0) other.erase(jt);
        }
      }
    }
    done.push_back(std::move(row));
    pivots.push_back(pc);
  }
  // Back-substitute for reduced echelon form.
  for (int i = static_cast<int>(done.size()) - 1; i >= 0; --i) {
    for (int j = 0; j < i; ++j) {
      auto it = done[j].find(pivots[i]);
      if (it == done[j].end()) continue;
      Rational f = it->second;
      for (const auto& [c, v] : done[i]) {
        auto jt = done[j].find(c);
        if (jt == done[j].end()) {
          done[j][c] = -f * v;
        } else {
          jt->second -= f * v;
          if (jt->second == 0) done[j].erase(jt);
        }
      }
    }
  }
  rows = std::move(done);
  return pivots;
}

}  // namespace detail

/// Rank over the rationals, computed exactly.
inline int rank(const SparseMatrix& m) {
  auto rows = m.sparse_rows();
  return static_cast<int>(detail::echelonize(rows).size());
}

/// Basis of the right null space { v : m v = 0 }. Size is always
/// cols - rank, and every vector satisfies the system exactly.
inline std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
  auto rows = m.sparse_rows();
  auto pivots = detail::echelonize(rows);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto it = rows[i].find(free);
      if (it != rows[i].end()) v[pivots[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some exact solution of m x = rhs, or nullopt when inconsistent.
/// The candidate is re-substituted before being returned.
inline std::optional<std::vector<Rational>> solve(const SparseMatrix& m,
                                                  const std::vector<Rational>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw usage_error("rhs length must equal row count");
  auto rows = m.sparse_rows();
  const int rhs_col = m.cols();  // augmented column
  for (int r = 0; r < m.rows(); ++r)
    if (rhs[r] != 0) rows[r][rhs_col] = rhs[r];
  auto pivots = detail::echelonize(rows);
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (pivots[i] == rhs_col) return std::nullopt;  // row 0 = nonzero
    auto it = rows[i].find(rhs_col);
    x[pivots[i]] = it == rows[i].end() ? Rational(0) : it->second;
  }
  if (m.apply(x) != rhs) return std::nullopt;
  return x;
}

/// Canonical (reduced echelon) row space over the rationals. Used for all
/// span bookkeeping: central series, orbits, weight subspaces.
class RowSpace {
 public:
  explicit RowSpace(int ncols) : ncols_(ncols) {}

  /// Inserts a vector; returns true when the dimension grew.
  bool insert(std::vector<Rational> v) {
    if (static_cast<int>(v.size()) != ncols_) throw usage_error("RowSpace width mismatch");
    std::map<int, Rational> row;
    for (int c = 0; c < ncols_; ++c)
      if (v[c] != 0) row[c] = v[c];
    reduce(row);
    if (row.empty()) return false;
    Rational lead = row.begin()->second;
    for (auto& [c, val] : row) val /= lead;
    int pc = row.begin()->first;
    // Reduce existing rows against the new pivot.
    for (auto& r : rows_) {
      auto it = r.second.find(pc);
      if (it == r.second.end()) continue;
      Rational f = it->second;
      for (const auto& [c, val] : row) {
        auto jt = r.second.find(c);
        if (jt == r.second.end()) {
          r.second[c] = -f * val;
        } else {
          jt->second -= f * val;
          if (jt->second == 0) r.second.erase(jt);
        }
      }
    }
    rows_[pc] = std::move(row);
    return true;
  }

  bool contains(std::vector<Rational> v) const {
    std::map<int, Rational> row;
    for (int c = 0; c < ncols_; ++c)
      if (v[c] != 0) row[c] = v[c];
    reduce(row);
    return row.empty();
  }

  /// Canonical representative of v modulo this space: the full reduction
  /// against the stored rows. Linear in v; kernel is exactly the space.
  std::vector<Rational> reduce_vector(std::vector<Rational> v) const {
    std::map<int, Rational> row;
    for (int c = 0; c < ncols_; ++c)
      if (v[c] != 0) row[c] = v[c];
    reduce(row);
    std::vector<Rational> out(ncols_, Rational(0));
    for (const auto& [c, val] : row) out[c] = val;
    return out;
  }

  int dim() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  bool operator==(const RowSpace& other) const {
    return ncols_ == other.ncols_ && rows_ == other.rows_;
  }

  /// Canonical basis, one vector per pivot in pivot order.
  std::vector<std::vector<Rational>> basis() const {
    std::vector<std::vector<Rational>> out;
    for (const auto& [pc, row] : rows_) {
      std::vector<Rational> v(ncols_, Rational(0));
      for (const auto& [c, val] : row) v[c] = val;
      out.push_back(std::move(v));
    }
    return out;
  }

  std::vector<int> pivots() const {
    std::vector<int> out;
    for (const auto& [pc, row] : rows_) out.push_back(pc);
    return out;
  }

 private:
  void reduce(std::map<int, Rational>& row) const {
    // Stored rows are zero on every pivot column but their own, so one
    // ascending pass fully reduces.
    auto it = row.begin();
    while (it != row.end()) {
      auto pit = rows_.find(it->first);
      if (pit == rows_.end()) {
        ++it;
        continue;
      }
      int pc = pit->first;
      Rational f = it->second;
      for (const auto& [c, val] : pit->second) {
        auto jt = row.find(c);
        if (jt == row.end()) {
          row[c] = -f * val;
        } else {
          jt->second -= f * val;
          if (jt->second == 0) row.erase(jt);
        }
      }
      it = row.upper_bound(pc);
    }
  }

  int ncols_;
  std::map<int, std::map<int, Rational>> rows_;  // pivot column -> reduced row
};

}  // namespace liewhit

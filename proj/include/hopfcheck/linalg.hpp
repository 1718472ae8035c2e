#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfcheck/rational.hpp"

namespace hopfcheck {

// Sparse column vector: index -> nonzero value. std::map gives sorted,
// deterministic iteration, which every downstream report depends on.
using SparseVec = std::map<int, Rational>;

inline void add_scaled(SparseVec& dst, const SparseVec& src, const Rational& c) {
  if (c == 0) return;
  for (const auto& [i, v] : src) {
    auto it = dst.find(i);
    if (it == dst.end()) {
      dst.emplace(i, v * c);
    } else {
      it->second += v * c;
      if (it->second == 0) dst.erase(it);
    }
  }
}

inline SparseVec scaled(const SparseVec& v, const Rational& c) {
  SparseVec r;
  if (c == 0) return r;
  for (const auto& [i, x] : v) r.emplace(i, x * c);
  return r;
}

inline SparseVec unit_vec(int i) { return SparseVec{{i, Rational(1)}}; }

inline Rational vec_get(const SparseVec& v, int i) {
  auto it = v.find(i);
  return it == v.end() ? Rational(0) : it->second;
}

// Sparse matrix stored column-major; no explicit zeros, indices in range.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> col;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), col(c) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.col[i].emplace(i, 1);
    return m;
  }

  void set(int i, int j, const Rational& v) {
    if (i < 0 || i >= rows || j < 0 || j >= cols)
      throw DimensionError("Matrix::set: index out of range");
    if (v == 0)
      col[j].erase(i);
    else
      col[j][i] = v;
  }

  void add(int i, int j, const Rational& v) {
    if (i < 0 || i >= rows || j < 0 || j >= cols)
      throw DimensionError("Matrix::add: index out of range");
    auto it = col[j].find(i);
    if (it == col[j].end()) {
      if (v != 0) col[j].emplace(i, v);
    } else {
      it->second += v;
      if (it->second == 0) col[j].erase(it);
    }
  }

  Rational get(int i, int j) const {
    auto it = col[j].find(i);
    return it == col[j].end() ? Rational(0) : it->second;
  }

  SparseVec apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, x] : v) {
      if (j < 0 || j >= cols) throw DimensionError("Matrix::apply: vector index out of range");
      add_scaled(out, col[j], x);
    }
    return out;
  }

  // this ∘ other (matrix product this * other)
  Matrix compose(const Matrix& other) const {
    if (cols != other.rows)
      throw DimensionError("Matrix::compose: " + std::to_string(rows) + "x" +
                           std::to_string(cols) + " cannot follow " +
                           std::to_string(other.rows) + "x" + std::to_string(other.cols));
    Matrix out(rows, other.cols);
    for (int j = 0; j < other.cols; ++j) out.col[j] = apply(other.col[j]);
    return out;
  }

  // Kronecker product; pair index (i,k) -> i * other.dim + k (left factor major).
  Matrix kron(const Matrix& other) const {
    Matrix out(rows * other.rows, cols * other.cols);
    for (int j = 0; j < cols; ++j)
      for (int l = 0; l < other.cols; ++l) {
        SparseVec& c = out.col[j * other.cols + l];
        for (const auto& [i, a] : col[j])
          for (const auto& [k, b] : other.col[l]) c.emplace(i * other.rows + k, a * b);
      }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols, rows);
    for (int j = 0; j < cols; ++j)
      for (const auto& [i, v] : col[j]) out.col[i].emplace(j, v);
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && col == o.col;
  }

  // Ascending list of columns where the two matrices differ.
  std::vector<int> differing_columns(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols)
      throw DimensionError("differing_columns: shape mismatch");
    std::vector<int> out;
    for (int j = 0; j < cols; ++j)
      if (col[j] != o.col[j]) out.push_back(j);
    return out;
  }
};

// Row echelon accumulator over sparse rows. Rows are keyed by pivot column;
// leading coefficients are normalized to 1. finalize() back-substitutes to
// the (unique) reduced row echelon form.
class Echelon {
 public:
  // Reduces v against the current rows; the remainder has no support on
  // existing pivot columns' leading positions.
  SparseVec reduce(SparseVec v) const {
    while (!v.empty()) {
      int lead = v.begin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) break;
      add_scaled(v, it->second, -v.begin()->second);
    }
    return v;
  }

  // Returns true if v added a new pivot.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rational lead = v.begin()->second;
    if (lead != 1) {
      Rational inv = 1 / lead;
      for (auto& [i, x] : v) x *= inv;
    }
    rows_.emplace(v.begin()->first, std::move(v));
    finalized_ = false;
    return true;
  }

  // Full RREF. Rows are processed in descending pivot order; eliminating a
  // tail entry against an already-finalized row cannot reintroduce pivot
  // columns, so each row is touched once.
  void finalize() {
    if (finalized_) return;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseVec& r = it->second;
      auto e = r.begin();
      ++e;  // leading entry is this row's own pivot
      while (e != r.end()) {
        int c = e->first;
        auto hit = rows_.find(c);
        if (hit == rows_.end()) {
          ++e;
          continue;
        }
        Rational coef = e->second;
        add_scaled(r, hit->second, -coef);
        e = r.upper_bound(c);
      }
    }
    finalized_ = true;
  }

  const std::map<int, SparseVec>& rows() const { return rows_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool has_pivot(int c) const { return rows_.count(c) != 0; }

 private:
  std::map<int, SparseVec> rows_;
  bool finalized_ = false;
};

struct MemberResult {
  bool member = false;
  SparseVec coeffs;      // over the columns of A, non-pivot columns get 0
  SparseVec separating;  // a row of the reduced system proving non-membership
};

// Column-span membership: for each target v, decides v ∈ span(columns of A)
// and, if so, yields the unique RREF coefficient vector. Deterministic:
// leftmost-pivot elimination, rows taken in index order.
inline std::vector<MemberResult> rref_solve(const Matrix& A,
                                            const std::vector<SparseVec>& targets) {
  const int m = A.rows, n = A.cols;
  const int t = static_cast<int>(targets.size());
  // Rows of the augmented system [A | targets].
  std::vector<SparseVec> row(m);
  for (int j = 0; j < n; ++j)
    for (const auto& [i, v] : A.col[j]) row[i].emplace(j, v);
  for (int k = 0; k < t; ++k)
    for (const auto& [i, v] : targets[k]) {
      if (i < 0 || i >= m) throw DimensionError("rref_solve: target index out of range");
      row[i].emplace(n + k, v);
    }
  Echelon ech;
  for (int i = 0; i < m; ++i) ech.insert(std::move(row[i]));
  ech.finalize();

  std::vector<MemberResult> out(t);
  for (int k = 0; k < t; ++k) {
    auto it = ech.rows().find(n + k);
    if (it != ech.rows().end()) {
      out[k].member = false;
      out[k].separating = it->second;
      continue;
    }
    out[k].member = true;
    for (const auto& [pcol, r] : ech.rows()) {
      if (pcol >= n) continue;
      Rational c = vec_get(r, n + k);
      if (c != 0) out[k].coeffs.emplace(pcol, c);
    }
  }
  return out;
}

struct InvertResult {
  bool ok = false;
  Matrix inverse;
  SparseVec kernel;  // nonzero kernel vector when singular
};

inline InvertResult invert_matrix(const Matrix& A) {
  if (A.rows != A.cols) throw DimensionError("invert_matrix: matrix is not square");
  const int n = A.rows;
  std::vector<SparseVec> row(n);
  for (int j = 0; j < n; ++j)
    for (const auto& [i, v] : A.col[j]) row[i].emplace(j, v);
  for (int i = 0; i < n; ++i) row[i].emplace(n + i, 1);
  Echelon ech;
  for (int i = 0; i < n; ++i) ech.insert(std::move(row[i]));
  ech.finalize();

  InvertResult res;
  for (int j = 0; j < n; ++j) {
    if (!ech.has_pivot(j)) {
      // Kernel vector: free column j set to 1, pivots balance it out.
      res.kernel.emplace(j, 1);
      for (const auto& [pcol, r] : ech.rows()) {
        if (pcol >= n) continue;
        Rational c = vec_get(r, j);
        if (c != 0) res.kernel.emplace(pcol, -c);
      }
      return res;
    }
  }
  res.ok = true;
  res.inverse = Matrix(n, n);
  for (const auto& [pcol, r] : ech.rows()) {
    if (pcol >= n) continue;  // cannot happen once regular
    for (const auto& [c, v] : r)
      if (c >= n) res.inverse.col[c - n].emplace(pcol, v);
  }
  return res;
}

}  // namespace hopfcheck

#include "surfgenus/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "surfgenus/error.hpp"

namespace surfgenus {

namespace {

// Sparse row with strictly increasing column indices and nonzero values.
struct SparseRow {
  std::vector<std::size_t> cols;
  std::vector<Rational> vals;

  bool empty() const { return cols.empty(); }
  std::size_t lead() const { return cols.front(); }
};

SparseRow to_sparse(std::span<const Rational> dense) {
  SparseRow row;
  for (std::size_t c = 0; c < dense.size(); ++c) {
    if (sgn(dense[c]) != 0) {
      row.cols.push_back(c);
      row.vals.push_back(dense[c]);
    }
  }
  return row;
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// target -= factor * source
void subtract_multiple(SparseRow& target, const Rational& factor, const SparseRow& source) {
  SparseRow out;
  out.cols.reserve(target.cols.size() + source.cols.size());
  out.vals.reserve(target.cols.size() + source.cols.size());
  std::size_t i = 0, j = 0;
  Rational tmp;
  while (i < target.cols.size() || j < source.cols.size()) {
    if (j == source.cols.size() || (i < target.cols.size() && target.cols[i] < source.cols[j])) {
      out.cols.push_back(target.cols[i]);
      out.vals.push_back(std::move(target.vals[i]));
      ++i;
    } else if (i == target.cols.size() || source.cols[j] < target.cols[i]) {
      tmp = factor * source.vals[j];
      out.cols.push_back(source.cols[j]);
      out.vals.push_back(-tmp);
      ++j;
    } else {
      tmp = factor * source.vals[j];
      tmp = target.vals[i] - tmp;
      if (sgn(tmp) != 0) {
        out.cols.push_back(target.cols[i]);
        out.vals.push_back(tmp);
      }
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.cols.begin(), row.cols.end(), col);
  if (it == row.cols.end() || *it != col) return nullptr;
  return &row.vals[static_cast<std::size_t>(it - row.cols.begin())];
}

struct Echelon {
  std::vector<SparseRow> rows;  // pivot rows, leading entry 1
  std::vector<std::size_t> pivot_cols;
};

// Column-by-column Gaussian elimination. Rows are bucketed by leading column; within
// a bucket the pivot is the entry of smallest bit size (ties: shortest row).
Echelon eliminate(std::vector<SparseRow> input, std::size_t ncols, bool reduce) {
  std::vector<std::vector<SparseRow>> buckets(ncols);
  for (auto& r : input)
    if (!r.empty()) buckets[r.lead()].push_back(std::move(r));

  Echelon ech;
  for (std::size_t col = 0; col < ncols; ++col) {
    auto& bucket = buckets[col];
    if (bucket.empty()) continue;
    std::size_t best = 0;
    std::pair<std::size_t, std::size_t> best_key{std::numeric_limits<std::size_t>::max(), 0};
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      std::pair<std::size_t, std::size_t> key{bit_size(bucket[i].vals.front()), bucket[i].cols.size()};
      if (key < best_key) {
        best_key = key;
        best = i;
      }
    }
    SparseRow pivot = std::move(bucket[best]);
    const Rational lead = pivot.vals.front();
    for (auto& v : pivot.vals) v /= lead;

    for (std::size_t i = 0; i < bucket.size(); ++i) {
      if (i == best) continue;
      SparseRow& r = bucket[i];
      const Rational factor = r.vals.front();
      subtract_multiple(r, factor, pivot);
      if (!r.empty()) buckets[r.lead()].push_back(std::move(r));
    }
    bucket.clear();
    bucket.shrink_to_fit();
    ech.rows.push_back(std::move(pivot));
    ech.pivot_cols.push_back(col);
  }

  if (reduce) {
    for (std::size_t i = ech.rows.size(); i-- > 0;) {
      const std::size_t pc = ech.pivot_cols[i];
      for (std::size_t k = 0; k < i; ++k) {
        const Rational* entry = find_entry(ech.rows[k], pc);
        if (entry == nullptr) continue;
        const Rational factor = *entry;
        subtract_multiple(ech.rows[k], factor, ech.rows[i]);
      }
    }
  }
  return ech;
}

std::vector<SparseRow> sparse_rows(const RationalMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m.row(r)));
  return rows;
}

std::size_t checked_dim(std::span<const RationalVector> a, std::span<const RationalVector> b) {
  std::size_t dim = !a.empty() ? a.front().size() : (!b.empty() ? b.front().size() : 0);
  for (auto group : {a, b})
    for (const auto& v : group)
      if (v.size() != dim)
        throw SurfaceError(ErrorCode::DimensionMismatch,
                           "vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(dim));
  return dim;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw SurfaceError(ErrorCode::DimensionMismatch, std::to_string(entries_.size()) + " entries for a " +
                                                         std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw SurfaceError(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has length " +
                                                           std::to_string(rows[r].size()));
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out(*this);
  for (auto& e : out.entries_) e *= factor;
  return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_)
    throw SurfaceError(ErrorCode::DimensionMismatch, "product of " + std::to_string(a.rows_) + "x" +
                                                         std::to_string(a.cols_) + " and " + std::to_string(b.rows_) +
                                                         "x" + std::to_string(b.cols_));
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols_ != x.size())
    throw SurfaceError(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(x.size()));
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(x[k]) != 0) out[i] += a(i, k) * x[k];
  return out;
}

std::size_t rank(const RationalMatrix& m) { return eliminate(sparse_rows(m), m.cols(), false).rows.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const Echelon ech = eliminate(sparse_rows(m), m.cols(), true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : ech.pivot_cols) is_pivot[pc] = true;

  std::vector<RationalVector> basis;
  basis.reserve(m.cols() - ech.rows.size());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ech.rows.size(); ++i)
      if (const Rational* entry = find_entry(ech.rows[i], free)) v[ech.pivot_cols[i]] = -*entry;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_dim(std::span<const RationalVector> vectors, std::size_t dim) {
  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim)
      throw SurfaceError(ErrorCode::DimensionMismatch,
                         "vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(dim));
    rows.push_back(to_sparse(v));
  }
  return eliminate(std::move(rows), dim, false).rows.size();
}

std::size_t intersection_dim(std::span<const RationalVector> a, std::span<const RationalVector> b) {
  const std::size_t dim = checked_dim(a, b);
  if (a.empty() || b.empty()) return 0;
  std::vector<RationalVector> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  return span_dim(a, dim) + span_dim(b, dim) - span_dim(both, dim);
}

}  // namespace surfgenus

#include "sheafforge/matrices.hpp"

#include <algorithm>
#include <unordered_map>

namespace sheafforge {

Matrix::Matrix(FieldPtr field, size_t rows, std::vector<std::string> labels)
    : field_(std::move(field)), rows_(rows), labels_(std::move(labels)) {
  require(field_ != nullptr, "matrix without a field");
  for (size_t i = 0; i < labels_.size(); ++i)
    for (size_t j = i + 1; j < labels_.size(); ++j)
      require(labels_[i] != labels_[j], "duplicate column label " + labels_[i]);
  data_.assign(rows_ * labels_.size(), 0);
}

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : Matrix(std::move(field), rows, default_labels(cols)) {}

std::vector<std::string> Matrix::default_labels(size_t n) {
  std::vector<std::string> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<std::uint64_t>>& rows,
                         std::vector<std::string> labels) {
  size_t cols = rows.empty() ? labels.size() : rows[0].size();
  if (labels.empty()) labels = default_labels(cols);
  require(labels.size() == cols || rows.empty(), "label count must match column count");
  Matrix m(field, rows.size(), std::move(labels));
  for (size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols(), "ragged row in matrix literal");
    for (size_t j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::identity(FieldPtr field, size_t n) {
  Matrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Matrix::set(size_t i, size_t j, std::uint64_t v) {
  require(v < field_->order(), "entry out of field range");
  data_[i * cols() + j] = v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols(), rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols(); ++j) t.set(j, i, get(i, j));
  return t;
}

Matrix Matrix::mul(const Matrix& other) const {
  require(field_->same(*other.field_), "field mismatch");
  require(cols() == other.rows(), "shape mismatch in matrix product");
  Matrix r(field_, rows_, other.labels());
  const Field& f = *field_;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols(); ++k) {
      std::uint64_t a = get(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < other.cols(); ++j) {
        std::uint64_t b = other.get(k, j);
        if (b == 0) continue;
        r.data_[i * r.cols() + j] = f.add(r.get(i, j), f.mul(a, b));
      }
    }
  return r;
}

std::vector<std::uint64_t> Matrix::mul_vec(const std::vector<std::uint64_t>& x) const {
  require(x.size() == cols(), "vector length mismatch");
  const Field& f = *field_;
  std::vector<std::uint64_t> y(rows_, 0);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols(); ++j) {
      std::uint64_t a = get(i, j);
      if (a && x[j]) y[i] = f.add(y[i], f.mul(a, x[j]));
    }
  return y;
}

Matrix Matrix::append_rows(const Matrix& other) const {
  require(field_->same(*other.field_), "field mismatch");
  require(labels_ == other.labels_, "column labels must agree");
  Matrix r(field_, rows_ + other.rows_, labels_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), r.data_.begin() + data_.size());
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

bool Matrix::same_content(const Matrix& other) const {
  return rows_ == other.rows_ && labels_ == other.labels_ && data_ == other.data_ &&
         field_->same(*other.field_);
}

size_t Matrix::rank() const { return rref().rank; }

Echelon Matrix::rref() const {
  Matrix r = *this;
  const Field& f = *field_;
  size_t n = cols();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < n && row < rows_; ++col) {
    size_t sel = rows_;
    for (size_t i = row; i < rows_; ++i)
      if (r.get(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel == rows_) continue;
    if (sel != row)
      for (size_t j = 0; j < n; ++j) std::swap(r.data_[sel * n + j], r.data_[row * n + j]);
    std::uint64_t piv_inv = f.inv(r.get(row, col));
    for (size_t j = col; j < n; ++j) r.data_[row * n + j] = f.mul(r.get(row, j), piv_inv);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      std::uint64_t c = r.get(i, col);
      if (c == 0) continue;
      for (size_t j = col; j < n; ++j)
        r.data_[i * n + j] = f.sub(r.get(i, j), f.mul(c, r.get(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(r), pivots.size(), std::move(pivots)};
}

Matrix Matrix::row_canonical() const {
  Echelon e = rref();
  Matrix out(field_, e.rank, labels_);
  for (size_t i = 0; i < e.rank; ++i)
    for (size_t j = 0; j < cols(); ++j) out.set(i, j, e.reduced.get(i, j));
  return out;
}

Matrix Matrix::kernel_basis() const {
  Echelon e = rref();
  size_t n = cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t c : e.pivot_columns) is_pivot[c] = true;
  Matrix out(field_, n - e.rank, labels_);
  const Field& f = *field_;
  size_t out_row = 0;
  for (size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    out.set(out_row, freec, 1);
    for (size_t r = 0; r < e.rank; ++r)
      out.set(out_row, e.pivot_columns[r], f.neg(e.reduced.get(r, freec)));
    ++out_row;
  }
  return out;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
  require(a.field_->same(*b.field_), "field mismatch");
  std::vector<std::string> labels;
  labels.reserve(a.cols() * b.cols());
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back("(" + la + "," + lb + ")");
  Matrix r(a.field_, a.rows() * b.rows(), std::move(labels));
  const Field& f = *a.field_;
  for (size_t ia = 0; ia < a.rows(); ++ia)
    for (size_t ja = 0; ja < a.cols(); ++ja) {
      std::uint64_t va = a.get(ia, ja);
      if (va == 0) continue;
      for (size_t ib = 0; ib < b.rows(); ++ib)
        for (size_t jb = 0; jb < b.cols(); ++jb) {
          std::uint64_t vb = b.get(ib, jb);
          if (vb == 0) continue;
          r.set(ia * b.rows() + ib, ja * b.cols() + jb, f.mul(va, vb));
        }
    }
  return r;
}

Matrix Matrix::stack(std::span<const Matrix> ms, const std::vector<std::string>& universe) {
  require(!ms.empty(), "stack of no matrices");
  std::unordered_map<std::string, size_t> where;
  for (size_t i = 0; i < universe.size(); ++i) where[universe[i]] = i;
  size_t total = 0;
  for (const auto& m : ms) total += m.rows();
  Matrix r(ms[0].field(), total, universe);
  size_t row = 0;
  for (const auto& m : ms) {
    require(m.field()->same(*r.field_), "field mismatch");
    std::vector<size_t> at(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) {
      auto it = where.find(m.labels()[j]);
      require(it != where.end(), "label outside column universe: " + m.labels()[j]);
      at[j] = it->second;
    }
    for (size_t i = 0; i < m.rows(); ++i, ++row)
      for (size_t j = 0; j < m.cols(); ++j) r.set(row, at[j], m.get(i, j));
  }
  return r;
}

Matrix Matrix::restrict_columns(const std::vector<std::string>& keep) const {
  std::unordered_map<std::string, size_t> where;
  for (size_t j = 0; j < cols(); ++j) where[labels_[j]] = j;
  Matrix r(field_, rows_, keep);
  for (size_t j = 0; j < keep.size(); ++j) {
    auto it = where.find(keep[j]);
    require(it != where.end(), "unknown column label: " + keep[j]);
    for (size_t i = 0; i < rows_; ++i) r.set(i, j, get(i, it->second));
  }
  return r;
}

std::optional<std::vector<std::uint64_t>> Matrix::solve(const std::vector<std::uint64_t>& b) const {
  require(b.size() == rows_, "right-hand side length mismatch");
  // Eliminate on [M | b].
  Matrix aug(field_, rows_, cols() + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols(); ++j) aug.set(i, j, get(i, j));
    aug.set(i, cols(), b[i]);
  }
  Echelon e = aug.rref();
  std::vector<std::uint64_t> x(cols(), 0);
  for (size_t r = 0; r < e.rank; ++r) {
    size_t p = e.pivot_columns[r];
    if (p == cols()) return std::nullopt;  // pivot in the augmented column
    x[p] = e.reduced.get(r, cols());
  }
  return x;
}

bool Matrix::row_space_contains(const std::vector<std::uint64_t>& v) const {
  return transpose().solve(v).has_value();
}

}  // namespace sheafforge

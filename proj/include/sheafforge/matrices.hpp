#ifndef SHEAFFORGE_MATRICES_HPP
#define SHEAFFORGE_MATRICES_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sheafforge/fields.hpp"

namespace sheafforge {

struct Echelon;

// Dense matrix over a finite field with first-class column labels. Labels
// exist because code coordinates are indexed by poset elements, not by
// integers; operations that permute or merge columns work through them.
// Entries are stored as raw field encodings. Matrices are immutable values
// in spirit: operations return new matrices.
class Matrix {
 public:
  Matrix(FieldPtr field, size_t rows, std::vector<std::string> labels);
  Matrix(FieldPtr field, size_t rows, size_t cols);  // default labels "0".."n-1"

  static std::vector<std::string> default_labels(size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint64_t>>& rows,
                          std::vector<std::string> labels = {});
  static Matrix identity(FieldPtr field, size_t n);

  const FieldPtr& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::uint64_t get(size_t i, size_t j) const { return data_[i * cols() + j]; }
  void set(size_t i, size_t j, std::uint64_t v);

  Matrix transpose() const;
  Matrix mul(const Matrix& other) const;
  std::vector<std::uint64_t> mul_vec(const std::vector<std::uint64_t>& x) const;  // M x
  Matrix append_rows(const Matrix& other) const;
  bool is_zero() const;
  bool same_content(const Matrix& other) const;

  // Reduced row echelon form with deterministic leftmost pivoting; zero rows
  // sink to the bottom and pivot columns are strictly increasing.
  Echelon rref() const;
  size_t rank() const;
  // Canonical form: rref with zero rows dropped. Two row spaces are equal
  // iff their canonical forms are identical.
  Matrix row_canonical() const;

  // Rows form the deterministic basis of {x : Mx = 0}, built from the rref
  // free columns in column order. Row count is cols() - rank().
  Matrix kernel_basis() const;

  static Matrix kronecker(const Matrix& a, const Matrix& b);
  // Rows of all matrices concatenated and zero-padded into the universe's
  // column order. Every input label must appear in the universe.
  static Matrix stack(std::span<const Matrix> ms, const std::vector<std::string>& universe);
  Matrix restrict_columns(const std::vector<std::string>& keep) const;

  // Solves M x = b; nullopt when the system is inconsistent.
  std::optional<std::vector<std::uint64_t>> solve(const std::vector<std::uint64_t>& b) const;
  // Membership of v in the row space.
  bool row_space_contains(const std::vector<std::uint64_t>& v) const;

 private:
  FieldPtr field_;
  size_t rows_;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> data_;
};

struct Echelon {
  Matrix reduced;
  size_t rank;
  std::vector<size_t> pivot_columns;
};

}  // namespace sheafforge

#endif

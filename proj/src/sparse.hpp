#pragma once

#include <map>
#include <optional>
#include <vector>

#include "field.hpp"

namespace stratih {

using Vec = std::vector<Fq>;

Vec zero_vec(const FieldSpec& f, int n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Fq& c, const Vec& v);

// Sparse matrix over an exact field. Zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols, FieldSpec field);
  static SparseMatrix identity(int n, FieldSpec field);
  static SparseMatrix from_columns(int rows, const std::vector<Vec>& cols, FieldSpec field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  int nnz() const;

  void set(int r, int c, const Fq& v);
  void add_to(int r, int c, const Fq& v);
  Fq get(int r, int c) const;
  const std::map<int, Fq>& row(int r) const { return entries_[r]; }

  Vec apply(const Vec& x) const;              // M x
  Vec apply_transpose(const Vec& y) const;    // M^T y
  SparseMatrix transpose() const;
  SparseMatrix multiply(const SparseMatrix& o) const;
  // rows picked by index list (in the given order), all columns kept
  SparseMatrix select_rows(const std::vector<int>& rows) const;
  SparseMatrix scaled(const Fq& c) const;
  Vec column(int c) const;
  bool operator==(const SparseMatrix& o) const;

 private:
  int rows_, cols_;
  FieldSpec field_;
  std::vector<std::map<int, Fq>> entries_;  // per row: col -> nonzero value
};

// One-shot Gaussian elimination of M to reduced row echelon form, recording
// the row transform so that repeated solves and membership tests against the
// same matrix reuse the factorization. Pivot rows are chosen by sparsity
// within the current column.
class RowEchelon {
 public:
  explicit RowEchelon(const SparseMatrix& m);

  int rank() const { return static_cast<int>(pivot_cols_.size()); }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }

  bool in_column_space(const Vec& b) const;
  // x with M x = b, free coordinates set to zero; nullopt if inconsistent.
  std::optional<Vec> solve(const Vec& b) const;
  std::vector<Vec> kernel_basis() const;

 private:
  int rows_, cols_;
  FieldSpec field_;
  // R = T M in RREF; rows of R and T stored in pivot order.
  std::vector<std::map<int, Fq>> r_rows_;
  std::vector<std::map<int, Fq>> t_rows_;
  // rows of T spanning the left kernel (the zero rows of R).
  std::vector<std::map<int, Fq>> t_null_rows_;
  std::vector<int> pivot_cols_;

  Vec transformed(const Vec& b) const;  // pivot-row part of T b
};

int rank(const SparseMatrix& m);
std::vector<Vec> kernel_basis(const SparseMatrix& m);
std::optional<Vec> solve(const SparseMatrix& m, const Vec& b);
// Indices of a column subset forming a basis of the column space.
std::vector<int> column_space_basis(const SparseMatrix& m);

}  // namespace stratih

#include "sparse.hpp"

#include <algorithm>

namespace stratih {

Vec zero_vec(const FieldSpec& f, int n) { return Vec(n, Fq::zero(f)); }

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Fq& x) { return x.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::logic_error("vector size mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec scale(const Fq& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

SparseMatrix::SparseMatrix(int rows, int cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(int n, FieldSpec field) {
  SparseMatrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.set(i, i, Fq::one(field));
  return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, const std::vector<Vec>& cols,
                                        FieldSpec field) {
  SparseMatrix m(rows, static_cast<int>(cols.size()), field);
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw std::invalid_argument("column length mismatch");
    for (int r = 0; r < rows; ++r)
      if (!cols[c][r].is_zero()) m.entries_[r].emplace(c, cols[c][r]);
  }
  return m;
}

int SparseMatrix::nnz() const {
  int n = 0;
  for (const auto& row : entries_) n += static_cast<int>(row.size());
  return n;
}

void SparseMatrix::set(int r, int c, const Fq& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index");
  if (v.is_zero())
    entries_[r].erase(c);
  else
    entries_[r][c] = v;
}

void SparseMatrix::add_to(int r, int c, const Fq& v) {
  if (v.is_zero()) return;
  auto it = entries_[r].find(c);
  if (it == entries_[r].end()) {
    entries_[r].emplace(c, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) entries_[r].erase(it);
  }
}

Fq SparseMatrix::get(int r, int c) const {
  auto it = entries_[r].find(c);
  return it == entries_[r].end() ? Fq::zero(field_) : it->second;
}

Vec SparseMatrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("M x size mismatch");
  Vec out = zero_vec(field_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : entries_[r]) out[r] += v * x[c];
  return out;
}

Vec SparseMatrix::apply_transpose(const Vec& y) const {
  if (static_cast<int>(y.size()) != rows_) throw std::invalid_argument("M^T y size mismatch");
  Vec out = zero_vec(field_, cols_);
  for (int r = 0; r < rows_; ++r) {
    if (y[r].is_zero()) continue;
    for (const auto& [c, v] : entries_[r]) out[c] += v * y[r];
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix m(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : entries_[r]) m.entries_[c].emplace(r, v);
  return m;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  SparseMatrix m(rows_, o.cols_, field_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [k, v] : entries_[r])
      for (const auto& [c, w] : o.entries_[k]) m.add_to(r, c, v * w);
  return m;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<int>& rows) const {
  SparseMatrix m(static_cast<int>(rows.size()), cols_, field_);
  for (int k = 0; k < static_cast<int>(rows.size()); ++k)
    m.entries_[k] = entries_[rows[k]];
  return m;
}

SparseMatrix SparseMatrix::scaled(const Fq& c) const {
  SparseMatrix m(rows_, cols_, field_);
  if (c.is_zero()) return m;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [k, v] : entries_[r]) m.entries_[r].emplace(k, c * v);
  return m;
}

Vec SparseMatrix::column(int c) const {
  Vec out = zero_vec(field_, rows_);
  for (int r = 0; r < rows_; ++r) {
    auto it = entries_[r].find(c);
    if (it != entries_[r].end()) out[r] = it->second;
  }
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (int r = 0; r < rows_; ++r) {
    if (entries_[r].size() != o.entries_[r].size()) return false;
    auto jt = o.entries_[r].begin();
    for (auto it = entries_[r].begin(); it != entries_[r].end(); ++it, ++jt)
      if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

namespace {

// row += c * other, on sparse map rows
void axpy_row(std::map<int, Fq>& row, const Fq& c, const std::map<int, Fq>& other) {
  if (c.is_zero()) return;
  for (const auto& [col, v] : other) {
    auto it = row.find(col);
    if (it == row.end()) {
      row.emplace(col, c * v);
    } else {
      it->second += c * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

RowEchelon::RowEchelon(const SparseMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), field_(m.field()) {
  std::vector<std::map<int, Fq>> work(rows_);
  std::vector<std::map<int, Fq>> trans(rows_);
  for (int r = 0; r < rows_; ++r) {
    work[r] = m.row(r);
    trans[r].emplace(r, Fq::one(field_));
  }
  std::vector<bool> used(rows_, false);
  std::vector<int> pivot_row_of;

  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = 0; r < rows_; ++r) {
      if (used[r]) continue;
      auto it = work[r].find(col);
      if (it == work[r].end()) continue;
      if (pivot < 0 || work[r].size() < best) {
        pivot = r;
        best = work[r].size();
      }
    }
    if (pivot < 0) continue;
    used[pivot] = true;
    Fq inv = work[pivot].at(col).inverse();
    for (auto& [c, v] : work[pivot]) v *= inv;
    for (auto& [c, v] : trans[pivot]) v *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == pivot) continue;
      auto it = work[r].find(col);
      if (it == work[r].end()) continue;
      Fq factor = -it->second;
      axpy_row(work[r], factor, work[pivot]);
      axpy_row(trans[r], factor, trans[pivot]);
    }
    pivot_cols_.push_back(col);
    pivot_row_of.push_back(pivot);
  }
  for (int i = 0; i < static_cast<int>(pivot_row_of.size()); ++i) {
    r_rows_.push_back(std::move(work[pivot_row_of[i]]));
    t_rows_.push_back(std::move(trans[pivot_row_of[i]]));
  }
  for (int r = 0; r < rows_; ++r)
    if (!used[r]) t_null_rows_.push_back(std::move(trans[r]));
}

Vec RowEchelon::transformed(const Vec& b) const {
  Vec c = zero_vec(field_, rank());
  for (int i = 0; i < rank(); ++i)
    for (const auto& [r, v] : t_rows_[i]) c[i] += v * b[r];
  return c;
}

bool RowEchelon::in_column_space(const Vec& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("rhs size mismatch");
  for (const auto& row : t_null_rows_) {
    Fq acc = Fq::zero(field_);
    for (const auto& [r, v] : row) acc += v * b[r];
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::optional<Vec> RowEchelon::solve(const Vec& b) const {
  if (!in_column_space(b)) return std::nullopt;
  Vec c = transformed(b);
  Vec x = zero_vec(field_, cols_);
  for (int i = 0; i < rank(); ++i) x[pivot_cols_[i]] = c[i];
  return x;
}

std::vector<Vec> RowEchelon::kernel_basis() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivot_cols_) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(field_, cols_);
    v[c] = Fq::one(field_);
    for (int i = 0; i < rank(); ++i) {
      auto it = r_rows_[i].find(c);
      if (it != r_rows_[i].end()) v[pivot_cols_[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const SparseMatrix& m) { return RowEchelon(m).rank(); }

std::vector<Vec> kernel_basis(const SparseMatrix& m) {
  return RowEchelon(m).kernel_basis();
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("rhs length does not match row count");
  return RowEchelon(m).solve(b);
}

std::vector<int> column_space_basis(const SparseMatrix& m) {
  return RowEchelon(m).pivot_cols();
}

}  // namespace stratih

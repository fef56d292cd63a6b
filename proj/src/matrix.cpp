#include "rlext/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "rlext/util.hpp"

namespace rlext {
namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("matrices live in different fields");
}

// Elimination determinant on a row-major buffer; destroys the buffer.
Elem det_in_place(const Field& f, std::vector<Elem>& a, int n) {
  bool negate = false;
  Elem det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r) {
      if (a[static_cast<size_t>(r) * n + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = c; j < n; ++j)
        std::swap(a[static_cast<size_t>(piv) * n + j], a[static_cast<size_t>(c) * n + j]);
      negate = !negate;
    }
    const Elem pv = a[static_cast<size_t>(c) * n + c];
    det = f.mul(det, pv);
    const Elem pinv = f.inv(pv);
    for (int r = c + 1; r < n; ++r) {
      const Elem factor = f.mul(a[static_cast<size_t>(r) * n + c], pinv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j)
        a[static_cast<size_t>(r) * n + j] =
            f.sub(a[static_cast<size_t>(r) * n + j],
                  f.mul(factor, a[static_cast<size_t>(c) * n + j]));
    }
  }
  return negate ? f.neg(det) : det;
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref_in_place(const Field& f, std::vector<Elem>& a, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (a[static_cast<size_t>(i) * cols + c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j)
        std::swap(a[static_cast<size_t>(piv) * cols + j], a[static_cast<size_t>(r) * cols + j]);
    const Elem scale = f.inv(a[static_cast<size_t>(r) * cols + c]);
    for (int j = c; j < cols; ++j)
      a[static_cast<size_t>(r) * cols + j] = f.mul(a[static_cast<size_t>(r) * cols + j], scale);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = a[static_cast<size_t>(i) * cols + c];
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<size_t>(i) * cols + j] =
            f.sub(a[static_cast<size_t>(i) * cols + j],
                  f.mul(factor, a[static_cast<size_t>(r) * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(static_cast<size_t>(rows) * cols, 0) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(std::move(field), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::set(int r, int c, Elem v) {
  entries_[static_cast<size_t>(r) * cols_ + c] = field_->check(v);
}

std::span<const Elem> Matrix::row(int r) const {
  return {entries_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (cols_ != rhs.rows_) throw std::invalid_argument("inner dimensions differ");
  const Field& f = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int l = 0; l < cols_; ++l) {
      const Elem a = (*this)(i, l);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Elem prod = f.mul(a, rhs(l, j));
        out.set(i, j, f.add(out(i, j), prod));
      }
    }
  }
  return out;
}

std::vector<Elem> Matrix::mul_vector(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector length does not match column count");
  const Field& f = *field_;
  std::vector<Elem> out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (int j = 0; j < cols_; ++j) acc = f.add(acc, f.mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::hconcat(const Matrix& right) const {
  require_same_field(*this, right);
  if (rows_ != right.rows_) throw std::invalid_argument("row counts differ");
  Matrix out(field_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(i, j, (*this)(i, j));
    for (int j = 0; j < right.cols_; ++j) out.set(i, cols_ + j, right(i, j));
  }
  return out;
}

Matrix Matrix::submatrix_cols(std::span<const int> cols) const {
  Matrix out(field_, rows_, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (cols[j] < 0 || cols[j] >= cols_) throw std::invalid_argument("column index out of range");
    for (int i = 0; i < rows_; ++i) out.set(i, j, (*this)(i, cols[j]));
  }
  return out;
}

Elem Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<Elem> a(entries_);
  return det_in_place(*field_, a, rows_);
}

int Matrix::rank() const {
  std::vector<Elem> a(entries_);
  return static_cast<int>(rref_in_place(*field_, a, rows_, cols_).size());
}

Matrix Matrix::rref() const {
  Matrix out(*this);
  rref_in_place(*field_, out.entries_, rows_, cols_);
  return out;
}

Matrix Matrix::null_space() const {
  const Field& f = *field_;
  std::vector<Elem> a(entries_);
  const std::vector<int> pivots = rref_in_place(f, a, rows_, cols_);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < cols_; ++c) {
      if (pi < pivots.size() && pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix out(field_, static_cast<int>(free_cols.size()), cols_);
  for (int i = 0; i < static_cast<int>(free_cols.size()); ++i) {
    const int fc = free_cols[i];
    out.set(i, fc, 1);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      out.set(i, pivots[r], f.neg(a[static_cast<size_t>(r) * cols_ + fc]));
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& other) const {
  return field() == other.field() && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

Matrix Matrix::vandermonde(FieldPtr field, std::span<const Elem> points, int nrows) {
  if (nrows < 1) throw std::invalid_argument("vandermonde needs at least one row");
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j]) throw std::invalid_argument("points must be distinct");
  const Field& f = *field;
  Matrix out(field, nrows, n);
  for (int j = 0; j < n; ++j) out.set(0, j, 1);
  for (int r = 1; r < nrows; ++r)
    for (int j = 0; j < n; ++j) out.set(r, j, f.mul(out(r - 1, j), f.check(points[j])));
  return out;
}

Matrix Matrix::generalized_vandermonde(FieldPtr field, std::span<const int> exponents,
                                       std::span<const Elem> points) {
  const int m = static_cast<int>(points.size());
  if (static_cast<int>(exponents.size()) != m - 1)
    throw std::invalid_argument("need exactly one fewer exponent than points");
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 1) throw std::invalid_argument("exponents must be positive");
    if (i > 0 && exponents[i] <= exponents[i - 1])
      throw std::invalid_argument("exponents must be strictly increasing");
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (points[i] == points[j]) throw std::invalid_argument("points must be distinct");
  const Field& f = *field;
  Matrix out(field, m, m);
  for (int j = 0; j < m; ++j) out.set(0, j, 1);
  for (int r = 1; r < m; ++r)
    for (int j = 0; j < m; ++j) out.set(r, j, f.pow(points[j], exponents[r - 1]));
  return out;
}

Elem homogeneous_poly(const Field& f, int r, std::span<const Elem> values) {
  if (values.empty()) throw std::invalid_argument("need at least one variable");
  if (r < 0) return 0;
  const int l = static_cast<int>(values.size());
  // P(r, j) = x_j P(r-1, j) + P(r, j-1), with P(r, 1) = x_1^r.
  std::vector<Elem> col(static_cast<size_t>(r) + 1);
  for (int d = 0; d <= r; ++d) col[d] = f.pow(values[0], d);
  for (int j = 1; j < l; ++j) {
    const Elem x = f.check(values[j]);
    for (int d = 1; d <= r; ++d) col[d] = f.add(f.mul(x, col[d - 1]), col[d]);
  }
  return col[r];
}

Elem gvand_factor(const Field& f, std::span<const int> exponents,
                  std::span<const Elem> points) {
  const int m = static_cast<int>(exponents.size());
  if (static_cast<int>(points.size()) != m + 1)
    throw std::invalid_argument("need exactly one more point than exponents");
  std::vector<Elem> d(static_cast<size_t>(m) * m);
  for (int j = 0; j < m; ++j)
    for (int c = 0; c < m; ++c)
      d[static_cast<size_t>(j) * m + c] =
          homogeneous_poly(f, exponents[j] - (c + 1), points.subspan(0, c + 2));
  return det_in_place(f, d, m);
}

std::vector<Elem> cramer_unit_solution(const Field& f, std::span<const Elem> points) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw std::invalid_argument("need at least one point");
  std::vector<Elem> w(n);
  for (int i = 0; i < n; ++i) {
    Elem prod = 1;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Elem diff = f.sub(points[i], points[j]);
      if (diff == 0) throw std::invalid_argument("points must be distinct");
      prod = f.mul(prod, diff);
    }
    w[i] = f.inv(prod);
  }
  return w;
}

int min_dependent_columns(const Matrix& m) {
  const int cols = m.cols();
  const int cap = std::min(cols, m.rows() + 1);
  for (int w = 1; w <= cap; ++w) {
    bool found = false;
    for_each_combination(cols, w, [&](const std::vector<int>& idx) {
      if (m.submatrix_cols(idx).rank() < w) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return w;
  }
  return cols + 1;
}

}  // namespace rlext

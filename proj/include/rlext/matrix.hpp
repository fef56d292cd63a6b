#pragma once

#include <span>
#include <vector>

#include "rlext/gf.hpp"

namespace rlext {

// Dense matrix over a shared Field. Entries are canonical encodings; all
// arithmetic is exact. Binary operations require both operands to live in
// the same field.
class Matrix {
 public:
  Matrix(FieldPtr field, int rows, int cols);
  static Matrix identity(FieldPtr field, int n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  Elem operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, Elem v);
  std::span<const Elem> row(int r) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  std::vector<Elem> mul_vector(std::span<const Elem> v) const;
  Matrix hconcat(const Matrix& right) const;
  Matrix submatrix_cols(std::span<const int> cols) const;

  // Gaussian elimination with first-nonzero pivoting; exact over the field.
  Elem determinant() const;
  int rank() const;
  Matrix rref() const;
  // Rows span {x : M x^T = 0}; empty (0 x cols) when M has full column rank.
  Matrix null_space() const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  // Row r holds the r-th powers of the points; points must be distinct.
  static Matrix vandermonde(FieldPtr field, std::span<const Elem> points, int nrows);
  // Square matrix: an all-ones first row followed by rows points^e for each
  // exponent e; exponents are strictly increasing positive integers and
  // there is exactly one fewer exponent than points.
  static Matrix generalized_vandermonde(FieldPtr field, std::span<const int> exponents,
                                        std::span<const Elem> points);

 private:
  FieldPtr field_;
  int rows_;
  int cols_;
  std::vector<Elem> entries_;
};

// Complete homogeneous symmetric polynomial of degree r in the given values:
// the sum of all monomials x1^i1 ... xl^il with i1 + ... + il == r.
// Zero for r < 0, one for r == 0.
Elem homogeneous_poly(const Field& f, int r, std::span<const Elem> values);

// Cofactor D with det(generalized_vandermonde(exponents, points)) equal to
// D * det(vandermonde(points)). Takes m exponents and m + 1 points.
Elem gvand_factor(const Field& f, std::span<const int> exponents,
                  std::span<const Elem> points);

// Unique w with vandermonde(points, n) * w^T = (0, ..., 0, 1)^T, by the
// closed form w_i = 1 / prod_{j != i} (points_i - points_j).
std::vector<Elem> cramer_unit_solution(const Field& f, std::span<const Elem> points);

// Smallest w such that some w columns of M are linearly dependent, found by
// an ascending scan over column subsets; returns cols() + 1 when all columns
// are independent.
int min_dependent_columns(const Matrix& m);

}  // namespace rlext

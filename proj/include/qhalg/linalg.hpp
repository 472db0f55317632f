#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qhalg/scalar.hpp"

namespace qhalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const Field& f);
Vec unit_vec(std::size_t n, std::size_t i, const Field& f);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Scalar& s);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Field& f);
  static Matrix identity(std::size_t n, const Field& f);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows, const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);
  void append_row(const Vec& v);

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  /// Rows [r0, r1) and columns [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns in order.
/// Zero rows end up at the bottom.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis (as rows) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
/// Some x with m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

/// A linear subspace of F^d, stored canonically as RREF rows.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const Field& f);
  static Subspace full(std::size_t ambient, const Field& f);
  /// Span of the rows of m.
  static Subspace span(const Matrix& rows);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient, const Field& f);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Field& field() const { return field_; }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t k) const { return basis_.row(k); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Columns that are not pivots; the matching unit vectors span a complement.
  std::vector<std::size_t> complement_columns() const;

  /// v minus its component along the subspace; zero at every pivot.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  /// Coordinates with respect to basis(); v must lie in the subspace.
  Vec coordinates(const Vec& v) const;
  /// Adds v to the span; returns whether the dimension grew.
  bool insert(const Vec& v);

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool is_subspace_of(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void normalize();

  std::size_t ambient_ = 0;
  Field field_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Vec& v);

}  // namespace qhalg

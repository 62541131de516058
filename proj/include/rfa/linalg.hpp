#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rfa/scalar.hpp"

namespace rfa {

/// Dense matrix over an exact field. Prime fields keep raw residues so the
/// elimination kernels run on machine integers; cyclotomic fields store Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix column(const std::vector<Scalar>& v, const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool prime_mode() const { return field_.is_prime(); }

  Scalar get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& s);
  void add_to(std::size_t i, std::size_t j, const Scalar& s);
  bool is_zero_at(std::size_t i, std::size_t j) const;

  // raw residue access, prime fields only
  std::int64_t raw(std::size_t i, std::size_t j) const { return p_[i * cols_ + j]; }
  std::int64_t& raw(std::size_t i, std::size_t j) { return p_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  Matrix col(std::size_t j) const;
  std::vector<Scalar> col_vector(std::size_t j) const;
  void set_col(std::size_t j, const Matrix& v);
  /// Nonzero entries of column j as (row, value) pairs.
  std::vector<std::pair<std::size_t, Scalar>> col_nonzeros(std::size_t j) const;

  static Matrix hstack(const std::vector<Matrix>& parts, const FieldSpec& f, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& parts, const FieldSpec& f, std::size_t cols);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> p_;
  std::vector<Scalar> q_;

  friend struct LinalgKernels;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of { x : m x = 0 }.
Matrix nullspace(const Matrix& m);
/// Some x with a x = b, or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Indices of a maximal independent set of columns, chosen greedily in the given order.
std::vector<std::size_t> independent_columns(const Matrix& m, bool reverse_order = false);

/// Coordinates with respect to a basis given by the columns of `basis`
/// (linearly independent). Built once, then applied to many vectors.
class Section {
 public:
  Section() = default;
  Section(const Matrix& basis, bool reverse_pivots = false);
  std::size_t dim() const { return pivot_rows_.size(); }
  /// coords of each column of v (v must lie in the span; not checked)
  Matrix coords(const Matrix& v) const;
  /// same, but verifies membership and returns nullopt when v is outside the span
  std::optional<Matrix> coords_checked(const Matrix& v) const;
  const Matrix& basis() const { return basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;
  Matrix inv_;  // inverse of basis restricted to pivot rows
};

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng);
Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng);

}  // namespace rfa

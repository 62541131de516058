#pragma once

#include <random>
#include <vector>

#include "rfa/linalg.hpp"

namespace rfa {

/// Finite-dimensional algebra in coordinates: left[i] y = e_i y, right[i] y = y e_i.
struct AbstractAlgebra {
  FieldSpec field;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  Matrix unit;  // column

  std::size_t dim() const { return unit.rows(); }
  /// left multiplication by the element x (a column)
  Matrix left_mult(const Matrix& x) const;
  Matrix right_mult(const Matrix& x) const;
  Matrix mul(const Matrix& x, const Matrix& y) const { return left_mult(x) * y; }
};

/// One simple block M_k of a split semisimple algebra.
struct SplitBlock {
  Matrix idempotent;   // central primitive idempotent
  int k = 1;           // the block is k x k matrices
  Matrix left_ideal;   // columns span a minimal left ideal inside the block
};

/// Wedderburn blocks of a split semisimple algebra over a finite field.
/// Throws NonSplit when an eigenvalue search leaves the field or gives up.
std::vector<SplitBlock> split_semisimple(const AbstractAlgebra& A, std::mt19937_64& rng);

/// Columns spanning the center.
Matrix center(const AbstractAlgebra& A);

/// Monic minimal polynomial of a square matrix, lowest degree first.
std::vector<Scalar> min_poly(const Matrix& T);
/// Distinct roots in the (finite) field, sorted by residue code.
std::vector<Scalar> roots_in_field(const std::vector<Scalar>& poly, std::mt19937_64& rng);

}  // namespace rfa

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rfa {

using IntVec = std::vector<std::int64_t>;

/// Row span of integer vectors modulo q, kept in Howell form so that
/// membership and canonical (lexicographically least) coset representatives
/// are computed by plain reduction.
class HowellSpan {
 public:
  HowellSpan(std::int64_t modulus, std::size_t width);

  void insert(IntVec v);
  /// Reduce above pivots; call after the last insert.
  void finalize();

  /// Least representative of v + span (entries in [0, q)).
  IntVec reduce(IntVec v) const;
  bool contains(const IntVec& v) const;

  std::int64_t modulus() const { return q_; }
  std::size_t width() const { return w_; }
  /// rows in pivot order
  std::vector<IntVec> rows() const;
  /// pivot value at column c (q if the column has no pivot)
  std::int64_t pivot(std::size_t c) const;

 private:
  std::int64_t q_;
  std::size_t w_;
  std::vector<std::optional<IntVec>> rows_;  // rows_[c] has leading column c
  bool finalized_ = false;

  void insert_from(IntVec v, std::size_t start);
};

/// Generators of { x in (Z/q)^k : M x = 0 mod q } for an m x k matrix M (row-major rows).
std::vector<IntVec> kernel_mod(const std::vector<IntVec>& M, std::size_t k, std::int64_t q);

/// Some x with M x = rhs (mod q), or nullopt.
std::optional<IntVec> solve_mod(const std::vector<IntVec>& M, std::size_t k, const IntVec& rhs, std::int64_t q);

}  // namespace rfa

#pragma once

// Sparse column access shared by the algebra and module code.

#include <map>
#include <utility>
#include <vector>

#include "rfa/linalg.hpp"

namespace rfa::detail {

using Entry = std::pair<std::size_t, Scalar>;
using Cols = std::vector<std::vector<Entry>>;
using SVec = std::map<std::size_t, Scalar>;

inline Cols columns(const Matrix& m) {
  Cols c(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) c[j] = m.col_nonzeros(j);
  return c;
}

inline void add(SVec& v, std::size_t i, const Scalar& s) {
  auto [it, inserted] = v.try_emplace(i, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) v.erase(it);
  } else if (s.is_zero()) {
    v.erase(it);
  }
}

inline bool same(const SVec& a, const SVec& b) { return a == b; }

inline SVec scale(const SVec& v, const Scalar& s) {
  SVec out;
  if (s.is_zero()) return out;
  for (const auto& [i, x] : v) out.emplace(i, x * s);
  return out;
}

inline SVec from_col(const std::vector<Entry>& c) { return SVec(c.begin(), c.end()); }

inline Matrix to_matrix(const std::vector<SVec>& cols, const FieldSpec& f, std::size_t rows) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, x] : cols[j]) m.set(i, j, x);
  return m;
}

}  // namespace rfa::detail

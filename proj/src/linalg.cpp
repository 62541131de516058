#include "rfa/linalg.hpp"

#include <algorithm>

namespace rfa {

namespace {

inline std::int64_t addm(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t r = a + b;
  return r >= p ? r - p : r;
}

inline std::int64_t subm(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t r = a - b;
  return r < 0 ? r + p : r;
}

std::int64_t invm(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

void check_shape(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::ShapeMismatch, what);
}

}  // namespace

struct LinalgKernels {
  static std::vector<std::int64_t>& p(Matrix& m) { return m.p_; }
  static const std::vector<std::int64_t>& p(const Matrix& m) { return m.p_; }
  static std::vector<Scalar>& q(Matrix& m) { return m.q_; }
  static const std::vector<Scalar>& q(const Matrix& m) { return m.q_; }
};

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime())
    p_.assign(rows * cols, 0);
  else
    q_.assign(rows * cols, Scalar::zero(f));
}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v, const FieldSpec& f) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

Scalar Matrix::get(std::size_t i, std::size_t j) const {
  if (field_.is_prime()) return Scalar::from_int(field_, p_[i * cols_ + j]);
  return q_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (!(s.field() == field_)) throw Error(ErrorKind::FieldMismatch, "matrix entry from another field");
  if (field_.is_prime())
    p_[i * cols_ + j] = s.residue();
  else
    q_[i * cols_ + j] = s;
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& s) {
  if (field_.is_prime()) {
    if (!(s.field() == field_)) throw Error(ErrorKind::FieldMismatch, "matrix entry from another field");
    p_[i * cols_ + j] = addm(p_[i * cols_ + j], s.residue(), field_.modulus);
  } else {
    q_[i * cols_ + j] += s;
  }
}

bool Matrix::is_zero_at(std::size_t i, std::size_t j) const {
  if (field_.is_prime()) return p_[i * cols_ + j] == 0;
  return q_[i * cols_ + j].is_zero();
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_shape(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape");
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "matrix sum");
  Matrix r = *this;
  if (field_.is_prime()) {
    for (std::size_t k = 0; k < p_.size(); ++k) r.p_[k] = addm(p_[k], o.p_[k], field_.modulus);
  } else {
    for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] += o.q_[k];
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_shape(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape");
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "matrix difference");
  Matrix r = *this;
  if (field_.is_prime()) {
    for (std::size_t k = 0; k < p_.size(); ++k) r.p_[k] = subm(p_[k], o.p_[k], field_.modulus);
  } else {
    for (std::size_t k = 0; k < q_.size(); ++k) r.q_[k] -= o.q_[k];
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_shape(cols_ == o.rows_, "matrix product shape");
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "matrix product");
  Matrix r(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    const std::int64_t p = field_.modulus;
    // accumulate in unsigned 128-free fashion: reduce every step (p < 2^31)
    for (std::size_t i = 0; i < rows_; ++i) {
      std::int64_t* out = &r.p_[i * o.cols_];
      for (std::size_t k = 0; k < cols_; ++k) {
        std::int64_t a = p_[i * cols_ + k];
        if (a == 0) continue;
        const std::int64_t* row = &o.p_[k * o.cols_];
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (row[j] == 0) continue;
          out[j] = (out[j] + a * row[j]) % p;
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = q_[i * cols_ + k];
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Scalar& b = o.q_[k * o.cols_ + j];
          if (b.is_zero()) continue;
          r.q_[i * o.cols_ + j] += a * b;
        }
      }
  }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  if (field_.is_prime()) {
    if (!(s.field() == field_)) throw Error(ErrorKind::FieldMismatch, "scaling");
    for (auto& x : r.p_) x = x * s.residue() % field_.modulus;
  } else {
    for (auto& x : r.q_) x = x * s;
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        r.p_[j * rows_ + i] = p_[i * cols_ + j];
      else
        r.q_[j * rows_ + i] = q_[i * cols_ + j];
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return field_.is_prime() ? p_ == o.p_ : q_ == o.q_;
}

bool Matrix::is_zero() const {
  if (field_.is_prime()) return std::all_of(p_.begin(), p_.end(), [](std::int64_t x) { return x == 0; });
  return std::all_of(q_.begin(), q_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime()) {
        if (p_[i * cols_ + j] != (i == j ? 1 : 0)) return false;
      } else {
        const Scalar& x = q_[i * cols_ + j];
        if (i == j ? !x.is_one() : !x.is_zero()) return false;
      }
    }
  return true;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  Matrix r(field_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (field_.is_prime())
        r.p_[i * cs.size() + j] = p_[rs[i] * cols_ + cs[j]];
      else
        r.q_[i * cs.size() + j] = q_[rs[i] * cols_ + cs[j]];
    }
  return r;
}

Matrix Matrix::col(std::size_t j) const {
  Matrix r(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (field_.is_prime())
      r.p_[i] = p_[i * cols_ + j];
    else
      r.q_[i] = q_[i * cols_ + j];
  }
  return r;
}

std::vector<Scalar> Matrix::col_vector(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(get(i, j));
  return v;
}

void Matrix::set_col(std::size_t j, const Matrix& v) {
  check_shape(v.rows_ == rows_ && v.cols_ == 1, "set_col shape");
  for (std::size_t i = 0; i < rows_; ++i) {
    if (field_.is_prime())
      p_[i * cols_ + j] = v.p_[i];
    else
      q_[i * cols_ + j] = v.q_[i];
  }
}

std::vector<std::pair<std::size_t, Scalar>> Matrix::col_nonzeros(std::size_t j) const {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!is_zero_at(i, j)) out.emplace_back(i, get(i, j));
  return out;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, const FieldSpec& f, std::size_t rows) {
  std::size_t c = 0;
  for (const auto& m : parts) {
    check_shape(m.rows_ == rows, "hstack rows");
    c += m.cols_;
  }
  Matrix r(f, rows, c);
  std::size_t off = 0;
  for (const auto& m : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (f.is_prime())
          r.p_[i * c + off + j] = m.p_[i * m.cols_ + j];
        else
          r.q_[i * c + off + j] = m.q_[i * m.cols_ + j];
      }
    off += m.cols_;
  }
  return r;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, const FieldSpec& f, std::size_t cols) {
  std::size_t rr = 0;
  for (const auto& m : parts) {
    check_shape(m.cols_ == cols, "vstack cols");
    rr += m.rows_;
  }
  Matrix r(f, rr, cols);
  std::size_t off = 0;
  for (const auto& m : parts) {
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (f.is_prime())
          r.p_[(off + i) * cols + j] = m.p_[i * cols + j];
        else
          r.q_[(off + i) * cols + j] = m.q_[i * cols + j];
      }
    off += m.rows_;
  }
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "kron");
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const bool pm = a.prime_mode();
  const std::int64_t p = a.field().modulus;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.is_zero_at(i, j)) continue;
      Scalar av = a.get(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.is_zero_at(k, l)) continue;
          if (pm)
            r.raw(i * b.rows() + k, j * b.cols() + l) = a.raw(i, j) * b.raw(k, l) % p;
          else
            r.set(i * b.rows() + k, j * b.cols() + l, av * b.get(k, l));
        }
    }
  return r;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  Matrix& a = res.reduced;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t row = 0;
  if (a.prime_mode()) {
    const std::int64_t p = a.field().modulus;
    auto& d = LinalgKernels::p(a);
    for (std::size_t c = 0; c < C && row < R; ++c) {
      std::size_t piv = R;
      for (std::size_t i = row; i < R; ++i)
        if (d[i * C + c] != 0) {
          piv = i;
          break;
        }
      if (piv == R) continue;
      if (piv != row)
        for (std::size_t j = 0; j < C; ++j) std::swap(d[piv * C + j], d[row * C + j]);
      std::int64_t inv = invm(d[row * C + c], p);
      for (std::size_t j = c; j < C; ++j) d[row * C + j] = d[row * C + j] * inv % p;
      for (std::size_t i = 0; i < R; ++i) {
        if (i == row) continue;
        std::int64_t f = d[i * C + c];
        if (f == 0) continue;
        for (std::size_t j = c; j < C; ++j) {
          std::int64_t x = d[row * C + j];
          if (x == 0) continue;
          d[i * C + j] = subm(d[i * C + j], f * x % p, p);
        }
      }
      res.pivots.push_back(c);
      ++row;
    }
  } else {
    auto& d = LinalgKernels::q(a);
    for (std::size_t c = 0; c < C && row < R; ++c) {
      std::size_t piv = R;
      for (std::size_t i = row; i < R; ++i)
        if (!d[i * C + c].is_zero()) {
          piv = i;
          break;
        }
      if (piv == R) continue;
      if (piv != row)
        for (std::size_t j = 0; j < C; ++j) std::swap(d[piv * C + j], d[row * C + j]);
      Scalar inv = d[row * C + c].inverse();
      for (std::size_t j = c; j < C; ++j) d[row * C + j] = d[row * C + j] * inv;
      for (std::size_t i = 0; i < R; ++i) {
        if (i == row) continue;
        Scalar f = d[i * C + c];
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < C; ++j) {
          if (d[row * C + j].is_zero()) continue;
          d[i * C + j] -= f * d[row * C + j];
        }
      }
      res.pivots.push_back(c);
      ++row;
    }
  }
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_piv(C, false);
  for (auto c : r.pivots) is_piv[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_piv[c]) free.push_back(c);
  Matrix ns(m.field(), C, free.size());
  Scalar one = Scalar::one(m.field());
  for (std::size_t k = 0; k < free.size(); ++k) {
    std::size_t f = free[k];
    ns.set(f, k, one);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      if (r.reduced.is_zero_at(i, f)) continue;
      ns.set(r.pivots[i], k, -r.reduced.get(i, f));
    }
  }
  return ns;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  check_shape(a.rows() == b.rows(), "solve shape");
  Matrix aug = Matrix::hstack({a, b}, a.field(), a.rows());
  RrefResult r = rref(aug);
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    std::size_t c = r.pivots[i];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!r.reduced.is_zero_at(i, a.cols() + j)) x.set(c, j, r.reduced.get(i, a.cols() + j));
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  check_shape(m.rows() == m.cols(), "inverse of non-square matrix");
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) throw Error(ErrorKind::NotInvertible, "singular matrix");
  return *x;
}

Scalar determinant(const Matrix& m) {
  check_shape(m.rows() == m.cols(), "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!a.is_zero_at(i, c)) {
        piv = i;
        break;
      }
    if (piv == n) return Scalar::zero(m.field());
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar t = a.get(piv, j);
        a.set(piv, j, a.get(c, j));
        a.set(c, j, t);
      }
      det = -det;
    }
    Scalar pv = a.get(c, c);
    det = det * pv;
    Scalar inv = pv.inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.is_zero_at(i, c)) continue;
      Scalar f = a.get(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a.set(i, j, a.get(i, j) - f * a.get(c, j));
    }
  }
  return det;
}

std::vector<std::size_t> independent_columns(const Matrix& m, bool reverse_order) {
  if (!reverse_order) return rref(m).pivots;
  std::vector<std::size_t> order(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) order[j] = m.cols() - 1 - j;
  Matrix rev = m.submatrix([&] {
    std::vector<std::size_t> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) r[i] = i;
    return r;
  }(), order);
  auto piv = rref(rev).pivots;
  std::vector<std::size_t> out;
  for (auto c : piv) out.push_back(order[c]);
  std::sort(out.begin(), out.end());
  return out;
}

Section::Section(const Matrix& basis, bool reverse_pivots) : basis_(basis) {
  // pivot rows of the basis = independent columns of its transpose
  pivot_rows_ = independent_columns(basis.transpose(), reverse_pivots);
  if (pivot_rows_.size() != basis.cols()) throw Error(ErrorKind::InternalInconsistency, "section of a dependent basis");
  std::vector<std::size_t> all(basis.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  inv_ = inverse(basis.submatrix(pivot_rows_, all));
}

Matrix Section::coords(const Matrix& v) const {
  std::vector<std::size_t> all(v.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return inv_ * v.submatrix(pivot_rows_, all);
}

std::optional<Matrix> Section::coords_checked(const Matrix& v) const {
  Matrix c = coords(v);
  if (basis_ * c != v) return std::nullopt;
  return c;
}

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.is_prime()) {
    std::uniform_int_distribution<std::int64_t> d(0, f.modulus - 1);
    return Scalar::from_int(f, d(rng));
  }
  if (f.is_galois()) {
    std::uniform_int_distribution<std::int64_t> d(0, f.size() - 1);
    return Scalar::from_code(f, d(rng));
  }
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  std::vector<Rational> c(static_cast<std::size_t>(f.degree()));
  for (auto& x : c) x = Rational(d(rng));
  return Scalar::from_coeffs(f, c);
}

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, random_scalar(f, rng));
  return m;
}

}  // namespace rfa

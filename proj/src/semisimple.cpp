#include "rfa/semisimple.hpp"

#include <algorithm>
#include <cmath>

#include "rfa/error.hpp"

namespace rfa {

namespace {

using Poly = std::vector<Scalar>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  Scalar lead_inv = m.back().inverse();
  while (a.size() > dm) {
    Scalar c = a.back() * lead_inv;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] -= c * m[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const FieldSpec& f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

Poly poly_powmod(Poly base, std::int64_t e, const Poly& m, const FieldSpec& f) {
  Poly result{Scalar::one(f)};
  base = poly_mod(base, m);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, f), m);
    base = poly_mod(poly_mul(base, base, f), m);
    e >>= 1;
  }
  return result;
}

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar r = Scalar::zero(x.field());
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// distinct linear factors of a squarefree product of linear factors, odd q
void split_roots(const Poly& g, const FieldSpec& f, std::mt19937_64& rng, std::vector<Scalar>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(-g[0] / g[1]);
    return;
  }
  const std::int64_t q = f.size();
  for (int attempt = 0; attempt < 200; ++attempt) {
    Poly base{random_scalar(f, rng), Scalar::one(f)};
    Poly h = poly_powmod(base, (q - 1) / 2, g, f);
    if (h.empty()) continue;
    h[0] -= Scalar::one(f);
    Poly d = poly_gcd(g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, f, rng, out);
      // g / d
      Poly rest = g, quo(g.size() - d.size() + 1, Scalar::zero(f));
      for (std::size_t k = quo.size(); k-- > 0;) {
        Scalar c = rest[k + d.size() - 1];
        quo[k] = c;
        for (std::size_t j = 0; j < d.size(); ++j) rest[k + j] -= c * d[j];
      }
      split_roots(quo, f, rng, out);
      return;
    }
  }
  throw Error(ErrorKind::NonSplit, "root splitting did not converge");
}

Scalar element_of_code(const FieldSpec& f, std::int64_t c) {
  return f.is_prime() ? Scalar::from_int(f, c) : Scalar::from_code(f, c);
}

Matrix restrict_to(const Matrix& T, const Matrix& S) { return Section(S).coords(T * S); }

// Idempotents of the commutative algebra eZ obtained from the eigenvalues of z.
std::vector<Matrix> eigen_idempotents(const AbstractAlgebra& A, const Matrix& e, const Matrix& z,
                                      const Matrix& sub, std::mt19937_64& rng) {
  Matrix T = restrict_to(A.left_mult(z), sub);
  Poly mp = min_poly(T);
  auto roots = roots_in_field(mp, rng);
  if (roots.size() + 1 != mp.size())
    throw Error(ErrorKind::NonSplit, "central element has eigenvalues outside " + A.field.name());
  std::vector<Matrix> out;
  if (roots.size() == 1) return {e};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Matrix v = e;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      Matrix shifted = z - e.scaled(roots[j]);
      v = A.mul(shifted, v).scaled((roots[i] - roots[j]).inverse());
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

Matrix AbstractAlgebra::left_mult(const Matrix& x) const {
  Matrix r(field, dim(), dim());
  for (std::size_t i = 0; i < left.size(); ++i)
    if (!x.is_zero_at(i, 0)) r = r + left[i].scaled(x.get(i, 0));
  return r;
}

Matrix AbstractAlgebra::right_mult(const Matrix& x) const {
  Matrix r(field, dim(), dim());
  for (std::size_t i = 0; i < right.size(); ++i)
    if (!x.is_zero_at(i, 0)) r = r + right[i].scaled(x.get(i, 0));
  return r;
}

std::vector<Scalar> min_poly(const Matrix& T) {
  const FieldSpec& f = T.field();
  const std::size_t n = T.rows();
  std::vector<Matrix> vecs;
  Matrix P = Matrix::identity(f, n);
  auto vectorize = [&](const Matrix& M) {
    Matrix v(f, n * n, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!M.is_zero_at(i, j)) v.set(i * n + j, 0, M.get(i, j));
    return v;
  };
  for (std::size_t d = 0; d <= n; ++d) {
    Matrix v = vectorize(P);
    if (!vecs.empty()) {
      Matrix basis = Matrix::hstack(vecs, f, n * n);
      auto x = solve(basis, v);
      if (x) {
        // P = sum x_i T^i, so the polynomial is t^d - sum x_i t^i
        Poly p(d + 1, Scalar::zero(f));
        for (std::size_t i = 0; i < d; ++i) p[i] = -x->get(i, 0);
        p[d] = Scalar::one(f);
        return p;
      }
    }
    vecs.push_back(v);
    P = P * T;
  }
  throw Error(ErrorKind::InternalInconsistency, "minimal polynomial degree exceeds size");
}

std::vector<Scalar> roots_in_field(const std::vector<Scalar>& poly, std::mt19937_64& rng) {
  Poly p = poly;
  trim(p);
  if (p.empty()) throw Error(ErrorKind::InvalidData, "roots of the zero polynomial");
  const FieldSpec& f = p[0].field();
  if (!f.is_finite()) throw Error(ErrorKind::NonSplit, "root search needs a finite field");
  std::vector<Scalar> out;
  const std::int64_t q = f.size();
  if (q <= (1 << 17) || q % 2 == 0) {
    for (std::int64_t c = 0; c < q; ++c) {
      Scalar x = element_of_code(f, c);
      if (eval(p, x).is_zero()) out.push_back(x);
    }
    return out;
  }
  // gcd with x^q - x keeps the distinct linear factors
  Poly x{Scalar::zero(f), Scalar::one(f)};
  Poly xq = poly_powmod(x, q, p, f);
  xq.resize(std::max<std::size_t>(xq.size(), 2), Scalar::zero(f));
  xq[1] -= Scalar::one(f);
  Poly g = poly_gcd(p, xq);
  split_roots(g, f, rng, out);
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
  return out;
}

Matrix center(const AbstractAlgebra& A) {
  const std::size_t d = A.dim();
  std::vector<Matrix> rows;
  for (std::size_t i = 0; i < A.left.size(); ++i) rows.push_back(A.left[i] - A.right[i]);
  if (rows.empty()) return Matrix::identity(A.field, d);
  return nullspace(Matrix::vstack(rows, A.field, d));
}

std::vector<SplitBlock> split_semisimple(const AbstractAlgebra& A, std::mt19937_64& rng) {
  const FieldSpec& f = A.field;
  Matrix Z = center(A);
  const std::size_t zdim = Z.cols();

  // central primitive idempotents by repeated eigenvalue splitting
  std::vector<Matrix> done;
  std::vector<Matrix> todo{A.unit};
  while (!todo.empty()) {
    Matrix e = todo.back();
    todo.pop_back();
    Matrix eZ = A.left_mult(e) * Z;
    auto cols = independent_columns(eZ);
    Matrix sub = eZ.submatrix([&] {
      std::vector<std::size_t> r(eZ.rows());
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
      return r;
    }(), cols);
    if (cols.size() <= 1) {
      done.push_back(e);
      continue;
    }
    bool split = false;
    for (int attempt = 0; attempt < 100 && !split; ++attempt) {
      Matrix z = sub * random_matrix(f, sub.cols(), 1, rng);
      auto parts = eigen_idempotents(A, e, z, sub, rng);
      if (parts.size() > 1) {
        for (auto& p : parts) todo.push_back(std::move(p));
        split = true;
      }
    }
    if (!split) throw Error(ErrorKind::NonSplit, "center does not split over " + f.name());
  }
  if (done.size() != zdim) throw Error(ErrorKind::NonSplit, "center is not split semisimple");

  std::vector<SplitBlock> blocks;
  for (const auto& e : done) {
    Matrix Le = A.left_mult(e);
    auto cols = independent_columns(Le);
    std::vector<std::size_t> all(Le.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Matrix B = Le.submatrix(all, cols);
    const std::size_t bd = B.cols();
    int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(bd))));
    if (static_cast<std::size_t>(k) * k != bd)
      throw Error(ErrorKind::NonSplit, "block of dimension " + std::to_string(bd) + " is not a full matrix algebra");
    SplitBlock blk;
    blk.idempotent = e;
    blk.k = k;
    if (k == 1) {
      blk.left_ideal = e;
      blocks.push_back(std::move(blk));
      continue;
    }
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
      Matrix r = B * random_matrix(f, bd, 1, rng);
      Matrix T = restrict_to(A.right_mult(r), B);
      auto mp = min_poly(T);
      for (const auto& lam : roots_in_field(mp, rng)) {
        Matrix shifted = T - Matrix::identity(f, bd).scaled(lam);
        Matrix ns = nullspace(shifted);
        if (ns.cols() == static_cast<std::size_t>(k)) {
          blk.left_ideal = B * ns;
          found = true;
          break;
        }
      }
    }
    if (!found) throw Error(ErrorKind::NonSplit, "no minimal left ideal found over " + f.name());
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

}  // namespace rfa

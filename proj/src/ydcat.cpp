#include "rfa/ydcat.hpp"

#include <deque>

namespace rfa {

namespace {

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

void require_same(const YDModule& V, const YDModule& W) {
  if (V.group.get() != W.group.get() && !(V.group->table() == W.group->table()))
    throw Error(ErrorKind::GroupMismatch, "modules over different groups");
  if (!(V.field == W.field)) throw Error(ErrorKind::FieldMismatch, V.field.name() + " vs " + W.field.name());
}

// Solutions F (rows x cols) of A_k F = F B_k for all k, as matrices.
std::vector<Matrix> intertwiners(const std::vector<Matrix>& As, const std::vector<Matrix>& Bs, std::size_t rows,
                                 std::size_t cols, const FieldSpec& f) {
  const std::size_t nv = rows * cols;
  std::vector<Matrix> out;
  if (nv == 0) return out;
  Matrix sol;
  if (As.empty()) {
    sol = Matrix::identity(f, nv);
  } else {
    Matrix sys(f, As.size() * nv, nv);
    for (std::size_t k = 0; k < As.size(); ++k) {
      const Matrix& A = As[k];
      const Matrix& B = Bs[k];
      // entry (r, c) of A F - F B
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          std::size_t eq = k * nv + r * cols + c;
          for (std::size_t t = 0; t < rows; ++t)
            if (!A.is_zero_at(r, t)) sys.add_to(eq, t * cols + c, A.get(r, t));
          for (std::size_t t = 0; t < cols; ++t)
            if (!B.is_zero_at(t, c)) sys.add_to(eq, r * cols + t, -B.get(t, c));
        }
    }
    sol = nullspace(sys);
  }
  for (std::size_t s = 0; s < sol.cols(); ++s) {
    Matrix F(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (!sol.is_zero_at(r * cols + c, s)) F.set(r, c, sol.get(r * cols + c, s));
    out.push_back(std::move(F));
  }
  return out;
}

}  // namespace

std::vector<int> YDModule::grade_dims() const {
  std::vector<int> d(group->order(), 0);
  for (int g : grade) ++d[g];
  return d;
}

std::vector<std::size_t> YDModule::basis_of_grade(int g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < grade.size(); ++i)
    if (grade[i] == g) out.push_back(i);
  return out;
}

YDModule yd_from_generators(const GroupPtr& G, const FieldSpec& f, std::vector<int> grade,
                            const std::vector<int>& gens, const std::vector<Matrix>& images) {
  if (gens.size() != images.size()) throw Error(ErrorKind::ShapeMismatch, "generator images");
  const std::size_t d = grade.size();
  YDModule V{G, f, std::move(grade), std::vector<Matrix>(G->order())};
  std::vector<char> known(G->order(), 0);
  V.action[0] = Matrix::identity(f, d);
  known[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (images[k].rows() != d || images[k].cols() != d) throw Error(ErrorKind::ShapeMismatch, "generator image size");
      int h = G->mul(g, gens[k]);
      if (known[h]) continue;
      V.action[h] = V.action[g] * images[k];
      known[h] = 1;
      queue.push_back(h);
    }
  }
  for (int g = 0; g < G->order(); ++g)
    if (!known[g]) throw Error(ErrorKind::InvalidData, "generators do not generate the group");
  return V;
}

Report check_yd(const YDModule& V) {
  Report r;
  const FinGroup& G = *V.group;
  const std::size_t d = V.dim();
  if (V.action.size() != static_cast<std::size_t>(G.order())) throw Error(ErrorKind::ShapeMismatch, "action table size");
  for (const auto& A : V.action)
    if (A.rows() != d || A.cols() != d) throw Error(ErrorKind::ShapeMismatch, "action matrix size");
  for (int g : V.grade)
    if (g < 0 || g >= G.order()) throw Error(ErrorKind::ShapeMismatch, "grade out of range");

  std::size_t before = r.count;
  if (!V.action[0].is_identity()) r.fail("unit acts trivially", "h=e");
  r.close("unit acts trivially", before);

  before = r.count;
  auto gens = G.generators();
  for (int h = 0; h < G.order(); ++h)
    for (int s : gens)
      if (V.action[h] * V.action[s] != V.action[G.mul(h, s)])
        r.fail("action is a homomorphism", "(" + G.label(h) + "," + G.label(s) + ")");
  r.close("action is a homomorphism", before);

  before = r.count;
  for (int h = 0; h < G.order(); ++h)
    for (std::size_t v = 0; v < d; ++v) {
      int target = G.conj(h, V.grade[v]);
      for (const auto& [row, val] : V.action[h].col_nonzeros(v)) {
        (void)val;
        if (V.grade[row] != target) {
          r.fail("YD compatibility h.V_g in V_{hgh^-1}", "(" + G.label(h) + "," + G.label(V.grade[v]) + ")");
          break;
        }
      }
    }
  r.close("YD compatibility h.V_g in V_{hgh^-1}", before);
  return r;
}

Report check_morphism(const YDModule& V, const YDModule& W, const Matrix& f) {
  Report r;
  if (f.rows() != W.dim() || f.cols() != V.dim()) throw Error(ErrorKind::ShapeMismatch, "morphism size");
  std::size_t before = r.count;
  for (std::size_t v = 0; v < V.dim(); ++v)
    for (const auto& [w, val] : f.col_nonzeros(v)) {
      (void)val;
      if (W.grade[w] != V.grade[v]) r.fail("grade preserving", "basis " + std::to_string(v));
    }
  r.close("grade preserving", before);
  before = r.count;
  for (int s : V.group->generators())
    if (f * V.action[s] != W.action[s] * f) r.fail("G-equivariant", "h=" + V.group->label(s));
  r.close("G-equivariant", before);
  return r;
}

YDModule unit_object(const GroupPtr& G, const FieldSpec& f) {
  YDModule V{G, f, {0}, std::vector<Matrix>(G->order(), Matrix::identity(f, 1))};
  return V;
}

YDModule direct_sum(const YDModule& V, const YDModule& W) {
  require_same(V, W);
  YDModule S{V.group, V.field, V.grade, {}};
  S.grade.insert(S.grade.end(), W.grade.begin(), W.grade.end());
  const std::size_t dv = V.dim(), dw = W.dim();
  for (int h = 0; h < V.group->order(); ++h) {
    Matrix A(V.field, dv + dw, dv + dw);
    for (std::size_t c = 0; c < dv; ++c)
      for (const auto& [row, val] : V.action[h].col_nonzeros(c)) A.set(row, c, val);
    for (std::size_t c = 0; c < dw; ++c)
      for (const auto& [row, val] : W.action[h].col_nonzeros(c)) A.set(dv + row, dv + c, val);
    S.action.push_back(std::move(A));
  }
  return S;
}

YDModule tensor(const YDModule& V, const YDModule& W) {
  require_same(V, W);
  const FinGroup& G = *V.group;
  YDModule T{V.group, V.field, {}, {}};
  T.grade.reserve(V.dim() * W.dim());
  for (int a : V.grade)
    for (int b : W.grade) T.grade.push_back(G.mul(a, b));
  for (int h = 0; h < G.order(); ++h) T.action.push_back(kron(V.action[h], W.action[h]));
  return T;
}

Matrix braiding(const YDModule& V, const YDModule& W) {
  require_same(V, W);
  const std::size_t dv = V.dim(), dw = W.dim();
  Matrix c(V.field, dw * dv, dv * dw);
  for (std::size_t v = 0; v < dv; ++v) {
    const Matrix& A = W.action[V.grade[v]];
    for (std::size_t w = 0; w < dw; ++w)
      for (const auto& [w2, val] : A.col_nonzeros(w)) c.set(w2 * dv + v, v * dw + w, val);
  }
  return c;
}

Matrix braiding_inverse(const YDModule& V, const YDModule& W) {
  require_same(V, W);
  const std::size_t dv = V.dim(), dw = W.dim();
  Matrix c(V.field, dv * dw, dw * dv);
  for (std::size_t v = 0; v < dv; ++v) {
    const Matrix& A = W.action[V.group->inv(V.grade[v])];
    for (std::size_t w2 = 0; w2 < dw; ++w2)
      for (const auto& [w, val] : A.col_nonzeros(w2)) c.set(v * dw + w, w2 * dv + v, val);
  }
  return c;
}

Matrix twist(const YDModule& V) {
  const std::size_t d = V.dim();
  Matrix t(V.field, d, d);
  for (std::size_t v = 0; v < d; ++v)
    for (const auto& [row, val] : V.action[V.grade[v]].col_nonzeros(v)) t.set(row, v, val);
  return t;
}

DualData dual(const YDModule& V) {
  const FinGroup& G = *V.group;
  const std::size_t d = V.dim();
  DualData out;
  out.module = YDModule{V.group, V.field, {}, {}};
  for (int g : V.grade) out.module.grade.push_back(G.inv(g));
  for (int h = 0; h < G.order(); ++h) out.module.action.push_back(V.action[G.inv(h)].transpose());
  out.ev = Matrix(V.field, 1, d * d);
  out.coev = Matrix(V.field, d * d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    out.ev.set(0, i * d + i, Scalar::one(V.field));
    out.coev.set(i * d + i, 0, Scalar::one(V.field));
  }
  return out;
}

std::vector<Matrix> hom_space(const YDModule& V, const YDModule& W) {
  require_same(V, W);
  const FieldSpec& f = V.field;
  const FinGroup& G = *V.group;
  std::vector<Matrix> out;
  for (const auto& cls : conjugacy_classes(V.group)) {
    auto vb = V.basis_of_grade(cls.rep);
    auto wb = W.basis_of_grade(cls.rep);
    if (vb.empty() || wb.empty()) continue;
    std::vector<Matrix> As, Bs;
    for (int s : cls.centralizer_gens) {
      As.push_back(W.action[s].submatrix(wb, wb));
      Bs.push_back(V.action[s].submatrix(vb, vb));
    }
    auto sols = intertwiners(As, Bs, wb.size(), vb.size(), f);
    if (sols.empty()) continue;
    // extend from the representative's grade to the whole class:
    // F(x) = t . F_c (t^{-1} . x) for x of grade t rep t^{-1}
    std::vector<std::size_t> allw = iota(W.dim());
    struct ColData {
      std::size_t v;
      Matrix y;    // coordinates of t^{-1}.e_v in the block vb
      Matrix Aw;   // t restricted to columns wb
    };
    std::vector<ColData> cols;
    for (std::size_t k = 0; k < cls.elements.size(); ++k) {
      int x = cls.elements[k];
      int t = cls.conjugator[k];
      Matrix Aw = W.action[t].submatrix(allw, wb);
      const Matrix& Avinv = V.action[G.inv(t)];
      for (std::size_t v : V.basis_of_grade(x)) {
        Matrix y(f, vb.size(), 1);
        for (std::size_t i = 0; i < vb.size(); ++i)
          if (!Avinv.is_zero_at(vb[i], v)) y.set(i, 0, Avinv.get(vb[i], v));
        cols.push_back({v, std::move(y), Aw});
      }
    }
    for (const auto& Fc : sols) {
      Matrix F(f, W.dim(), V.dim());
      for (const auto& cd : cols) {
        Matrix col = cd.Aw * (Fc * cd.y);
        for (const auto& [row, val] : col.col_nonzeros(0)) F.set(row, cd.v, val);
      }
      out.push_back(std::move(F));
    }
  }
  return out;
}

std::vector<Matrix> hom_space_naive(const YDModule& V, const YDModule& W) {
  require_same(V, W);
  const FieldSpec& f = V.field;
  // unknowns: entries (w, v) with equal grades
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  std::vector<std::vector<long>> index(W.dim(), std::vector<long>(V.dim(), -1));
  for (std::size_t w = 0; w < W.dim(); ++w)
    for (std::size_t v = 0; v < V.dim(); ++v)
      if (W.grade[w] == V.grade[v]) {
        index[w][v] = static_cast<long>(vars.size());
        vars.push_back({w, v});
      }
  if (vars.empty()) return {};
  auto gens = V.group->generators();
  const std::size_t nrow = W.dim() * V.dim();
  Matrix sys(f, gens.size() * nrow, vars.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix& Aw = W.action[gens[k]];
    const Matrix& Av = V.action[gens[k]];
    // (Aw F - F Av)[r, c]
    for (std::size_t r = 0; r < W.dim(); ++r)
      for (std::size_t c = 0; c < V.dim(); ++c) {
        std::size_t eq = k * nrow + r * V.dim() + c;
        for (std::size_t t = 0; t < W.dim(); ++t)
          if (index[t][c] >= 0 && !Aw.is_zero_at(r, t)) sys.add_to(eq, static_cast<std::size_t>(index[t][c]), Aw.get(r, t));
        for (std::size_t t = 0; t < V.dim(); ++t)
          if (index[r][t] >= 0 && !Av.is_zero_at(t, c))
            sys.add_to(eq, static_cast<std::size_t>(index[r][t]), -Av.get(t, c));
      }
  }
  Matrix ns = nullspace(sys);
  std::vector<Matrix> out;
  for (std::size_t s = 0; s < ns.cols(); ++s) {
    Matrix F(f, W.dim(), V.dim());
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (!ns.is_zero_at(i, s)) F.set(vars[i].first, vars[i].second, ns.get(i, s));
    out.push_back(std::move(F));
  }
  return out;
}

Matrix invariants(const YDModule& V) {
  const FieldSpec& f = V.field;
  auto b = V.basis_of_grade(0);
  if (b.empty()) return Matrix(f, V.dim(), 0);
  auto gens = V.group->generators();
  std::vector<Matrix> rows;
  std::vector<std::size_t> allr = iota(V.dim());
  for (int s : gens) {
    Matrix M = V.action[s].submatrix(allr, b);
    for (std::size_t i = 0; i < b.size(); ++i) M.add_to(b[i], i, -Scalar::one(f));
    rows.push_back(std::move(M));
  }
  Matrix ns = rows.empty() ? Matrix::identity(f, b.size()) : nullspace(Matrix::vstack(rows, f, b.size()));
  Matrix out(f, V.dim(), ns.cols());
  for (std::size_t c = 0; c < ns.cols(); ++c)
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!ns.is_zero_at(i, c)) out.set(b[i], c, ns.get(i, c));
  return out;
}

Matrix tensor_invariants(const YDModule& V, const YDModule& W) {
  require_same(V, W);
  const FieldSpec& f = V.field;
  const FinGroup& G = *V.group;
  const std::size_t dw = W.dim();
  std::vector<std::size_t> pairs;
  std::vector<long> where(V.dim() * dw, -1);
  for (std::size_t v = 0; v < V.dim(); ++v)
    for (std::size_t w = 0; w < dw; ++w)
      if (G.mul(V.grade[v], W.grade[w]) == 0) {
        where[v * dw + w] = static_cast<long>(pairs.size());
        pairs.push_back(v * dw + w);
      }
  const std::size_t n = pairs.size();
  Matrix out(f, V.dim() * dw, 0);
  if (n == 0) return out;
  std::vector<Matrix> blocks;
  for (int s : G.generators()) {
    Matrix M(f, n, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t v = pairs[c] / dw, w = pairs[c] % dw;
      auto cv = V.action[s].col_nonzeros(v);
      auto cw = W.action[s].col_nonzeros(w);
      for (const auto& [r1, x] : cv)
        for (const auto& [r2, y] : cw) M.add_to(static_cast<std::size_t>(where[r1 * dw + r2]), c, x * y);
      M.add_to(c, c, -Scalar::one(f));
    }
    blocks.push_back(std::move(M));
  }
  Matrix ns = blocks.empty() ? Matrix::identity(f, n) : nullspace(Matrix::vstack(blocks, f, n));
  out = Matrix(f, V.dim() * dw, ns.cols());
  for (std::size_t c = 0; c < ns.cols(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      if (!ns.is_zero_at(i, c)) out.set(pairs[i], c, ns.get(i, c));
  return out;
}

EndAlgebra end_algebra(const YDModule& V) {
  EndAlgebra E;
  E.basis = hom_space(V, V);
  const FieldSpec& f = V.field;
  const std::size_t d = V.dim(), m = E.basis.size();
  auto vec = [&](const Matrix& M) {
    Matrix v(f, d * d, 1);
    for (std::size_t c = 0; c < d; ++c)
      for (const auto& [r, val] : M.col_nonzeros(c)) v.set(r * d + c, 0, val);
    return v;
  };
  std::vector<Matrix> cols;
  for (const auto& B : E.basis) cols.push_back(vec(B));
  if (m == 0) return E;
  Section sec(Matrix::hstack(cols, f, d * d));
  E.structure.assign(m, std::vector<std::vector<Scalar>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix c = sec.coords(vec(E.basis[i] * E.basis[j]));
      E.structure[i][j] = c.col_vector(0);
    }
  return E;
}

}  // namespace rfa

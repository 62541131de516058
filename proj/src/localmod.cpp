#include "rfa/localmod.hpp"

#include <map>
#include <random>

#include "rfa/semisimple.hpp"
#include "tensor_util.hpp"

namespace rfa {

using detail::add;
using detail::Cols;
using detail::SVec;

namespace {

std::string pair_str(std::size_t a, std::size_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Group action columns, built on first use.
class ActCache {
 public:
  explicit ActCache(const YDModule& V) : V_(V), cols_(V.action.size()), built_(V.action.size(), 0) {}
  const Cols& operator()(int g) {
    if (!built_[g]) {
      cols_[g] = detail::columns(V_.action[g]);
      built_[g] = 1;
    }
    return cols_[g];
  }
  const YDModule& module() const { return V_; }

 private:
  const YDModule& V_;
  std::vector<Cols> cols_;
  std::vector<char> built_;
};

SVec apply_cols(const Cols& m, const SVec& x) {
  SVec out;
  for (const auto& [i, a] : x)
    for (const auto& [r, c] : m[i]) add(out, r, a * c);
  return out;
}

SVec unit_vec(const FieldSpec& f, std::size_t i) { return SVec{{i, Scalar::one(f)}}; }

// a^r(v (x) a) for sparse v, a
SVec act_on(const Cols& act, std::size_t dA, const SVec& v, const SVec& a) {
  SVec out;
  for (const auto& [i, x] : v)
    for (const auto& [j, y] : a) {
      Scalar xy = x * y;
      for (const auto& [r, c] : act[i * dA + j]) add(out, r, xy * c);
    }
  return out;
}

// c_{W,V} c_{V,W} on the basis vector v (x) w
SVec double_braid(ActCache& V, ActCache& W, std::size_t v, std::size_t w) {
  const std::size_t dW = W.module().dim();
  SVec out;
  int gv = V.module().grade[v];
  for (const auto& [w2, c] : W(gv)[w]) {
    int g2 = W.module().grade[w2];
    for (const auto& [v2, c2] : V(g2)[v]) add(out, v2 * dW + w2, c * c2);
  }
  return out;
}

struct ModuleView {
  const AModule& M;
  std::size_t dV, dA;
  Cols act;
  ActCache A_act;
  ActCache V_act;

  explicit ModuleView(const AModule& m)
      : M(m), dV(m.dim()), dA(m.algebra->dim()), act(detail::columns(m.act)), A_act(m.algebra->carrier),
        V_act(m.carrier) {
    if (m.act.rows() != dV || m.act.cols() != dV * dA) throw Error(ErrorKind::ShapeMismatch, "module action size");
    if (m.carrier.group->order() != m.algebra->carrier.group->order())
      throw Error(ErrorKind::GroupMismatch, "module and algebra over different groups");
    if (!(m.carrier.field == m.algebra->field())) throw Error(ErrorKind::FieldMismatch, "module and algebra fields");
  }
  SVec right(std::size_t v, std::size_t a) const { return detail::from_col(act[v * dA + a]); }
  // a^l(a (x) v) = a^r((deg a) . v (x) a)
  SVec left(std::size_t a, std::size_t v) {
    int ga = M.algebra->carrier.grade[a];
    SVec gv = detail::from_col(V_act(ga)[v]);
    return act_on(act, dA, gv, unit_vec(M.carrier.field, a));
  }
};

// Idempotent (a^r_M (x) a^l_N)(Id (x) t (x) Id) on M (x) N, applied sparsely.
class Projector {
 public:
  Projector(const RigidAlgebra& A, const AModule& M, const AModule& N) : Mv_(M), Nv_(N), dN_(N.dim()) {
    for (const auto& [k, c] : A.separability.col_nonzeros(0)) t_.push_back({k / A.dim(), k % A.dim(), c});
    leftN_.resize(A.dim() * dN_);
    for (std::size_t a = 0; a < A.dim(); ++a)
      for (std::size_t n = 0; n < dN_; ++n) leftN_[a * dN_ + n] = Nv_.left(a, n);
    cache_.resize(M.dim() * dN_);
    done_.assign(M.dim() * dN_, 0);
  }
  const SVec& basis(std::size_t k) {
    if (!done_[k]) {
      std::size_t i = k / dN_, j = k % dN_;
      SVec out;
      for (const auto& [t1, t2, c] : t_) {
        const auto& mi = Mv_.act[i * Mv_.dA + t1];
        const SVec& nj = leftN_[t2 * dN_ + j];
        for (const auto& [r, x] : mi)
          for (const auto& [s, y] : nj) add(out, r * dN_ + s, c * x * y);
      }
      cache_[k] = std::move(out);
      done_[k] = 1;
    }
    return cache_[k];
  }
  SVec apply(const SVec& x) {
    SVec out;
    for (const auto& [k, a] : x)
      for (const auto& [r, c] : basis(k)) add(out, r, a * c);
    return out;
  }
  ModuleView& left_view() { return Mv_; }
  ModuleView& right_view() { return Nv_; }

 private:
  struct T {
    std::size_t a, b;
    Scalar c;
  };
  ModuleView Mv_, Nv_;
  std::size_t dN_;
  std::vector<T> t_;
  std::vector<SVec> leftN_;
  std::vector<SVec> cache_;
  std::vector<char> done_;
};

// Basis of { c : sum c_k w_k = 0 } by elimination on sparse vectors.
Matrix relations(const std::vector<SVec>& w, const FieldSpec& f) {
  const std::size_t r = w.size();
  struct Row {
    std::size_t pivot;
    SVec v;
    std::vector<Scalar> comb;
  };
  std::vector<Row> rows;
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < r; ++k) {
    SVec v = w[k];
    std::vector<Scalar> comb(r, Scalar::zero(f));
    comb[k] = Scalar::one(f);
    for (const auto& row : rows) {
      auto it = v.find(row.pivot);
      if (it == v.end()) continue;
      Scalar s = it->second;
      for (const auto& [i, x] : row.v) add(v, i, -(s * x));
      for (std::size_t j = 0; j < r; ++j) comb[j] -= s * row.comb[j];
    }
    if (v.empty()) {
      out.push_back(Matrix::column(comb, f));
      continue;
    }
    Scalar inv = v.begin()->second.inverse();
    std::size_t piv = v.begin()->first;
    for (auto& [i, x] : v) x *= inv;
    for (auto& c : comb) c *= inv;
    rows.push_back({piv, std::move(v), std::move(comb)});
  }
  return Matrix::hstack(out, f, r);
}

}  // namespace

RigidAlgebra make_rigid(const AlgebraObject& A, const FrobeniusData& F) {
  RigidFrobeniusCert c = check_rigid_frobenius(A, F);
  if (!c.passed || !c.normalized_copairing || !c.separability)
    throw Error(ErrorKind::NotRigidFrobenius, c.report.summary());
  RigidAlgebra R{std::make_shared<const AlgebraObject>(A), F, *c.separability * A.unit, *c.normalized_copairing,
                 *c.qdim};
  return R;
}

RigidAlgebra make_rigid(const BuiltAlgebra& A) { return make_rigid(A.algebra, A.frobenius); }

AModule regular_module(const RigidAlgebra& A) { return {A.algebra, A.algebra->carrier, A.algebra->mult, "A"}; }

AModule free_module(const RigidAlgebra& A, const YDModule& X) {
  const std::size_t dX = X.dim(), dA = A.dim();
  const FieldSpec& f = A.field();
  Cols m = detail::columns(A.algebra->mult);
  Matrix act(f, dX * dA, dX * dA * dA);
  for (std::size_t x = 0; x < dX; ++x)
    for (std::size_t a = 0; a < dA; ++a)
      for (std::size_t b = 0; b < dA; ++b)
        for (const auto& [r, c] : m[a * dA + b]) act.set(x * dA + r, (x * dA + a) * dA + b, c);
  return {A.algebra, tensor(X, A.algebra->carrier), std::move(act), "U(X)"};
}

Matrix left_action(const AModule& M) {
  ModuleView V(M);
  std::vector<SVec> cols(V.dA * V.dV);
  for (std::size_t a = 0; a < V.dA; ++a)
    for (std::size_t v = 0; v < V.dV; ++v) cols[a * V.dV + v] = V.left(a, v);
  return detail::to_matrix(cols, M.carrier.field, V.dV);
}

Report check_module(const AModule& M) {
  Report r;
  ModuleView V(M);
  const FinGroup& G = *M.carrier.group;
  const FieldSpec& f = M.carrier.field;
  const AlgebraObject& A = *M.algebra;
  Cols m = detail::columns(A.mult);
  const std::size_t dV = V.dV, dA = V.dA;

  std::string id = "module action is grade preserving";
  std::size_t before = r.count;
  for (std::size_t v = 0; v < dV; ++v)
    for (std::size_t a = 0; a < dA; ++a) {
      int g = G.mul(M.carrier.grade[v], A.carrier.grade[a]);
      for (const auto& [row, c] : V.act[v * dA + a]) {
        (void)c;
        if (M.carrier.grade[row] != g) {
          r.fail(id, pair_str(v, a));
          break;
        }
      }
    }
  r.close(id, before);

  id = "module action is G-equivariant";
  before = r.count;
  for (int h : G.generators()) {
    const Cols& hv = V.V_act(h);
    const Cols& ha = V.A_act(h);
    for (std::size_t v = 0; v < dV && r.count == before; ++v)
      for (std::size_t a = 0; a < dA; ++a) {
        SVec lhs = act_on(V.act, dA, detail::from_col(hv[v]), detail::from_col(ha[a]));
        SVec rhs = apply_cols(hv, V.right(v, a));
        if (lhs != rhs) {
          r.fail(id, "h=" + G.label(h) + " " + pair_str(v, a));
          break;
        }
      }
  }
  r.close(id, before);

  id = "module associativity";
  before = r.count;
  for (std::size_t v = 0; v < dV; ++v)
    for (std::size_t a = 0; a < dA; ++a) {
      SVec va = V.right(v, a);
      for (std::size_t b = 0; b < dA; ++b) {
        SVec lhs = act_on(V.act, dA, va, unit_vec(f, b));
        SVec rhs = act_on(V.act, dA, unit_vec(f, v), detail::from_col(m[a * dA + b]));
        if (lhs != rhs) r.fail(id, "(" + std::to_string(v) + "," + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  r.close(id, before);

  id = "module unitality";
  before = r.count;
  SVec u = detail::from_col(A.unit.col_nonzeros(0));
  for (std::size_t v = 0; v < dV; ++v)
    if (act_on(V.act, dA, unit_vec(f, v), u) != unit_vec(f, v)) r.fail(id, "basis " + std::to_string(v));
  r.close(id, before);

  id = "left and right actions commute";
  before = r.count;
  std::vector<SVec> left(dA * dV);
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t v = 0; v < dV; ++v) left[a * dV + v] = V.left(a, v);
  auto left_on = [&](std::size_t a, const SVec& x) {
    SVec out;
    for (const auto& [i, c] : x)
      for (const auto& [row, y] : left[a * dV + i]) add(out, row, c * y);
    return out;
  };
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t v = 0; v < dV; ++v)
      for (std::size_t b = 0; b < dA; ++b) {
        SVec lhs = left_on(a, V.right(v, b));
        SVec rhs = act_on(V.act, dA, left[a * dV + v], unit_vec(f, b));
        if (lhs != rhs) r.fail(id, "(" + std::to_string(a) + "," + std::to_string(v) + "," + std::to_string(b) + ")");
      }
  r.close(id, before);
  return r;
}

LocalCert is_local(const AModule& M) {
  ModuleView V(M);
  LocalCert c;
  c.is_local = true;
  for (std::size_t v = 0; v < V.dV && c.is_local; ++v)
    for (std::size_t a = 0; a < V.dA; ++a) {
      SVec cc = double_braid(V.V_act, V.A_act, v, a);
      SVec lhs;
      for (const auto& [k, x] : cc)
        for (const auto& [row, y] : V.act[k]) add(lhs, row, x * y);
      if (lhs != V.right(v, a)) {
        c.is_local = false;
        c.witness = "v=" + std::to_string(v) + " a=" + std::to_string(a);
        break;
      }
    }
  return c;
}

std::vector<Matrix> module_hom_space(const AModule& M, const AModule& N) {
  if (M.algebra != N.algebra && !(M.algebra->mult == N.algebra->mult))
    throw Error(ErrorKind::ShapeMismatch, "modules over different algebras");
  std::vector<Matrix> B = hom_space(M.carrier, N.carrier);
  if (B.empty()) return {};
  ModuleView Mv(M), Nv(N);
  const FieldSpec& f = M.carrier.field;
  const std::size_t dA = Mv.dA;
  std::vector<SVec> w;
  for (const Matrix& F : B) {
    Cols Fc = detail::columns(F);
    SVec out;
    for (std::size_t v = 0; v < Mv.dV; ++v)
      for (std::size_t a = 0; a < dA; ++a) {
        SVec lhs = apply_cols(Fc, Mv.right(v, a));
        SVec rhs = act_on(Nv.act, dA, detail::from_col(Fc[v]), unit_vec(f, a));
        for (const auto& [i, x] : rhs) add(lhs, i, -x);
        for (const auto& [i, x] : lhs) out.emplace((v * dA + a) * Nv.dV + i, x);
      }
    w.push_back(std::move(out));
  }
  Matrix rel = relations(w, f);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < rel.cols(); ++k) {
    Matrix F(f, N.dim(), M.dim());
    for (std::size_t i = 0; i < B.size(); ++i) {
      Scalar c = rel.get(i, k);
      if (!c.is_zero()) F = F + B[i].scaled(c);
    }
    out.push_back(std::move(F));
  }
  return out;
}

Matrix tensor_idempotent(const RigidAlgebra& A, const AModule& M, const AModule& N) {
  Projector P(A, M, N);
  const std::size_t D = M.dim() * N.dim();
  std::vector<SVec> cols(D);
  for (std::size_t k = 0; k < D; ++k) cols[k] = P.basis(k);
  return detail::to_matrix(cols, A.field(), D);
}

RelativeTensor tensor_over_A(const RigidAlgebra& A, const AModule& M, const AModule& N, bool reverse_pivots) {
  const FieldSpec& f = A.field();
  const FinGroup& G = *M.carrier.group;
  const std::size_t dM = M.dim(), dN = N.dim(), dA = A.dim(), D = dM * dN;
  Matrix Pi = tensor_idempotent(A, M, N);
  std::vector<std::size_t> cols = independent_columns(Pi, reverse_pivots);
  std::vector<std::size_t> all(D);
  for (std::size_t i = 0; i < D; ++i) all[i] = i;
  Matrix B = Pi.submatrix(all, cols);
  Section S(B, reverse_pivots);
  Matrix proj = S.coords(Pi);

  std::vector<int> grade;
  for (std::size_t c : cols) grade.push_back(G.mul(M.carrier.grade[c / dN], N.carrier.grade[c % dN]));
  std::vector<int> gens = G.generators();
  std::vector<Matrix> images;
  for (int h : gens) images.push_back(S.coords(kron(M.carrier.action[h], N.carrier.action[h]) * B));
  YDModule carrier = yd_from_generators(M.carrier.group, f, grade, gens, images);

  // (Id (x) a^r_N)(b (x) a), then projected
  Cols actN = detail::columns(N.act);
  Matrix lifted(f, D, cols.size() * dA);
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (const auto& [idx, x] : B.col_nonzeros(k)) {
      std::size_t i = idx / dN, j = idx % dN;
      for (std::size_t a = 0; a < dA; ++a)
        for (const auto& [r, y] : actN[j * dA + a]) lifted.add_to(i * dN + r, k * dA + a, x * y);
    }
  Matrix act = proj * lifted;
  RelativeTensor out{{A.algebra, std::move(carrier), std::move(act), M.label + " (x)_A " + N.label}, std::move(proj),
                     std::move(B)};
  return out;
}

ModuleDual dual_module(const RigidAlgebra& A, const AModule& M) {
  const FieldSpec& f = A.field();
  const FinGroup& G = *M.carrier.group;
  const std::size_t dV = M.dim(), dA = A.dim();
  DualData Dd = dual(M.carrier);
  const AlgebraObject& alg = *A.algebra;
  Matrix act(f, dV, dV * dA);
  // a^r(f_i (x) a) = sum_j R_a[i][j] (deg a)^{-1} . f_j, R_a[i][j] = coefficient of e_i in e_j . a
  for (std::size_t a = 0; a < dA; ++a) {
    const Matrix& g = Dd.module.action[G.inv(alg.carrier.grade[a])];
    for (std::size_t j = 0; j < dV; ++j) {
      std::vector<std::pair<std::size_t, Scalar>> gf = g.col_nonzeros(j);
      for (const auto& [i, R] : M.act.col_nonzeros(j * dA + a))
        for (const auto& [r, y] : gf) act.add_to(r, i * dA + a, R * y);
    }
  }
  Matrix ev(f, dA, dV * dV);
  for (const auto& [xy, c] : A.copairing.col_nonzeros(0)) {
    std::size_t x = xy / dA, y = xy % dA;
    for (std::size_t j = 0; j < dV; ++j)
      for (const auto& [i, R] : M.act.col_nonzeros(j * dA + x)) ev.add_to(y, i * dV + j, c * R);
  }
  Matrix coev(f, dV * dV, dA);
  Scalar dinv = A.d.inverse();
  for (std::size_t a = 0; a < dA; ++a) {
    const Matrix& g = Dd.module.action[G.inv(alg.carrier.grade[a])];
    for (std::size_t j = 0; j < dV; ++j) {
      std::vector<std::pair<std::size_t, Scalar>> gf = g.col_nonzeros(j);
      for (const auto& [v, x] : M.act.col_nonzeros(j * dA + a))
        for (const auto& [w, y] : gf) coev.add_to(v * dV + w, a, dinv * x * y);
    }
  }
  return {{A.algebra, Dd.module, std::move(act), M.label + "*"}, std::move(ev), std::move(coev)};
}

Report check_dual(const RigidAlgebra& A, const AModule& M, const ModuleDual& D) {
  Report r;
  const FieldSpec& f = A.field();
  const std::size_t dV = M.dim(), dA = A.dim();
  Matrix IV = Matrix::identity(f, dV), IA = Matrix::identity(f, dA);
  const Matrix& m = A.algebra->mult;
  auto verdict = [&](const std::string& id, const Matrix& lhs, const Matrix& rhs) {
    if (lhs == rhs) {
      r.pass(id);
      return;
    }
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs.col(j) != rhs.col(j)) {
        r.fail(id, "column " + std::to_string(j));
        return;
      }
  };
  Report mod = check_module(D.module);
  for (auto& v : mod.violations) v.identity = "dual: " + v.identity;
  r.merge(mod);
  const Matrix& actV = M.act;
  const Matrix& actD = D.module.act;
  Matrix leftV = left_action(M), leftD = left_action(D.module);
  verdict("ev_hat is a right A-module map", D.ev_hat * kron(IV, actV), m * kron(D.ev_hat, IA));
  verdict("coev_hat is a right A-module map", D.coev_hat * m, kron(IV, actD) * kron(D.coev_hat, IA));
  verdict("ev_hat is balanced", D.ev_hat * kron(actD, IV), D.ev_hat * kron(IV, leftV));
  verdict("zig-zag on V", actV * kron(IV, D.ev_hat) * kron(D.coev_hat, IV), leftV);
  verdict("zig-zag on V*", leftD * kron(D.ev_hat, IV) * kron(IV, D.coev_hat), actD);
  return r;
}

Report twist_local(const RigidAlgebra& A, const AModule& M) {
  Report r;
  const FieldSpec& f = A.field();
  Matrix th = twist(M.carrier);
  const std::size_t dA = A.dim();
  Matrix lhs = th * M.act, rhs = M.act * kron(th, Matrix::identity(f, dA));
  if (lhs == rhs) {
    r.pass("theta_M is A-linear");
  } else {
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs.col(j) != rhs.col(j)) {
        r.fail("theta_M is A-linear", pair_str(j / dA, j % dA));
        break;
      }
  }
  Projector P(A, M, M);
  ActCache V(M.carrier), W(M.carrier);
  Cols thc = detail::columns(th);
  const FinGroup& G = *M.carrier.group;
  const std::size_t d = M.dim();
  std::size_t before = r.count;
  for (std::size_t i = 0; i < d && r.count == before; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      int g = G.mul(M.carrier.grade[i], M.carrier.grade[j]);
      SVec tt;
      for (const auto& [x, a] : V(g)[i])
        for (const auto& [y, b] : V(g)[j]) add(tt, x * d + y, a * b);
      SVec cc = double_braid(V, W, i, j), rhs;
      for (const auto& [k, c] : cc)
        for (const auto& [x, a] : thc[k / d])
          for (const auto& [y, b] : thc[k % d]) add(rhs, x * d + y, c * a * b);
      if (P.apply(tt) != P.apply(rhs)) {
        r.fail("balancing on M (x)_A M", pair_str(i, j));
        break;
      }
    }
  r.close("balancing on M (x)_A M", before);
  return r;
}

std::vector<SimpleAModule> simple_modules(const RigidAlgebra& A, std::uint64_t seed) {
  const AlgebraObject& alg = *A.algebra;
  const GroupPtr& Gp = alg.carrier.group;
  const FieldSpec& f = A.field();
  require_semisimple_field(*Gp, f);
  std::vector<SimpleYD> Xs = simple_yd_modules(Gp, f, seed);
  std::mt19937_64 rng(seed);
  const std::size_t dA = A.dim();
  Cols m = detail::columns(alg.mult);
  std::vector<int> gens = Gp->generators();
  std::vector<SimpleAModule> out;

  for (std::size_t xi = 0; xi < Xs.size(); ++xi) {
    const YDModule& X = Xs[xi].module;
    const std::size_t dX = X.dim(), dU = dX * dA;
    AModule U = free_module(A, X);
    std::vector<Matrix> E = hom_space(X, U.carrier);
    const std::size_t r = E.size();
    // lift of f : X -> X (x) A to the A-linear map U(X) -> U(X)
    auto lift = [&](const Matrix& F) {
      Matrix L(f, dU, dU);
      for (std::size_t x = 0; x < dX; ++x)
        for (const auto& [idx, c] : F.col_nonzeros(x)) {
          std::size_t x2 = idx / dA, a2 = idx % dA;
          for (std::size_t a = 0; a < dA; ++a)
            for (const auto& [row, y] : m[a2 * dA + a]) L.add_to(x2 * dA + row, x * dA + a, c * y);
        }
      return L;
    };
    auto vec = [&](const Matrix& F) {
      Matrix v(f, dU * dX, 1);
      for (std::size_t x = 0; x < dX; ++x)
        for (const auto& [idx, c] : F.col_nonzeros(x)) v.set(x * dU + idx, 0, c);
      return v;
    };
    std::vector<Matrix> lifts, vecs;
    for (const auto& F : E) {
      lifts.push_back(lift(F));
      vecs.push_back(vec(F));
    }
    Section S(Matrix::hstack(vecs, f, dU * dX));
    AbstractAlgebra End{f, std::vector<Matrix>(r), std::vector<Matrix>(r), Matrix()};
    std::vector<std::vector<Matrix>> prod(r, std::vector<Matrix>(r));
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Matrix> cs;
      for (std::size_t j = 0; j < r; ++j) cs.push_back(vec(lifts[i] * E[j]));
      Matrix coords = S.coords(Matrix::hstack(cs, f, dU * dX));
      for (std::size_t j = 0; j < r; ++j) prod[i][j] = coords.col(j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Matrix> L, R;
      for (std::size_t j = 0; j < r; ++j) {
        L.push_back(prod[i][j]);
        R.push_back(prod[j][i]);
      }
      End.left[i] = Matrix::hstack(L, f, r);
      End.right[i] = Matrix::hstack(R, f, r);
    }
    Matrix incl(f, dU, dX);
    SVec u = detail::from_col(alg.unit.col_nonzeros(0));
    for (std::size_t x = 0; x < dX; ++x)
      for (const auto& [a, c] : u) incl.set(x * dA + a, x, c);
    End.unit = S.coords(vec(incl));

    std::vector<SplitBlock> blocks = split_semisimple(End, rng);
    for (const auto& blk : blocks) {
      Matrix y = blk.left_ideal.col(0);
      Matrix F(f, dU, dX);
      for (std::size_t k = 0; k < r; ++k)
        if (!y.is_zero_at(k, 0)) F = F + E[k].scaled(y.get(k, 0));
      Matrix Ly = lift(F);
      std::vector<std::size_t> cols = independent_columns(Ly);
      std::vector<std::size_t> all(dU);
      for (std::size_t i = 0; i < dU; ++i) all[i] = i;
      Matrix B = Ly.submatrix(all, cols);
      Section SB(B);
      std::vector<int> grade;
      for (std::size_t c : cols) grade.push_back(U.carrier.grade[c]);
      std::vector<Matrix> images;
      for (int h : gens) images.push_back(SB.coords(U.carrier.action[h] * B));
      YDModule carrier = yd_from_generators(Gp, f, grade, gens, images);
      // dedupe: M was already found if an earlier simple X_j maps into it
      std::vector<Summand> parts = decompose(carrier, Xs);
      bool seen = false;
      for (const auto& s : parts)
        if (s.multiplicity > 0 && static_cast<std::size_t>(s.simple_index) < xi) seen = true;
      if (seen) continue;
      Matrix lifted(f, dU, cols.size() * dA);
      for (std::size_t k = 0; k < cols.size(); ++k)
        for (const auto& [idx, c] : B.col_nonzeros(k)) {
          std::size_t x = idx / dA, a2 = idx % dA;
          for (std::size_t a = 0; a < dA; ++a)
            for (const auto& [row, v] : m[a2 * dA + a]) lifted.add_to(x * dA + row, k * dA + a, c * v);
        }
      SimpleAModule sm;
      sm.module = {A.algebra, std::move(carrier), SB.coords(lifted), ""};
      sm.source = static_cast<int>(xi);
      sm.multiplicity_in_source = blk.k;
      sm.local = is_local(sm.module).is_local;
      sm.module.label = out.empty() ? "A" : "M" + std::to_string(out.size()) + "<" + Xs[xi].label + ">";
      out.push_back(std::move(sm));
    }
  }
  return out;
}

std::vector<SimpleAModule> simple_local_modules(const RigidAlgebra& A, std::uint64_t seed) {
  std::vector<SimpleAModule> out;
  for (auto& s : simple_modules(A, seed))
    if (s.local) out.push_back(std::move(s));
  return out;
}

namespace {

FpdimReport formula_part(const BuiltAlgebra& A) {
  FpdimReport R;
  const std::int64_t G = A.algebra.carrier.group->order(), H = A.data.H.order(), N = A.data.N.order();
  R.dim_A = static_cast<std::int64_t>(A.algebra.dim());
  R.formula_dim = G * N / H;
  R.fpdim_rep = G * H / N;
  R.fpdim_local = (H / N) * (H / N);
  if (R.dim_A * H != G * N) R.report.fail("dim A = |G||N|/|H|", std::to_string(R.dim_A));
  else R.report.pass("dim A = |G||N|/|H|");
  return R;
}

void census_part(FpdimReport& R, const std::vector<SimpleAModule>& simples) {
  R.census = true;
  for (const auto& s : simples) {
    std::int64_t d = static_cast<std::int64_t>(s.module.dim());
    R.census_rep += d * d;
    ++R.simple_count;
    if (s.local) {
      R.census_local += d * d;
      ++R.local_count;
    }
  }
  const std::int64_t a2 = R.dim_A * R.dim_A;
  if (R.census_rep != a2 * R.fpdim_rep)
    R.report.fail("census FPdim Rep_A = |G||H|/|N|", std::to_string(R.census_rep) + "/" + std::to_string(a2));
  else R.report.pass("census FPdim Rep_A = |G||H|/|N|");
  if (R.census_local != a2 * R.fpdim_local)
    R.report.fail("census FPdim Rep^loc = |H|^2/|N|^2", std::to_string(R.census_local) + "/" + std::to_string(a2));
  else R.report.pass("census FPdim Rep^loc = |H|^2/|N|^2");
}

}  // namespace

FpdimReport fpdim_checks(const BuiltAlgebra& A, std::uint64_t seed) {
  FpdimReport R = formula_part(A);
  try {
    require_semisimple_field(*A.algebra.carrier.group, A.field);
    RigidAlgebra rig = make_rigid(A);
    census_part(R, simple_modules(rig, seed));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSemisimpleField && e.kind() != ErrorKind::NonSplit) throw;
    R.census = false;
    R.census_skipped = e.what();
  }
  return R;
}

FpdimReport fpdim_checks(const BuiltAlgebra& A, const std::vector<SimpleAModule>& simples) {
  FpdimReport R = formula_part(A);
  census_part(R, simples);
  return R;
}

namespace {

// Compares Pi c c with Pi on M (x) X; optionally accumulates Tr(c c Pi).
struct PairResult {
  bool centralizes = true;
  Scalar trace;
};

PairResult double_braiding_over_A(const RigidAlgebra& A, const AModule& M, const AModule& X, bool want_trace) {
  Projector P(A, M, X);
  ActCache Mv(M.carrier), Xv(X.carrier);
  const std::size_t D = M.dim() * X.dim();
  PairResult res{true, Scalar::zero(A.field())};
  for (std::size_t k = 0; k < D; ++k) {
    SVec img = P.apply(double_braid(Mv, Xv, k / X.dim(), k % X.dim()));
    if (want_trace) {
      auto it = img.find(k);
      if (it != img.end()) res.trace += it->second;
    }
    if (img != P.basis(k)) {
      res.centralizes = false;
      if (!want_trace) break;
    }
  }
  return res;
}

bool is_unit_module(const AModule& M) { return invariants(M.carrier).cols() > 0; }

}  // namespace

MugerReport muger_center_local(const RigidAlgebra& A, const std::vector<SimpleAModule>& locals) {
  MugerReport R;
  R.trivial = true;
  for (const auto& s : locals) {
    const AModule& M = s.module;
    if (is_unit_module(M)) {
      R.witnesses.push_back({M.label, "unit"});
      continue;
    }
    std::string found;
    for (const auto& t : locals)
      if (!double_braiding_over_A(A, M, t.module, false).centralizes) {
        found = t.module.label;
        break;
      }
    R.witnesses.push_back({M.label, found});
    if (found.empty()) {
      R.trivial = false;
      R.report.fail("Mueger center is trivial", M.label + " centralizes every simple local module");
    }
  }
  if (R.trivial) R.report.pass("Mueger center is trivial");
  return R;
}

ModularData modular_data(const RigidAlgebra& A, const std::vector<SimpleAModule>& locals) {
  const FieldSpec& f = A.field();
  const std::size_t n = locals.size();
  ModularData D{{}, Matrix(f, n, n), {}};
  Scalar inv_dim = integer_in_field(f, static_cast<std::int64_t>(A.dim())).inverse();
  for (std::size_t i = 0; i < n; ++i) {
    const AModule& M = locals[i].module;
    D.labels.push_back(M.label);
    for (std::size_t j = 0; j < n; ++j)
      D.S.set(i, j, double_braiding_over_A(A, M, locals[j].module, true).trace * inv_dim);
    Matrix th = twist(M.carrier);
    Scalar t = th.get(0, 0);
    if (th != Matrix::identity(f, M.dim()).scaled(t))
      throw Error(ErrorKind::InternalInconsistency, "twist of " + M.label + " is not a scalar");
    D.T.push_back(t);
  }
  return D;
}

}  // namespace rfa

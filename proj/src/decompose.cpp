#include <algorithm>
#include <random>

#include "rfa/cocycle.hpp"
#include "rfa/semisimple.hpp"
#include "rfa/ydcat.hpp"

namespace rfa {

namespace {

struct Irrep {
  int dim = 1;
  std::vector<Matrix> rho;  // indexed by position in the centralizer
  std::vector<Scalar> character;
};

std::int64_t code_of(const Scalar& s) { return s.residue(); }

// Irreducible representations of kC via the Wedderburn blocks of the regular algebra.
std::vector<Irrep> irreps_of(const Subgroup& C, const FieldSpec& f, std::mt19937_64& rng) {
  const FinGroup& G = *C.group;
  const int n = C.order();
  std::vector<int> pos(G.order(), -1);
  for (int i = 0; i < n; ++i) pos[C.elements[i]] = i;
  AbstractAlgebra A{f, {}, {}, Matrix(f, n, 1)};
  A.unit.set(0, 0, Scalar::one(f));
  for (int i = 0; i < n; ++i) {
    Matrix L(f, n, n), R(f, n, n);
    for (int j = 0; j < n; ++j) {
      L.set(pos[G.mul(C.elements[i], C.elements[j])], j, Scalar::one(f));
      R.set(pos[G.mul(C.elements[j], C.elements[i])], j, Scalar::one(f));
    }
    A.left.push_back(std::move(L));
    A.right.push_back(std::move(R));
  }
  std::vector<Irrep> out;
  for (const auto& blk : split_semisimple(A, rng)) {
    Section sec(blk.left_ideal);
    Irrep ir;
    ir.dim = blk.k;
    for (int x = 0; x < n; ++x) {
      Matrix r = sec.coords(A.left[x] * blk.left_ideal);
      Scalar tr = Scalar::zero(f);
      for (int i = 0; i < blk.k; ++i) tr += r.get(i, i);
      ir.character.push_back(tr);
      ir.rho.push_back(std::move(r));
    }
    out.push_back(std::move(ir));
  }
  std::sort(out.begin(), out.end(), [](const Irrep& a, const Irrep& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    for (std::size_t i = 0; i < a.character.size(); ++i)
      if (code_of(a.character[i]) != code_of(b.character[i])) return code_of(a.character[i]) < code_of(b.character[i]);
    return false;
  });
  return out;
}

}  // namespace

void require_semisimple_field(const FinGroup& G, const FieldSpec& f) {
  if (!f.is_finite())
    throw Error(ErrorKind::NonSplit, "decompositions need a finite splitting field, not " + f.name());
  if (G.order() % f.characteristic() == 0)
    throw Error(ErrorKind::NotSemisimpleField,
                "characteristic " + std::to_string(f.characteristic()) + " divides |G| = " + std::to_string(G.order()));
}

std::vector<SimpleYD> simple_yd_modules(const GroupPtr& G, const FieldSpec& f, std::uint64_t seed) {
  require_semisimple_field(*G, f);
  std::mt19937_64 rng(seed);
  auto classes = conjugacy_classes(G);
  std::vector<SimpleYD> out;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const auto& cls = classes[ci];
    const Subgroup& C = cls.centralizer;
    std::vector<int> cpos = positions(C);
    std::vector<int> kpos(G->order(), -1);
    for (std::size_t k = 0; k < cls.elements.size(); ++k) kpos[cls.elements[k]] = static_cast<int>(k);
    auto irs = irreps_of(C, f, rng);
    for (std::size_t ri = 0; ri < irs.size(); ++ri) {
      const Irrep& ir = irs[ri];
      const std::size_t r = ir.dim, m = cls.elements.size();
      SimpleYD s;
      s.class_index = static_cast<int>(ci);
      s.irrep_index = static_cast<int>(ri);
      s.irrep_dim = ir.dim;
      s.character = ir.character;
      s.label = "X(" + G->label(cls.rep) + "," + std::to_string(ri) + ")";
      s.module = YDModule{G, f, {}, {}};
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < r; ++j) s.module.grade.push_back(cls.elements[k]);
      for (int h = 0; h < G->order(); ++h) {
        Matrix A(f, m * r, m * r);
        for (std::size_t k = 0; k < m; ++k) {
          std::size_t k2 = kpos[G->conj(h, cls.elements[k])];
          int c = G->mul(G->mul(G->inv(cls.conjugator[k2]), h), cls.conjugator[k]);
          const Matrix& R = ir.rho[cpos[c]];
          for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i)
              if (!R.is_zero_at(i, j)) A.set(k2 * r + i, k * r + j, R.get(i, j));
        }
        s.module.action.push_back(std::move(A));
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Summand> decompose(const YDModule& V, const std::vector<SimpleYD>& simples) {
  require_semisimple_field(*V.group, V.field);
  const FieldSpec& f = V.field;
  const FinGroup& G = *V.group;
  auto classes = conjugacy_classes(V.group);
  std::vector<Summand> out;
  std::size_t total = 0;
  for (std::size_t si = 0; si < simples.size(); ++si) {
    const SimpleYD& s = simples[si];
    const auto& cls = classes[s.class_index];
    auto vb = V.basis_of_grade(cls.rep);
    if (vb.empty()) continue;
    const Subgroup& C = cls.centralizer;
    auto cpos = positions(C);
    Matrix e(f, vb.size(), vb.size());
    for (int x = 0; x < C.order(); ++x) {
      int xi = cpos[G.inv(C.elements[x])];
      e = e + V.action[C.elements[x]].submatrix(vb, vb).scaled(s.character[xi]);
    }
    std::size_t rk = rank(e);
    if (rk % s.irrep_dim != 0) throw Error(ErrorKind::InternalInconsistency, "isotypic rank not a multiple of the irrep dimension");
    int mult = static_cast<int>(rk / s.irrep_dim);
    if (mult > 0) {
      out.push_back({static_cast<int>(si), mult});
      total += static_cast<std::size_t>(mult) * s.module.dim();
    }
  }
  if (total != V.dim())
    throw Error(ErrorKind::NonSplit, "simple summands account for " + std::to_string(total) + " of " +
                                         std::to_string(V.dim()) + " dimensions");
  return out;
}

std::vector<Summand> decompose(const YDModule& V, std::uint64_t seed) {
  return decompose(V, simple_yd_modules(V.group, V.field, seed));
}

}  // namespace rfa

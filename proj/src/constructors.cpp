#include <random>

#include "rfa/frobenius.hpp"
#include "tensor_util.hpp"

namespace rfa {

using detail::add;
using detail::SVec;

namespace {

struct Term {
  int coset = 0;
  int npos = 0;
  Scalar coef;
};

// Evaluates the defining formulas for fixed data and transversal.
struct Evaluator {
  const AlgebraData& d;
  const Transversal& T;
  FieldSpec f;
  Mutation mutation;
  const FinGroup& G;
  std::vector<int> npos, hpos;
  std::vector<Scalar> gpow, epow;

  Evaluator(const AlgebraData& data, const Transversal& t, const FieldSpec& field, Mutation mut)
      : d(data), T(t), f(field), mutation(mut), G(*data.H.group), npos(positions(data.N)), hpos(positions(data.H)) {
    Scalar zg = root_of_unity(f, d.gamma.order);
    for (int k = 0; k < d.gamma.order; ++k) gpow.push_back(zg.pow(k));
    Scalar ze = root_of_unity(f, d.epsilon.order);
    for (int k = 0; k < d.epsilon.order; ++k) epow.push_back(ze.pow(k));
  }

  Scalar gamma(int n, int m) const {
    int e = d.gamma.at(npos[n], npos[m]) % d.gamma.order;
    return gpow[(e + d.gamma.order) % d.gamma.order];
  }
  Scalar eps(int h, int n) const {
    int e = d.epsilon.at(hpos[h], npos[n]) % d.epsilon.order;
    return epow[(e + d.epsilon.order) % d.epsilon.order];
  }
  // a_{g,n} = eps_h(n) a_{g_i, h n h^-1} for g = g_i h
  Term reduce(int g, int n) const {
    auto [i, h] = T.decompose(g);
    Scalar c = mutation == Mutation::DropEpsilonInReduction ? Scalar::one(f) : eps(h, n);
    return {i, npos[G.conj(h, n)], c};
  }
  // a_{g,n} a_{k,m} in reduced form, or nullopt when the cosets differ
  std::optional<Term> product(int g, int n, int k, int m) const {
    if (T.coset_of[g] != T.coset_of[k]) return std::nullopt;
    int x = G.mul(G.inv(k), g);
    int n2 = G.conj(x, n);
    Scalar c = gamma(n2, m);
    if (mutation != Mutation::DropEpsilonInProduct) c *= eps(x, n);
    Term t = reduce(k, G.mul(n2, m));
    t.coef *= c;
    return t;
  }
};

int element_of(const Subgroup& N, int pos) { return N.elements[pos]; }

}  // namespace

GroupPtr subgroup_as_group(const Subgroup& H) {
  const FinGroup& G = *H.group;
  auto pos = positions(H);
  const int n = H.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < n; ++i) {
    labels.push_back(G.label(H.elements[i]));
    if (G.is_permutation_group()) perms.push_back(G.perm(H.elements[i]));
    for (int j = 0; j < n; ++j) table[i][j] = pos[G.mul(H.elements[i], H.elements[j])];
  }
  auto out = std::make_shared<FinGroup>(std::move(table), std::move(labels), std::move(perms));
  out->set_name(H.describe());
  return out;
}

void validate_data(const AlgebraData& d, const FieldSpec& f) {
  if (d.H.group.get() != d.N.group.get() && !(d.H.group->table() == d.N.group->table()))
    throw Error(ErrorKind::InvalidData, "H and N live in different groups");
  if (!is_subset(d.N, d.H)) throw Error(ErrorKind::InvalidData, "N not contained in H");
  if (!is_normal_in(d.N, d.H)) throw Error(ErrorKind::InvalidData, "N not normal in H");
  if (!(d.gamma.N == d.N)) throw Error(ErrorKind::InvalidData, "cocycle lives on a different subgroup");
  if (!(d.epsilon.N == d.N) || !(d.epsilon.H == d.H)) throw Error(ErrorKind::InvalidData, "epsilon lives on different subgroups");
  Report rc = check_cocycle(d.gamma);
  if (!rc.ok()) throw Error(ErrorKind::InvalidData, "gamma is not a normalized cocycle: " + rc.summary());
  Report re = check_epsilon(d.gamma, d.epsilon);
  if (!re.ok()) throw Error(ErrorKind::InvalidData, "epsilon conditions fail: " + re.summary());
  if (!is_invertible_integer(f, d.N.order()))
    throw Error(ErrorKind::NotInvertible, "|N| = " + std::to_string(d.N.order()) + " is zero in " + f.name());
  const int index = d.H.group->order() / d.H.order();
  if (!is_invertible_integer(f, index))
    throw Error(ErrorKind::NotInvertible, "|G:H| = " + std::to_string(index) + " is zero in " + f.name());
}

BuiltAlgebra build_A(const AlgebraData& d, const Transversal& T, const FieldSpec& f, BuildOptions opt) {
  if (opt.validate) validate_data(d, f);
  if (!(T.subgroup == d.H)) throw Error(ErrorKind::InvalidData, "transversal is for a different subgroup");
  Evaluator ev(d, T, f, opt.mutation);
  const FinGroup& G = *d.H.group;
  const int I = T.index(), n = d.N.order();
  const std::size_t dim = static_cast<std::size_t>(I) * n;

  BuiltAlgebra out;
  out.data = d;
  out.transversal = T;
  out.field = f;
  YDModule V{d.H.group, f, std::vector<int>(dim), {}};
  auto idx = [&](int i, int p) { return static_cast<std::size_t>(i) * n + p; };
  for (int i = 0; i < I; ++i)
    for (int p = 0; p < n; ++p) {
      V.grade[idx(i, p)] = G.conj(T.reps[i], element_of(d.N, p));
      out.basis_labels.push_back("a[" + G.label(T.reps[i]) + "," + G.label(element_of(d.N, p)) + "]");
    }
  for (int k = 0; k < G.order(); ++k) {
    Matrix A(f, dim, dim);
    for (int i = 0; i < I; ++i)
      for (int p = 0; p < n; ++p) {
        Term t = ev.reduce(G.mul(k, T.reps[i]), element_of(d.N, p));
        A.set(idx(t.coset, t.npos), idx(i, p), t.coef);
      }
    V.action.push_back(std::move(A));
  }

  Matrix m(f, dim, dim * dim);
  for (int i = 0; i < I; ++i)
    for (int p = 0; p < n; ++p)
      for (int j = 0; j < I; ++j)
        for (int q = 0; q < n; ++q) {
          auto t = ev.product(T.reps[i], element_of(d.N, p), T.reps[j], element_of(d.N, q));
          if (t) m.add_to(idx(t->coset, t->npos), idx(i, p) * dim + idx(j, q), t->coef);
        }
  Matrix u(f, dim, 1);
  for (int i = 0; i < I; ++i) u.set(idx(i, 0), 0, Scalar::one(f));

  // Delta(a_{g,n}) = sum_m gamma(m^-1, n) / gamma(m^-1, m) a_{g,m} (x) a_{g,m^-1 n}
  Matrix D(f, dim * dim, dim);
  Matrix eps(f, 1, dim);
  for (int i = 0; i < I; ++i)
    for (int p = 0; p < n; ++p) {
      int nn = element_of(d.N, p);
      for (int q = 0; q < n; ++q) {
        int mm = element_of(d.N, q);
        int mi = G.inv(mm);
        Scalar c = ev.gamma(mi, nn) / ev.gamma(mi, mm);
        D.add_to(idx(i, q) * dim + idx(i, ev.npos[G.mul(mi, nn)]), idx(i, p), c);
      }
      if (p == 0) eps.set(0, idx(i, p), Scalar::one(f));
    }
  out.algebra = AlgebraObject{std::move(V), std::move(m), std::move(u)};
  out.frobenius = FrobeniusData{std::move(D), std::move(eps)};
  return out;
}

BuiltAlgebra build_A(const AlgebraData& d, const FieldSpec& f, BuildOptions opt) {
  return build_A(d, coset_data(d.H), f, opt);
}

BuiltAlgebra build_B(const AlgebraData& d, const FieldSpec& f, BuildOptions opt) {
  if (opt.validate) validate_data(d, f);
  GroupPtr Hg = subgroup_as_group(d.H);
  auto hpos = positions(d.H);
  std::vector<int> nel;
  for (int x : d.N.elements) nel.push_back(hpos[x]);
  AlgebraData e;
  e.H = whole_group(Hg);
  e.N = subgroup_from_elements(Hg, nel);
  e.gamma = d.gamma;
  e.gamma.N = e.N;
  e.epsilon = d.epsilon;
  e.epsilon.H = e.H;
  e.epsilon.N = e.N;
  BuildOptions o = opt;
  o.validate = false;
  return build_A(e, coset_data(e.H), f, o);
}

BuiltAlgebra unit_algebra(const GroupPtr& G, const FieldSpec& f) {
  AlgebraData d;
  d.H = whole_group(G);
  d.N = trivial_subgroup(G);
  d.gamma = trivial_cocycle(d.N, 1);
  d.epsilon = trivial_epsilon(d.H, d.N, 1);
  return build_A(d, f);
}

Report well_definedness_audit(const AlgebraData& d, const FieldSpec& f, std::uint64_t seed, Mutation mutation) {
  Transversal base = coset_data(d.H);
  std::mt19937_64 rng(seed);
  const FinGroup& G = *d.H.group;
  std::vector<int> reps{0};
  for (int i = 1; i < base.index(); ++i) {
    std::vector<int> coset;
    for (int h : d.H.elements) coset.push_back(G.mul(base.reps[i], h));
    std::uniform_int_distribution<std::size_t> pick(0, coset.size() - 1);
    reps.push_back(coset[pick(rng)]);
  }
  return well_definedness_audit(d, f, transversal_from_reps(d.H, reps), mutation);
}

Report well_definedness_audit(const AlgebraData& d, const FieldSpec& f, const Transversal& second, Mutation mutation) {
  Report r;
  const FinGroup& G = *d.H.group;
  Transversal first = coset_data(d.H);
  BuildOptions opt{mutation, false};
  BuiltAlgebra A1 = build_A(d, first, f, opt);
  BuiltAlgebra A2 = build_A(d, second, f, opt);
  Evaluator ev(d, first, f, mutation);
  const int n = d.N.order();
  const std::size_t dim = A1.algebra.dim();

  // phi: a'_{g'_i, n} -> reduced form in the first transversal
  Matrix phi(f, dim, dim);
  for (int i = 0; i < second.index(); ++i)
    for (int p = 0; p < n; ++p) {
      Term t = ev.reduce(second.reps[i], d.N.elements[p]);
      phi.set(static_cast<std::size_t>(t.coset) * n + t.npos, static_cast<std::size_t>(i) * n + p, t.coef);
    }
  Report mor = check_morphism(A2.algebra.carrier, A1.algebra.carrier, phi);
  if (!mor.ok()) r.fail("relabeling is a YD morphism", mor.summary());
  else r.pass("relabeling is a YD morphism");
  Matrix pp = kron(phi, phi);
  if (phi * A2.algebra.mult != A1.algebra.mult * pp) r.fail("relabeling preserves multiplication", "");
  else r.pass("relabeling preserves multiplication");
  if (phi * A2.algebra.unit != A1.algebra.unit) r.fail("relabeling preserves unit", "");
  else r.pass("relabeling preserves unit");
  if (pp * A2.frobenius.comult != A1.frobenius.comult * phi) r.fail("relabeling preserves comultiplication", "");
  else r.pass("relabeling preserves comultiplication");
  if (A1.frobenius.counit * phi != A2.frobenius.counit) r.fail("relabeling preserves counit", "");
  else r.pass("relabeling preserves counit");

  // the product formula evaluated before and after rewriting with the relation
  auto as_vec = [&](const std::optional<Term>& t, const Scalar& s) {
    SVec v;
    if (t) add(v, static_cast<std::size_t>(t->coset) * n + t->npos, t->coef * s);
    return v;
  };
  const std::string left_id = "product respects a_{gh,n} = eps_h(n) a_{g,hnh^-1} in the left factor";
  const std::string right_id = "product respects a_{kh,m} = eps_h(m) a_{k,hmh^-1} in the right factor";
  std::size_t left_fail = 0, right_fail = 0;
  for (int g = 0; g < G.order(); ++g)
    for (int h : d.H.elements)
      for (int nn : d.N.elements)
        for (int k = 0; k < G.order(); ++k)
          for (int mm : d.N.elements) {
            auto lhs = as_vec(ev.product(G.mul(g, h), nn, k, mm), Scalar::one(f));
            auto rhs = as_vec(ev.product(g, G.conj(h, nn), k, mm), ev.eps(h, nn));
            if (lhs != rhs) {
              ++left_fail;
              r.fail(left_id, "(g=" + G.label(g) + ",h=" + G.label(h) + ",n=" + G.label(nn) + ",k=" + G.label(k) +
                                  ",m=" + G.label(mm) + ")");
            }
            auto lhs2 = as_vec(ev.product(g, nn, G.mul(k, h), mm), Scalar::one(f));
            auto rhs2 = as_vec(ev.product(g, nn, k, G.conj(h, mm)), ev.eps(h, mm));
            if (lhs2 != rhs2) {
              ++right_fail;
              r.fail(right_id, "(g=" + G.label(g) + ",n=" + G.label(nn) + ",k=" + G.label(k) + ",h=" + G.label(h) +
                                   ",m=" + G.label(mm) + ")");
            }
          }
  if (left_fail == 0) r.pass(left_id);
  if (right_fail == 0) r.pass(right_id);
  return r;
}

}  // namespace rfa

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rfa/localmod.hpp"

using namespace rfa;

namespace {

GroupPtr make(const std::string& name) { return std::make_shared<FinGroup>(FinGroup::named(name)); }

AlgebraData trivial_data(const Subgroup& H, const Subgroup& N) {
  return {H, N, trivial_cocycle(N, 1), trivial_epsilon(H, N, 1)};
}

// a^r c_{A,V} c_{V,A} through the dense braiding matrices
bool dense_local(const AModule& M) {
  const YDModule& A = M.algebra->carrier;
  return M.act * braiding(A, M.carrier) * braiding(M.carrier, A) == M.act;
}

std::size_t literal_cokernel_dim(const AModule& M, const AModule& N) {
  const FieldSpec& f = M.carrier.field;
  Matrix lhs = kron(M.act, Matrix::identity(f, N.dim()));
  Matrix rhs = kron(Matrix::identity(f, M.dim()), left_action(N));
  return M.dim() * N.dim() - rank(lhs - rhs);
}

bool has_invertible(const std::vector<Matrix>& homs, std::mt19937_64& rng) {
  if (homs.empty() || homs[0].rows() != homs[0].cols()) return false;
  const FieldSpec& f = homs[0].field();
  for (int tries = 0; tries < 8; ++tries) {
    Matrix F(f, homs[0].rows(), homs[0].cols());
    for (const auto& h : homs) F = F + h.scaled(random_scalar(f, rng));
    if (!determinant(F).is_zero()) return true;
  }
  return false;
}

BuiltAlgebra s3_cosets(const FieldSpec& f) {
  auto G = make("S3");
  Subgroup C2 = generated_subgroup(G, {G->find_label("(12)")});
  return build_A(trivial_data(C2, trivial_subgroup(G)), f);
}

}  // namespace

TEST(Modules, RegularModuleIsLocal) {
  BuiltAlgebra B = s3_cosets(FieldSpec::prime(7));
  RigidAlgebra A = make_rigid(B);
  AModule R = regular_module(A);
  EXPECT_TRUE(check_module(R).ok());
  LocalCert c = is_local(R);
  EXPECT_TRUE(c.is_local);
  EXPECT_FALSE(c.witness.has_value());
}

TEST(Modules, FreeModules) {
  FieldSpec f = FieldSpec::prime(7);
  BuiltAlgebra B = s3_cosets(f);
  RigidAlgebra A = make_rigid(B);
  auto G = B.algebra.carrier.group;
  // U(1) = A
  AModule U1 = free_module(A, unit_object(G, f));
  EXPECT_EQ(U1.act, A.algebra->mult);
  EXPECT_TRUE(check_module(U1).ok());
  // trivial grade-1 object gives a local module
  YDModule triv = direct_sum(unit_object(G, f), unit_object(G, f));
  AModule U = free_module(A, triv);
  EXPECT_EQ(U.dim(), 2 * A.dim());
  EXPECT_TRUE(is_local(U).is_local);
  EXPECT_TRUE(dense_local(U));
  // the free module on the 3-cycle class is not local
  auto simples = simple_yd_modules(G, f);
  int c3 = G->find_label("(123)");
  bool checked = false;
  for (const auto& X : simples) {
    if (X.module.grade[0] != c3 && X.module.grade.size() > 1 && X.module.grade[1] != c3) continue;
    if (std::find(X.module.grade.begin(), X.module.grade.end(), c3) == X.module.grade.end()) continue;
    AModule V = free_module(A, X.module);
    EXPECT_TRUE(check_module(V).ok());
    LocalCert lc = is_local(V);
    EXPECT_FALSE(lc.is_local);
    EXPECT_TRUE(lc.witness.has_value());
    EXPECT_FALSE(dense_local(V));
    EXPECT_EQ(V.dim(), X.module.dim() * A.dim());
    checked = true;
  }
  EXPECT_TRUE(checked);
}

TEST(Modules, BrokenActionIsReported) {
  FieldSpec f = FieldSpec::prime(7);
  RigidAlgebra A = make_rigid(s3_cosets(f));
  AModule R = regular_module(A);
  R.act.set(0, 1, R.act.get(0, 1) + Scalar::one(f));
  Report r = check_module(R);
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.violations.empty());
}

TEST(Modules, NotRigidIsRefused) {
  auto G = make("C3");
  FieldSpec f = FieldSpec::prime(3);
  BuiltAlgebra B = build_A(trivial_data(trivial_subgroup(G), trivial_subgroup(G)), f, {Mutation::None, false});
  try {
    make_rigid(B);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRigidFrobenius);
  }
}

class ModuleProps : public ::testing::TestWithParam<std::pair<std::string, std::int64_t>> {};

// every algebra on the group with the given field, together with its simples
std::vector<BuiltAlgebra> algebras_for(const GroupPtr& G, const FieldSpec& f) {
  std::vector<BuiltAlgebra> out;
  auto subs = subgroups(G);
  for (const auto& H : subs)
    for (const auto& N : subs) {
      if (!is_subset(N, H) || !is_normal_in(N, H)) continue;
      int vo = effective_value_order(f, N.order());
      for (const auto& g : enumerate_cocycles(N, vo).classes)
        for (const auto& e : enumerate_epsilons(H, N, g).systems) out.push_back(build_A({H, N, g, e}, f));
    }
  return out;
}

TEST_P(ModuleProps, AdjunctionAndQuotients) {
  auto [name, q] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::finite(q);
  auto Xs = simple_yd_modules(G, f);
  std::mt19937_64 rng(11);
  for (const auto& B : algebras_for(G, f)) {
    RigidAlgebra A = make_rigid(B);
    std::uniform_int_distribution<std::size_t> pick(0, Xs.size() - 1);
    for (int trial = 0; trial < 3; ++trial) {
      const YDModule& X = Xs[pick(rng)].module;
      const YDModule& Y = Xs[pick(rng)].module;
      AModule V = free_module(A, Y);
      AModule U = free_module(A, X);
      EXPECT_EQ(module_hom_space(U, V).size(), hom_space(X, V.carrier).size());
      // V is a quotient of a free module: the action V (x) A -> V is onto
      EXPECT_EQ(rank(V.act), V.dim());
    }
  }
}

TEST_P(ModuleProps, SimpleModulesAndCensus) {
  auto [name, q] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::finite(q);
  for (const auto& B : algebras_for(G, f)) {
    RigidAlgebra A = make_rigid(B);
    std::string what = B.data.H.describe() + " / " + B.data.N.describe();
    auto simples = simple_modules(A);
    ASSERT_FALSE(simples.empty());
    EXPECT_EQ(simples[0].module.dim(), A.dim()) << what;
    EXPECT_TRUE(simples[0].local);
    FpdimReport R = fpdim_checks(B, simples);
    EXPECT_TRUE(R.report.ok()) << what << ": " << R.report.summary();
    std::vector<SimpleAModule> locals;
    for (const auto& s : simples) {
      EXPECT_TRUE(check_module(s.module).ok()) << what << " " << s.module.label;
      EXPECT_TRUE(check_yd(s.module.carrier).ok());
      EXPECT_EQ(s.local, dense_local(s.module)) << what;
      // Schur: simple modules have one-dimensional endomorphisms
      EXPECT_EQ(module_hom_space(s.module, s.module).size(), 1u);
      if (s.local) locals.push_back(s);
    }
    // pairwise non-isomorphic
    for (std::size_t i = 0; i < simples.size(); ++i)
      for (std::size_t j = i + 1; j < simples.size(); ++j)
        EXPECT_TRUE(module_hom_space(simples[i].module, simples[j].module).empty()) << what;
    if (B.data.N.order() == B.data.H.order()) EXPECT_EQ(locals.size(), 1u) << what;
    MugerReport mu = muger_center_local(A, locals);
    EXPECT_TRUE(mu.trivial) << what << ": " << mu.report.summary();
    for (const auto& s : locals) EXPECT_TRUE(twist_local(A, s.module).ok()) << what;
    ModularData md = modular_data(A, locals);
    EXPECT_EQ(md.S, md.S.transpose());
    EXPECT_FALSE(determinant(md.S).is_zero()) << what;
    for (const auto& t : md.T) EXPECT_TRUE(t.pow(G->exponent()).is_one());
    // the column of A holds the dimensions dim M / dim A
    Scalar dA = integer_in_field(f, static_cast<std::int64_t>(A.dim()));
    for (std::size_t i = 0; i < locals.size(); ++i)
      EXPECT_EQ(md.S.get(i, 0) * dA, integer_in_field(f, static_cast<std::int64_t>(locals[i].module.dim())));
  }
}

TEST_P(ModuleProps, TensorOverA) {
  auto [name, q] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::finite(q);
  auto Xs = simple_yd_modules(G, f);
  std::mt19937_64 rng(5);
  for (const auto& B : algebras_for(G, f)) {
    if (B.algebra.dim() > 6) continue;
    RigidAlgebra A = make_rigid(B);
    std::string what = B.data.H.describe() + " / " + B.data.N.describe();
    AModule R = regular_module(A);
    auto locals = simple_local_modules(A);
    for (std::size_t i = 0; i < std::min<std::size_t>(3, Xs.size()); ++i) {
      const YDModule& X = Xs[(i * 5 + 1) % Xs.size()].module;
      const YDModule& Y = Xs[(i * 3 + 2) % Xs.size()].module;
      AModule U = free_module(A, X), V = free_module(A, Y);
      RelativeTensor T = tensor_over_A(A, U, V);
      EXPECT_EQ(T.module.dim(), X.dim() * Y.dim() * A.dim()) << what;
      EXPECT_EQ(T.module.dim(), literal_cokernel_dim(U, V)) << what;
      EXPECT_TRUE(check_module(T.module).ok()) << what;
      EXPECT_TRUE((T.projection * T.section).is_identity());
      // unitor A (x)_A U = U
      RelativeTensor AU = tensor_over_A(A, R, U);
      EXPECT_EQ(AU.module.dim(), U.dim());
      EXPECT_TRUE(has_invertible(module_hom_space(AU.module, U), rng)) << what;
      // a second pivot order gives an isomorphic module
      RelativeTensor T2 = tensor_over_A(A, U, V, true);
      EXPECT_TRUE(has_invertible(module_hom_space(T.module, T2.module), rng)) << what;
      EXPECT_EQ(decompose(T.module.carrier), decompose(T2.module.carrier));
    }
    for (const auto& M : locals)
      for (const auto& N : locals) {
        RelativeTensor T = tensor_over_A(A, M.module, N.module);
        EXPECT_TRUE(check_module(T.module).ok());
        EXPECT_TRUE(is_local(T.module).is_local) << what;
        EXPECT_EQ(T.module.dim(), literal_cokernel_dim(M.module, N.module));
      }
  }
}

TEST_P(ModuleProps, Duals) {
  auto [name, q] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::finite(q);
  auto Xs = simple_yd_modules(G, f);
  std::mt19937_64 rng(3);
  for (const auto& B : algebras_for(G, f)) {
    if (B.algebra.dim() > 6) continue;
    RigidAlgebra A = make_rigid(B);
    std::string what = B.data.H.describe() + " / " + B.data.N.describe();
    AModule R = regular_module(A);
    ModuleDual DA = dual_module(A, R);
    EXPECT_TRUE(check_dual(A, R, DA).ok()) << what << ": " << check_dual(A, R, DA).summary();
    EXPECT_TRUE(has_invertible(module_hom_space(DA.module, R), rng)) << what;
    for (const auto& X : Xs) {
      if (X.module.dim() != 1) continue;
      AModule U = free_module(A, X.module);
      ModuleDual D = dual_module(A, U);
      Report r = check_dual(A, U, D);
      EXPECT_TRUE(r.ok()) << what << " " << X.label << ": " << r.summary();
      EXPECT_EQ(is_local(U).is_local, is_local(D.module).is_local);
    }
    for (const auto& s : simple_local_modules(A)) {
      ModuleDual D = dual_module(A, s.module);
      EXPECT_TRUE(check_dual(A, s.module, D).ok()) << what;
      EXPECT_TRUE(is_local(D.module).is_local) << what;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, ModuleProps,
                         ::testing::Values(std::make_pair(std::string("C2"), std::int64_t{3}),
                                           std::make_pair(std::string("C3"), std::int64_t{7}),
                                           std::make_pair(std::string("S3"), std::int64_t{7}),
                                           std::make_pair(std::string("C2xC2"), std::int64_t{5})));

TEST(Census, UnitAlgebraOverC2) {
  auto G = make("C2");
  FieldSpec f = FieldSpec::prime(13);
  BuiltAlgebra U = unit_algebra(G, f);
  RigidAlgebra A = make_rigid(U);
  auto locals = simple_local_modules(A);
  ASSERT_EQ(locals.size(), 4u);
  // brute force: one simple per (grade, character) pair, all one-dimensional
  std::set<std::pair<int, std::int64_t>> seen;
  for (const auto& s : locals) {
    ASSERT_EQ(s.module.dim(), 1u);
    seen.insert({s.module.carrier.grade[0], s.module.carrier.action[1].get(0, 0).residue()});
  }
  EXPECT_EQ(seen.size(), 4u);
  MugerReport mu = muger_center_local(A, locals);
  EXPECT_TRUE(mu.trivial);
  ModularData md = modular_data(A, locals);
  // S_{MX} = chi_X(g_M) chi_M(g_X)
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const YDModule& M = locals[i].module.carrier;
      const YDModule& X = locals[j].module.carrier;
      EXPECT_EQ(md.S.get(i, j), X.action[M.grade[0]].get(0, 0) * M.action[X.grade[0]].get(0, 0));
    }
  EXPECT_FALSE(determinant(md.S).is_zero());
  std::multiset<std::int64_t> T;
  for (const auto& t : md.T) T.insert(t.residue());
  EXPECT_EQ(T, (std::multiset<std::int64_t>{1, 1, 1, 12}));
}

TEST(Census, CosetsOfS3) {
  FieldSpec f = FieldSpec::prime(13);
  BuiltAlgebra B = s3_cosets(f);
  RigidAlgebra A = make_rigid(B);
  auto locals = simple_local_modules(A);
  ASSERT_EQ(locals.size(), 4u);
  for (const auto& s : locals) EXPECT_EQ(s.module.dim(), 3u);
  FpdimReport R = fpdim_checks(B);
  EXPECT_TRUE(R.census);
  EXPECT_EQ(R.local_count, 4);
  EXPECT_EQ(R.census_local, 4 * 9);
  EXPECT_EQ(R.fpdim_local, 4);
  EXPECT_TRUE(R.report.ok());
  EXPECT_TRUE(muger_center_local(A, locals).trivial);
  // same spectrum as the toric code
  ModularData md = modular_data(A, locals);
  std::multiset<std::int64_t> T;
  for (const auto& t : md.T) T.insert(t.residue());
  EXPECT_EQ(T, (std::multiset<std::int64_t>{1, 1, 1, 12}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Scalar s = md.S.get(i, j);
      EXPECT_TRUE(s.is_one() || (-s).is_one());
    }
}

TEST(Fpdim, FormulaValues) {
  auto G = make("S4");
  int a = G->find_label("(12)(34)"), b = G->find_label("(13)(24)");
  Subgroup N = generated_subgroup(G, {a, b});
  Subgroup A4 = generated_subgroup(G, {G->find_label("(123)"), a});
  BuiltAlgebra B = build_A({A4, N, sign_cocycle(N, a, b, 0, 0, 2), trivial_epsilon(A4, N, 2)}, FieldSpec::prime(3));
  FpdimReport R = fpdim_checks(B);
  EXPECT_EQ(R.fpdim_local, 9);
  EXPECT_EQ(R.fpdim_rep, 72);
  EXPECT_EQ(R.formula_dim, 8);
  EXPECT_FALSE(R.census);
  EXPECT_NE(R.census_skipped.find("NotSemisimpleField"), std::string::npos);

  auto C6 = make("C6");
  BuiltAlgebra K = build_A(trivial_data(whole_group(C6), generated_subgroup(C6, {3})), FieldSpec::prime(3));
  FpdimReport RK = fpdim_checks(K);
  EXPECT_EQ(RK.fpdim_local, 9);
  EXPECT_FALSE(RK.census);

  auto S3 = make("S3");
  Subgroup C3 = generated_subgroup(S3, {S3->find_label("(123)")});
  BuiltAlgebra F = build_A(trivial_data(C3, trivial_subgroup(S3)), FieldSpec::prime(7));
  FpdimReport RF = fpdim_checks(F);
  EXPECT_EQ(RF.fpdim_local, 9);
  EXPECT_TRUE(RF.census);
  EXPECT_EQ(RF.local_count, 9);  // Z(Rep kC3)
  EXPECT_TRUE(RF.report.ok());
}

TEST(Twist, NonLocalModuleFails) {
  FieldSpec f = FieldSpec::prime(7);
  RigidAlgebra A = make_rigid(s3_cosets(f));
  EXPECT_TRUE(twist_local(A, regular_module(A)).ok());
  for (const auto& s : simple_modules(A))
    EXPECT_EQ(twist_local(A, s.module).ok(), s.local) << s.module.label;
}

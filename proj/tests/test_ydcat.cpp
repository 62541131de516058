#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "rfa/ydcat.hpp"

using namespace rfa;

namespace {

GroupPtr make(const std::string& name) { return std::make_shared<FinGroup>(FinGroup::named(name)); }

// 1-dimensional module over an abelian group: grade g, action by a character.
YDModule line(const GroupPtr& G, const FieldSpec& f, int g, const std::vector<Scalar>& chi) {
  YDModule V{G, f, {g}, {}};
  for (int h = 0; h < G->order(); ++h) {
    Matrix A(f, 1, 1);
    A.set(0, 0, chi[h]);
    V.action.push_back(A);
  }
  return V;
}

// basis (a, x) with grade a and h.(a, x) = (h a h^-1, h x)
YDModule double_regular(const GroupPtr& G, const FieldSpec& f) {
  const int n = G->order();
  YDModule V{G, f, {}, {}};
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) V.grade.push_back(a);
  for (int h = 0; h < n; ++h) {
    Matrix A(f, n * n, n * n);
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x) A.set(G->conj(h, a) * n + G->mul(h, x), a * n + x, Scalar::one(f));
    V.action.push_back(A);
  }
  return V;
}

Matrix random_invertible(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix M = random_matrix(f, n, n, rng);
    if (!determinant(M).is_zero()) return M;
  }
}

// A direct sum of random simples, hidden by a random grade-preserving change of basis.
YDModule random_module(const std::vector<SimpleYD>& simples, std::mt19937_64& rng, int parts = 2) {
  std::uniform_int_distribution<std::size_t> pick(0, simples.size() - 1);
  YDModule V = simples[pick(rng)].module;
  for (int i = 1; i < parts; ++i) V = direct_sum(V, simples[pick(rng)].module);
  const FieldSpec& f = V.field;
  Matrix P(f, V.dim(), V.dim());
  for (int g = 0; g < V.group->order(); ++g) {
    auto b = V.basis_of_grade(g);
    if (b.empty()) continue;
    Matrix B = random_invertible(f, b.size(), rng);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) P.set(b[i], b[j], B.get(i, j));
  }
  Matrix Pi = inverse(P);
  for (auto& A : V.action) A = P * A * Pi;
  return V;
}

Matrix random_morphism(const YDModule& V, const YDModule& W, std::mt19937_64& rng) {
  Matrix F(V.field, W.dim(), V.dim());
  for (const auto& B : hom_space(V, W)) F = F + B.scaled(random_scalar(V.field, rng));
  return F;
}

std::size_t span_rank(const std::vector<Matrix>& ms, const FieldSpec& f, std::size_t r, std::size_t c) {
  if (ms.empty()) return 0;
  std::vector<Matrix> cols;
  for (const auto& M : ms) {
    Matrix v(f, r * c, 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) v.set(i * c + j, 0, M.get(i, j));
    cols.push_back(v);
  }
  return rank(Matrix::hstack(cols, f, r * c));
}

// number of orbits of G on commuting pairs under simultaneous conjugation
int commuting_pair_orbits(const FinGroup& G) {
  std::set<std::pair<int, int>> seen;
  int orbits = 0;
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) {
      if (G.mul(a, b) != G.mul(b, a) || seen.count({a, b})) continue;
      ++orbits;
      for (int h = 0; h < G.order(); ++h) seen.insert({G.conj(h, a), G.conj(h, b)});
    }
  return orbits;
}

}  // namespace

TEST(YDModule, UnitObject) {
  auto G = make("S3");
  FieldSpec f = FieldSpec::prime(7);
  YDModule U = unit_object(G, f);
  EXPECT_TRUE(check_yd(U).ok());
  EXPECT_EQ(U.dim(), 1u);
  EXPECT_EQ(U.grade[0], 0);
  DualData D = dual(U);
  EXPECT_EQ(D.module.grade, U.grade);
  for (int h = 0; h < G->order(); ++h) EXPECT_EQ(D.module.action[h], U.action[h]);
  EXPECT_TRUE(twist(U).is_identity());
  EXPECT_EQ(hom_space(U, U).size(), 1u);
}

TEST(YDModule, GradingViolationHasWitness) {
  auto G = make("C2");
  FieldSpec f = FieldSpec::prime(13);
  int s = 1;
  // grades e and s, but the generator swaps the two basis vectors
  Matrix swap(f, 2, 2);
  swap.set(0, 1, Scalar::one(f));
  swap.set(1, 0, Scalar::one(f));
  YDModule V = yd_from_generators(G, f, {0, s}, {s}, {swap});
  Report r = check_yd(V);
  EXPECT_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.violations)
    if (v.identity.find("YD compatibility") != std::string::npos && v.witness == "(" + G->label(s) + "," + G->label(0) + ")")
      found = true;
  EXPECT_TRUE(found);
}

TEST(YDModule, ShapeMismatch) {
  auto G = make("C2");
  FieldSpec f = FieldSpec::prime(13);
  YDModule V = unit_object(G, f);
  V.action[1] = Matrix::identity(f, 2);
  try {
    check_yd(V);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
  YDModule W = unit_object(make("C3"), f);
  try {
    tensor(unit_object(G, f), W);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
}

TEST(Braiding, LinesOverC2) {
  auto G = make("C2");
  FieldSpec f = FieldSpec::prime(13);
  const Scalar one = Scalar::one(f), m1 = -one;
  std::vector<std::vector<Scalar>> chars{{one, one}, {one, m1}};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (const auto& cx : chars)
        for (const auto& cy : chars) {
          YDModule X = line(G, f, x, cx), Y = line(G, f, y, cy);
          ASSERT_TRUE(check_yd(X).ok());
          Matrix c = braiding(X, Y);
          // c(v (x) w) = (x . w) (x) v, scalar chi_Y(x)
          EXPECT_EQ(c.get(0, 0), cy[x]);
          Matrix dbl = braiding(Y, X) * c;
          EXPECT_EQ(dbl.get(0, 0), cy[x] * cx[y]);
        }
  // the (grade s, sign) line braids with itself by -1 and double braids trivially
  YDModule S = line(G, f, 1, chars[1]);
  EXPECT_EQ(braiding(S, S).get(0, 0), m1);
  EXPECT_TRUE((braiding(S, S) * braiding(S, S)).is_identity());
}

class YDProperties : public ::testing::TestWithParam<std::pair<std::string, std::int64_t>> {};

TEST_P(YDProperties, BraidingInverseNaturalityBalancing) {
  auto [name, p] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::prime(p);
  auto simples = simple_yd_modules(G, f);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    YDModule V = random_module(simples, rng), W = random_module(simples, rng);
    ASSERT_TRUE(check_yd(V).ok());
    Matrix c = braiding(V, W);
    EXPECT_TRUE(check_morphism(tensor(V, W), tensor(W, V), c).ok());
    EXPECT_TRUE((c * braiding_inverse(V, W)).is_identity());
    EXPECT_TRUE((braiding_inverse(V, W) * c).is_identity());

    // naturality against random morphisms
    YDModule V2 = random_module(simples, rng), W2 = random_module(simples, rng);
    Matrix fv = random_morphism(V, V2, rng), gw = random_morphism(W, W2, rng);
    EXPECT_EQ(braiding(V2, W2) * kron(fv, gw), kron(gw, fv) * c);

    // balancing
    Matrix lhs = twist(tensor(V, W));
    Matrix rhs = kron(twist(V), twist(W)) * braiding(W, V) * c;
    EXPECT_EQ(lhs, rhs);

    // twist is natural
    EXPECT_EQ(fv * twist(V), twist(V2) * fv);
    EXPECT_TRUE(check_morphism(V, V, twist(V)).ok());

    // double braiding with the unit
    YDModule U = unit_object(G, f);
    EXPECT_TRUE((braiding(V, U) * braiding(U, V)).is_identity());
  }
}

TEST_P(YDProperties, ZigZags) {
  auto [name, p] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::prime(p);
  auto simples = simple_yd_modules(G, f);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    YDModule V = random_module(simples, rng);
    DualData D = dual(V);
    ASSERT_TRUE(check_yd(D.module).ok());
    EXPECT_TRUE(check_morphism(tensor(D.module, V), unit_object(G, f), D.ev).ok());
    EXPECT_TRUE(check_morphism(unit_object(G, f), tensor(V, D.module), D.coev).ok());
    Matrix IV = Matrix::identity(f, V.dim());
    EXPECT_TRUE((kron(IV, D.ev) * kron(D.coev, IV)).is_identity());
    EXPECT_TRUE((kron(D.ev, IV) * kron(IV, D.coev)).is_identity());
  }
}

TEST_P(YDProperties, HomSolversAgree) {
  auto [name, p] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::prime(p);
  auto simples = simple_yd_modules(G, f);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    YDModule V = random_module(simples, rng, 2), W = random_module(simples, rng, 3);
    auto fast = hom_space(V, W);
    auto slow = hom_space_naive(V, W);
    EXPECT_EQ(fast.size(), slow.size());
    EXPECT_EQ(span_rank(fast, f, W.dim(), V.dim()), fast.size());
    for (const auto& F : fast) EXPECT_TRUE(check_morphism(V, W, F).ok());
    auto both = fast;
    both.insert(both.end(), slow.begin(), slow.end());
    EXPECT_EQ(span_rank(both, f, W.dim(), V.dim()), slow.size());
    // invariants compute Hom(1, V)
    EXPECT_EQ(invariants(V).cols(), hom_space(unit_object(G, f), V).size());
  }
}

TEST_P(YDProperties, SimplesAreAbsolutelySimple) {
  auto [name, p] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::prime(p);
  auto simples = simple_yd_modules(G, f);
  EXPECT_EQ(static_cast<int>(simples.size()), commuting_pair_orbits(*G));
  std::size_t sumsq = 0;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    EXPECT_TRUE(check_yd(simples[i].module).ok()) << simples[i].label;
    sumsq += simples[i].module.dim() * simples[i].module.dim();
    for (std::size_t j = 0; j < simples.size(); ++j)
      EXPECT_EQ(hom_space(simples[i].module, simples[j].module).size(), i == j ? 1u : 0u);
  }
  EXPECT_EQ(sumsq, static_cast<std::size_t>(G->order() * G->order()));
}

TEST_P(YDProperties, RegularModuleOfTheDouble) {
  auto [name, p] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::prime(p);
  auto simples = simple_yd_modules(G, f);
  YDModule V = double_regular(G, f);
  ASSERT_TRUE(check_yd(V).ok());
  auto parts = decompose(V, simples);
  EXPECT_EQ(parts.size(), simples.size());
  for (const auto& s : parts) EXPECT_EQ(static_cast<std::size_t>(s.multiplicity), simples[s.simple_index].module.dim());
}

INSTANTIATE_TEST_SUITE_P(Groups, YDProperties,
                         ::testing::Values(std::make_pair(std::string("C2"), std::int64_t{13}),
                                           std::make_pair(std::string("C3"), std::int64_t{7}),
                                           std::make_pair(std::string("S3"), std::int64_t{7}),
                                           std::make_pair(std::string("D4"), std::int64_t{5}),
                                           std::make_pair(std::string("Q8"), std::int64_t{5})));

TEST(Hom, RegularGradingOverC2) {
  auto G = make("C2");
  FieldSpec f = FieldSpec::prime(3);
  // grade g on e_g, trivial action
  YDModule V = yd_from_generators(G, f, {0, 1}, {1}, {Matrix::identity(f, 2)});
  ASSERT_TRUE(check_yd(V).ok());
  // brute force over all 81 matrices
  int count = 0;
  for (int code = 0; code < 81; ++code) {
    Matrix F(f, 2, 2);
    int c = code;
    for (int i = 0; i < 4; ++i, c /= 3) F.set(i / 2, i % 2, Scalar::from_int(f, c % 3));
    if (check_morphism(V, V, F).ok()) ++count;
  }
  EXPECT_EQ(count, 9);
  EXPECT_EQ(hom_space(V, V).size(), 2u);
  EXPECT_EQ(hom_space_naive(V, V).size(), 2u);
}

TEST(EndAlgebra, StructureConstants) {
  auto G = make("S3");
  FieldSpec f = FieldSpec::prime(7);
  auto simples = simple_yd_modules(G, f);
  std::mt19937_64 rng(3);
  YDModule V = direct_sum(simples[1].module, direct_sum(simples[1].module, simples[4].module));
  EndAlgebra E = end_algebra(V);
  ASSERT_EQ(E.basis.size(), 5u);
  for (std::size_t i = 0; i < E.basis.size(); ++i)
    for (std::size_t j = 0; j < E.basis.size(); ++j) {
      Matrix s(f, V.dim(), V.dim());
      for (std::size_t k = 0; k < E.basis.size(); ++k) s = s + E.basis[k].scaled(E.structure[i][j][k]);
      EXPECT_EQ(s, E.basis[i] * E.basis[j]);
    }
}

TEST(Decompose, UnitAndLinesOverC2) {
  auto G = make("C2");
  FieldSpec f = FieldSpec::prime(13);
  auto simples = simple_yd_modules(G, f);
  // all 1-dim YD modules over C2 are (grade, character) pairs
  ASSERT_EQ(simples.size(), 4u);
  for (const auto& s : simples) EXPECT_EQ(s.module.dim(), 1u);
  auto u = decompose(unit_object(G, f), simples);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u[0].multiplicity, 1);
  EXPECT_EQ(simples[u[0].simple_index].module.grade[0], 0);
  EXPECT_TRUE(simples[u[0].simple_index].module.action[1].is_identity());

  auto parts = decompose(double_regular(G, f), simples);
  ASSERT_EQ(parts.size(), 4u);
  std::set<int> distinct;
  for (const auto& s : parts) {
    EXPECT_EQ(s.multiplicity, 1);
    distinct.insert(s.simple_index);
  }
  EXPECT_EQ(distinct.size(), 4u);
}

TEST(Decompose, ReassemblyIsIsomorphic) {
  auto G = make("S3");
  FieldSpec f = FieldSpec::prime(7);
  auto simples = simple_yd_modules(G, f);
  std::mt19937_64 rng(9);
  YDModule V = random_module(simples, rng, 4);
  auto parts = decompose(V, simples);
  YDModule W;
  bool first = true;
  std::size_t sumsq = 0;
  for (const auto& s : parts)
    for (int k = 0; k < s.multiplicity; ++k) {
      W = first ? simples[s.simple_index].module : direct_sum(W, simples[s.simple_index].module);
      first = false;
    }
  for (const auto& s : parts) sumsq += static_cast<std::size_t>(s.multiplicity * s.multiplicity);
  EXPECT_EQ(W.dim(), V.dim());
  EXPECT_EQ(hom_space(V, W).size(), sumsq);
  EXPECT_EQ(hom_space(W, V).size(), sumsq);
  EXPECT_EQ(hom_space(V, V).size(), sumsq);
}

TEST(Decompose, TotalDimensionOfTheDouble) {
  for (auto [name, q] : std::vector<std::pair<std::string, std::int64_t>>{{"C2", 13}, {"C3", 7}, {"C3", 4}, {"A4", 7}, {"S4", 13}}) {
    auto G = make(name);
    auto simples = simple_yd_modules(G, FieldSpec::finite(q));
    std::size_t sumsq = 0;
    for (const auto& s : simples) sumsq += s.module.dim() * s.module.dim();
    EXPECT_EQ(sumsq, static_cast<std::size_t>(G->order() * G->order())) << name;
    EXPECT_EQ(static_cast<int>(simples.size()), commuting_pair_orbits(*G)) << name;
  }
}

TEST(Decompose, FieldErrors) {
  auto G = make("S3");
  try {
    simple_yd_modules(G, FieldSpec::prime(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSemisimpleField);
  }
  try {
    simple_yd_modules(G, FieldSpec::cyclotomic(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonSplit);
  }
  // F_5 has no primitive cube root of unity, so kC3 does not split
  try {
    simple_yd_modules(make("C3"), FieldSpec::prime(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonSplit);
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rfa/cocycle.hpp"

using namespace rfa;

namespace {

GroupPtr make(const std::string& name) { return std::make_shared<FinGroup>(FinGroup::named(name)); }

struct Klein {
  GroupPtr G;
  Subgroup A4, N;
  int a, b;
};

Klein klein_in_a4() {
  Klein k;
  k.G = make("S4");
  k.a = k.G->find_label("(12)(34)");
  k.b = k.G->find_label("(13)(24)");
  k.N = generated_subgroup(k.G, {k.a, k.b});
  k.A4 = generated_subgroup(k.G, {k.G->find_label("(123)"), k.a});
  return k;
}

// Class count by brute force: all normalized mu_vo tables, filtered by the
// cocycle identity, modulo coboundaries of b valued in mu_{vo * exp N}.
int brute_class_count(const Subgroup& N, int vo) {
  const FinGroup& G = *N.group;
  auto pos = positions(N);
  const int n = N.order();
  int e = 1;
  for (int x : N.elements) e = std::lcm(e, G.element_order(x));
  const int L = vo * e;
  auto mulp = [&](int i, int j) { return pos[G.mul(N.elements[i], N.elements[j])]; };
  const int cells = (n - 1) * (n - 1);
  std::vector<std::vector<int>> cocycles;
  std::vector<int> t(cells, 0);
  while (true) {
    auto at = [&](int i, int j) { return (i == 0 || j == 0) ? 0 : t[(i - 1) * (n - 1) + (j - 1)]; };
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if ((at(i, j) + at(mulp(i, j), k) - at(i, mulp(j, k)) - at(j, k)) % vo != 0) ok = false;
    if (ok) cocycles.push_back(t);
    int c = 0;
    while (c < cells && ++t[c] == vo) t[c++] = 0;
    if (c == cells) break;
  }
  // coboundary exponents in Z/L that are multiples of e (so land in mu_vo)
  std::vector<std::vector<int>> cobs;
  std::vector<int> b(n - 1, 0);
  while (true) {
    auto bb = [&](int i) { return i == 0 ? 0 : b[i - 1]; };
    std::vector<int> d(cells);
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      for (int j = 1; j < n && ok; ++j) {
        int v = ((bb(i) + bb(j) - bb(mulp(i, j))) % L + L) % L;
        if (v % e != 0) ok = false;
        d[(i - 1) * (n - 1) + (j - 1)] = v / e;
      }
    if (ok) cobs.push_back(d);
    int c = 0;
    while (c < n - 1 && ++b[c] == L) b[c++] = 0;
    if (c == n - 1) break;
  }
  std::set<std::vector<int>> classes;
  for (const auto& z : cocycles) {
    std::vector<int> best = z;
    for (const auto& d : cobs) {
      std::vector<int> w(cells);
      for (int i = 0; i < cells; ++i) w[i] = (z[i] + d[i]) % vo;
      best = std::min(best, w);
    }
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

}  // namespace

TEST(Cocycle, TrivialDataIsValid) {
  auto G = make("S3");
  for (const auto& N : subgroups(G)) {
    auto g = trivial_cocycle(N, 2);
    EXPECT_TRUE(check_cocycle(g).ok());
  }
  auto H = whole_group(G);
  auto N = generated_subgroup(G, {G->find_label("(123)")});
  EXPECT_TRUE(check_epsilon(trivial_cocycle(N, 3), trivial_epsilon(H, N, 3)).ok());
}

TEST(Cocycle, SignCocyclesAreValid) {
  auto k = klein_in_a4();
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) {
      auto g = sign_cocycle(k.N, k.a, k.b, s1, s2, 2);
      EXPECT_TRUE(check_cocycle(g).ok());
    }
}

TEST(Cocycle, BrokenCocycleGetsWitness) {
  auto k = klein_in_a4();
  auto g = sign_cocycle(k.N, k.a, k.b, 1, 0, 2);
  g.at(1, 2) = (g.at(1, 2) + 1) % 2;
  auto r = check_cocycle(g);
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations[0].identity, "cocycle identity");
  g.at(0, 1) = 1;
  r = check_cocycle(g);
  EXPECT_EQ(r.violations[0].identity, "cocycle normalization");
}

TEST(Cocycle, Coboundaries) {
  auto G = make("C2xC2");
  auto N = whole_group(G);
  EXPECT_EQ(coboundary(N, {0, 0, 0, 0}, 4), trivial_cocycle(N, 4));
  std::mt19937_64 rng(2);
  for (int it = 0; it < 20; ++it) {
    std::vector<int> b{0, int(rng() % 4), int(rng() % 4), int(rng() % 4)};
    auto d = coboundary(N, b, 4);
    EXPECT_TRUE(check_cocycle(d).ok());
    auto w = cohomologous(d, trivial_cocycle(N, 4), 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(coboundary(N, *w, 4), d);
  }
}

TEST(Cocycle, SignClassesOverF13) {
  auto k = klein_in_a4();
  int vo = effective_value_order(FieldSpec::prime(13), 4);
  ASSERT_EQ(vo, 4);
  auto s00 = sign_cocycle(k.N, k.a, k.b, 0, 0, vo);
  auto s11 = sign_cocycle(k.N, k.a, k.b, 1, 1, vo);
  auto s10 = sign_cocycle(k.N, k.a, k.b, 1, 0, vo);
  auto s01 = sign_cocycle(k.N, k.a, k.b, 0, 1, vo);
  // a symmetric flip is a coboundary
  EXPECT_TRUE(cohomologous(s11, s00, vo).has_value());
  EXPECT_TRUE(cohomologous(s10, s01, vo).has_value());
  EXPECT_FALSE(cohomologous(s10, s00, vo).has_value());
  auto en = enumerate_cocycles(k.N, vo);
  EXPECT_EQ(en.classes.size(), 2u);
  EXPECT_EQ(static_cast<int>(en.classes.size()), brute_class_count(k.N, vo));
  EXPECT_EQ(canonical_cocycle(s10), canonical_cocycle(s01));
  EXPECT_NE(canonical_cocycle(s10), canonical_cocycle(s00));
}

TEST(Cocycle, ClassCountsMatchBruteForce) {
  struct Case {
    const char* group;
    int vo;
    int expected;
  };
  for (Case c : {Case{"C2", 2, 1}, Case{"C2xC2", 2, 2}, Case{"C3", 3, 1}, Case{"C4", 4, 1}, Case{"C2xC2", 4, 2},
                 Case{"C2", 4, 1}}) {
    auto G = make(c.group);
    auto N = whole_group(G);
    auto en = enumerate_cocycles(N, c.vo);
    EXPECT_EQ(static_cast<int>(en.classes.size()), c.expected) << c.group;
    EXPECT_EQ(static_cast<int>(en.classes.size()), brute_class_count(N, c.vo)) << c.group;
    for (const auto& g : en.classes) {
      EXPECT_TRUE(check_cocycle(g).ok());
      EXPECT_EQ(canonical_cocycle(g), g);
    }
  }
}

TEST(Cocycle, LargerGroupsAgreeWithKnownMultipliers) {
  // Schur multipliers: D4 -> Z/2, Q8 -> 0, C2xC4 -> Z/2, A4 -> Z/2
  struct Case {
    const char* group;
    int vo;
    std::size_t expected;
  };
  for (Case c : {Case{"D4", 8, 2}, Case{"Q8", 8, 1}, Case{"C2xC4", 8, 2}, Case{"A4", 12, 2}}) {
    auto G = make(c.group);
    auto en = enumerate_cocycles(whole_group(G), c.vo, 12);
    EXPECT_EQ(en.classes.size(), c.expected) << c.group;
  }
}

TEST(Cocycle, SizeBound) {
  auto G = make("S4");
  try {
    enumerate_cocycles(whole_group(G), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeBound);
  }
}

TEST(Epsilon, ForcedOnN) {
  auto G = make("C2");
  auto N = whole_group(G);
  auto g = trivial_cocycle(N, 2);
  for (int x : epsilon_on_N(g)) EXPECT_EQ(x, 0);
  auto en = enumerate_epsilons(N, N, g);
  ASSERT_EQ(en.systems.size(), 1u);
  for (int x : en.systems[0].exps) EXPECT_EQ(x, 0);
}

TEST(Epsilon, KleinInA4) {
  auto k = klein_in_a4();
  // trivial class: the trivial epsilon passes, as in the worked example
  auto g0 = sign_cocycle(k.N, k.a, k.b, 0, 0, 2);
  EXPECT_TRUE(check_epsilon(g0, trivial_epsilon(k.A4, k.N, 2)).ok());
  auto en0 = enumerate_epsilons(k.A4, k.N, g0);
  EXPECT_FALSE(en0.inconsistent);
  EXPECT_EQ(en0.systems.front(), trivial_epsilon(k.A4, k.N, 2));
  // nontrivial class: the forced values on N x N are not trivial, so epsilon cannot be
  auto g1 = sign_cocycle(k.N, k.a, k.b, 1, 0, 2);
  auto forced = epsilon_on_N(g1);
  EXPECT_NE(std::count(forced.begin(), forced.end(), 0), static_cast<long>(forced.size()));
  EXPECT_FALSE(check_epsilon(g1, trivial_epsilon(k.A4, k.N, 2)).ok());
  // with signs only, (123) cannot be compensated: it needs a square root of -1
  auto en1 = enumerate_epsilons(k.A4, k.N, g1);
  EXPECT_TRUE(en1.inconsistent);
  EXPECT_TRUE(en1.systems.empty());
  auto g1w = sign_cocycle(k.N, k.a, k.b, 1, 0, 4);
  auto en1w = enumerate_epsilons(k.A4, k.N, g1w);
  EXPECT_FALSE(en1w.inconsistent);
  ASSERT_EQ(en1w.systems.size(), 1u);
  bool uses_i = false;
  for (const auto& e : en1w.systems) {
    EXPECT_TRUE(check_epsilon(g1w, e).ok());
    for (int x : e.exps) uses_i = uses_i || x % 2 == 1;
  }
  EXPECT_TRUE(uses_i);
}

TEST(Epsilon, EnumeratedSystemsAreValidEverywhere) {
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    auto G = make(name);
    auto subs = subgroups(G);
    for (const auto& H : subs)
      for (const auto& N : subs) {
        if (!is_subset(N, H) || !is_normal_in(N, H)) continue;
        auto en = enumerate_cocycles(N, N.order(), 12);
        for (const auto& g : en.classes) {
          // forced table satisfies the compatibility on N automatically
          auto forced = epsilon_on_N(g);
          auto ee = enumerate_epsilons(H, N, g);
          for (const auto& e : ee.systems) {
            EXPECT_TRUE(check_epsilon(g, e).ok()) << name;
            EXPECT_EQ(canonical_epsilon(e), e);
            auto posH = positions(H);
            for (int ni = 0; ni < N.order(); ++ni)
              for (int mi = 0; mi < N.order(); ++mi)
                EXPECT_EQ(e.at(posH[N.elements[ni]], mi), forced[ni * N.order() + mi]);
          }
        }
      }
  }
}

TEST(Epsilon, BrokenSymmetryIsReported) {
  auto G = make("C2");
  auto N = whole_group(G);
  auto g = trivial_cocycle(N, 2);
  auto e = trivial_epsilon(N, N, 2);
  e.at(1, 1) = 1;
  auto r = check_epsilon(g, e);
  EXPECT_FALSE(r.ok());
  bool saw = false;
  for (const auto& v : r.violations) saw = saw || v.identity == "epsilon-cocycle symmetry on N";
  EXPECT_TRUE(saw);
}

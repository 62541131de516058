#include <gtest/gtest.h>

#include <set>

#include "rfa/group.hpp"

using namespace rfa;

namespace {

GroupPtr make(const std::string& name) { return std::make_shared<FinGroup>(FinGroup::named(name)); }

// closure of a generating set by repeated multiplication, independent of the library's routine
std::vector<int> closure(const FinGroup& G, const std::vector<int>& gens) {
  std::set<int> s{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int g : gens)
        if (s.insert(G.mul(a, g)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

// subgroups as closures of all pairs; every subgroup of the groups used here is 2-generated
std::set<std::vector<int>> subgroups_oracle(const FinGroup& G) {
  std::set<std::vector<int>> out;
  for (int a = 0; a < G.order(); ++a)
    for (int b = a; b < G.order(); ++b) out.insert(closure(G, {a, b}));
  return out;
}

// all subsets closed under multiplication (small groups only)
int subgroups_subset_oracle(const FinGroup& G) {
  int count = 0;
  const int n = G.order();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> G.mul(a, b) & 1u)) closed = false;
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST(Group, NamedOrders) {
  EXPECT_EQ(FinGroup::symmetric(3).order(), 6);
  EXPECT_EQ(FinGroup::symmetric(4).order(), 24);
  EXPECT_EQ(FinGroup::named("A4").order(), 12);
  EXPECT_EQ(FinGroup::named("D4").order(), 8);
  EXPECT_EQ(FinGroup::named("Q8").order(), 8);
  EXPECT_EQ(FinGroup::named("C2xC3").order(), 6);
  EXPECT_FALSE(FinGroup::named("Q8").is_abelian());
  EXPECT_TRUE(FinGroup::named("C2xC2").is_abelian());
  EXPECT_EQ(FinGroup::named("Q8").exponent(), 4);
  EXPECT_THROW(FinGroup::named("X9"), Error);
}

TEST(Group, Klein4InsideS4) {
  auto G = make("S4");
  int a = G->find_label("(12)(34)"), b = G->find_label("(13)(24)");
  ASSERT_GE(a, 0);
  ASSERT_GE(b, 0);
  auto N = generated_subgroup(G, {a, b});
  EXPECT_EQ(N.order(), 4);
  EXPECT_EQ(N.elements, closure(*G, {a, b}));
  for (int x : N.elements) EXPECT_EQ(G->mul(x, x), 0);
}

TEST(Group, AxiomsHoldForAllNamedGroups) {
  for (const char* name : {"C1", "C2", "C5", "S3", "S4", "A4", "D4", "D5", "Q8", "C2xC2", "C2xS3"}) {
    FinGroup G = FinGroup::named(name);
    const int n = G.order();
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(G.mul(a, G.inv(a)), 0);
      EXPECT_EQ(G.mul(0, a), a);
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) ASSERT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c))) << name;
    }
  }
}

TEST(Group, TableValidation) {
  // not associative: a loop of order 5 that is not a group would be tedious; use a broken identity
  std::vector<std::vector<int>> bad{{0, 1}, {1, 1}};
  try {
    FinGroup g(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
  }
  std::vector<std::vector<int>> c3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  EXPECT_EQ(FinGroup(c3).order(), 3);
}

TEST(Group, SubgroupCounts) {
  EXPECT_EQ(subgroups(make("C2")).size(), 2u);
  auto s3 = make("S3");
  EXPECT_EQ(subgroups(s3).size(), 6u);
  EXPECT_EQ(subgroups_subset_oracle(*s3), 6);
  auto s4 = make("S4");
  auto subs = subgroups(s4);
  EXPECT_EQ(subs.size(), 30u);
  std::set<std::vector<int>> got;
  for (const auto& H : subs) {
    got.insert(H.elements);
    EXPECT_EQ(24 % H.order(), 0);
    EXPECT_TRUE(H.contains(0));
    for (int a : H.elements) {
      EXPECT_TRUE(H.contains(s4->inv(a)));
      for (int b : H.elements) EXPECT_TRUE(H.contains(s4->mul(a, b)));
    }
  }
  EXPECT_EQ(got, subgroups_oracle(*s4));
  for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_TRUE(subs[i - 1] < subs[i]);
  EXPECT_EQ(subgroups(make("D4")).size(), 10u);
  EXPECT_EQ(subgroups(make("Q8")).size(), 6u);
  EXPECT_EQ(subgroups(make("A4")).size(), 10u);
}

TEST(Group, SubgroupSizeBound) {
  try {
    subgroups(make("S4"), 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeBound);
  }
}

TEST(Group, CosetsOfA4InS4) {
  auto G = make("S4");
  auto A4 = generated_subgroup(G, {G->find_label("(123)"), G->find_label("(12)(34)")});
  ASSERT_EQ(A4.order(), 12);
  auto T = coset_data(A4);
  ASSERT_EQ(T.index(), 2);
  EXPECT_EQ(T.reps[0], 0);
  EXPECT_EQ(G->label(T.reps[1]), "(12)");
}

TEST(Group, TransversalIsBijection) {
  for (const char* name : {"S3", "S4", "D4", "Q8"}) {
    auto G = make(name);
    for (const auto& H : subgroups(G)) {
      auto T = coset_data(H);
      EXPECT_EQ(T.reps[0], 0);
      EXPECT_EQ(T.index() * H.order(), G->order());
      std::set<int> image;
      for (int i = 0; i < T.index(); ++i)
        for (int h : H.elements) image.insert(G->mul(T.reps[i], h));
      EXPECT_EQ(static_cast<int>(image.size()), G->order());
      for (int g = 0; g < G->order(); ++g) {
        auto [i, h] = T.decompose(g);
        EXPECT_EQ(G->mul(T.reps[i], h), g);
        EXPECT_TRUE(H.contains(h));
      }
    }
  }
  auto G = make("S3");
  EXPECT_EQ(coset_data(trivial_subgroup(G)).index(), 6);
}

TEST(Group, Normality) {
  auto G = make("S3");
  auto c2 = generated_subgroup(G, {G->find_label("(12)")});
  auto whole = whole_group(G);
  EXPECT_FALSE(is_normal_in(c2, whole));
  // oracle: the conjugate (13)(12)(13) = (23) leaves <(12)>
  int t = G->find_label("(13)");
  EXPECT_EQ(G->label(G->conj(t, G->find_label("(12)"))), "(23)");
  auto c3 = generated_subgroup(G, {G->find_label("(123)")});
  EXPECT_TRUE(is_normal_in(c3, whole));
  try {
    is_normal_in(whole, c3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotContained);
  }
}

TEST(Group, Conjugation) {
  auto G = make("S4");
  int n = G->find_label("(12)(34)");
  EXPECT_EQ(G->conj(0, n), n);
  EXPECT_EQ(G->conj(G->find_label("(12)"), n), n);
  // direct permutation computation: (123)(12)(34)(132) = (14)(23)
  const auto& h = G->perm(G->find_label("(123)"));
  const auto& x = G->perm(n);
  std::vector<int> img(4);
  for (int i = 0; i < 4; ++i) img[h[i]] = h[x[i]];
  EXPECT_EQ(G->conj(G->find_label("(123)"), n), G->find_perm(img));
  EXPECT_EQ(G->label(G->find_perm(img)), "(14)(23)");
}

TEST(Group, ConjugacyClasses) {
  auto G = make("S4");
  auto cls = conjugacy_classes(G);
  EXPECT_EQ(cls.size(), 5u);
  int total = 0;
  for (const auto& c : cls) {
    total += static_cast<int>(c.elements.size());
    EXPECT_EQ(c.centralizer.order() * static_cast<int>(c.elements.size()), 24);
    for (std::size_t k = 0; k < c.elements.size(); ++k) EXPECT_EQ(G->conj(c.conjugator[k], c.rep), c.elements[k]);
    EXPECT_EQ(generated_subgroup(G, c.centralizer_gens).elements, c.centralizer.elements);
  }
  EXPECT_EQ(total, 24);
  EXPECT_EQ(conjugacy_classes(make("Q8")).size(), 5u);
}

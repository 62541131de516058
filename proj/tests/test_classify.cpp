#include <gtest/gtest.h>

#include <set>

#include "rfa/classify.hpp"

using namespace rfa;

namespace {

GroupPtr make(const std::string& name) { return std::make_shared<FinGroup>(FinGroup::named(name)); }

std::set<std::pair<int, int>> pair_orders(const DataEnumeration& en) {
  std::set<std::pair<int, int>> out;
  for (const auto& p : en.pairs) out.insert({p.H.order(), p.N.order()});
  return out;
}

}  // namespace

TEST(Enumerate, C2Over13) {
  DataEnumeration en = enumerate_data(make("C2"), FieldSpec::prime(13));
  EXPECT_EQ(en.pairs.size(), 3u);
  EXPECT_EQ(pair_orders(en), (std::set<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}));
  EXPECT_EQ(en.data.size(), 3u);
}

TEST(Enumerate, C3Over3) {
  DataEnumeration en = enumerate_data(make("C3"), FieldSpec::prime(3));
  ASSERT_EQ(en.pairs.size(), 1u);
  EXPECT_EQ(en.pairs[0].H.order(), 3);
  EXPECT_EQ(en.pairs[0].N.order(), 1);
}

TEST(Enumerate, S4Over3HasTheKleinPair) {
  auto G = make("S4");
  DataEnumeration en = enumerate_data(G, FieldSpec::prime(3));
  bool found = false;
  for (const auto& p : en.pairs)
    if (p.H.order() == 12 && p.N.order() == 4) {
      found = true;
      EXPECT_EQ(p.cocycle_classes, 2u);
      // the nontrivial class needs a fourth root of unity
      EXPECT_EQ(p.inconsistent_classes, 1u);
      EXPECT_EQ(p.candidates, 1u);
    }
  EXPECT_TRUE(found);
  for (const auto& p : en.pairs) {
    EXPECT_NE(p.N.order() % 3, 0);
    EXPECT_NE((24 / p.H.order()) % 3, 0);
  }
}

TEST(Enumerate, SizeBound) {
  ClassifyOptions opt;
  opt.max_group_order = 6;
  try {
    enumerate_data(make("S4"), FieldSpec::prime(5), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeBound);
  }
}

TEST(Classify, C2Over13) {
  Classification c = classify(make("C2"), FieldSpec::prime(13));
  ASSERT_EQ(c.entries.size(), 3u);
  std::multiset<std::int64_t> dims;
  for (const auto& e : c.entries) dims.insert(e.dims.dim_A);
  // unit, functions on C2, graded kC2
  EXPECT_EQ(dims, (std::multiset<std::int64_t>{1, 2, 2}));
}

TEST(Classify, KleinEntriesInS4OverF9) {
  auto G = make("S4");
  Classification c = classify(G, FieldSpec::galois(3, 2));
  int klein = 0;
  std::set<std::string> keys;
  for (const auto& e : c.entries)
    if (e.data.H.order() == 12 && e.data.N.order() == 4) {
      ++klein;
      EXPECT_EQ(e.dims.dim_A, 8);
      EXPECT_EQ(e.dims.fpdim_local, 9);
      keys.insert(e.cohomology_key);
    }
  EXPECT_EQ(klein, 2);
  EXPECT_EQ(keys.size(), 2u);
}

class ClassifySweep : public ::testing::TestWithParam<std::pair<std::string, std::int64_t>> {};

TEST_P(ClassifySweep, Invariants) {
  auto [name, q] = GetParam();
  auto G = make(name);
  FieldSpec f = FieldSpec::finite(q);
  ClassifyOptions one;
  one.threads = 1;
  Classification c = classify(G, f, one);
  ASSERT_FALSE(c.entries.empty());
  const std::int64_t g = G->order();
  for (const auto& e : c.entries) {
    const std::int64_t h = e.data.H.order(), n = e.data.N.order();
    EXPECT_TRUE(e.cert.passed);
    EXPECT_TRUE(e.audit.ok());
    EXPECT_EQ(e.dims.dim_A * h, g * n);
    EXPECT_EQ(e.dims.fpdim_rep * n, g * h);
    if (n == h) EXPECT_EQ(e.dims.fpdim_local, 1);
    if (n == 1) EXPECT_EQ(e.dims.fpdim_local, h * h);
    EXPECT_LE(e.dims.dim_A * e.dims.dim_A, g * g);
  }
  // every admissible pair is represented, or its emptiness is recorded
  std::vector<int> per_pair(c.pairs.size(), 0);
  for (const auto& e : c.entries) ++per_pair[e.pair];
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const PairRecord& p = c.pairs[i];
    if (p.skipped) continue;
    const int rep = p.represented_by;
    EXPECT_TRUE(per_pair[rep] > 0 || p.inconsistent_classes > 0) << p.H.describe() << " / " << p.N.describe();
  }
  // the pool gives the same ordered result
  ClassifyOptions many;
  many.threads = 4;
  Classification c2 = classify(G, f, many);
  ASSERT_EQ(c2.entries.size(), c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    EXPECT_EQ(c.entries[i].cohomology_key, c2.entries[i].cohomology_key);
    EXPECT_EQ(c.entries[i].algebra.algebra.mult, c2.entries[i].algebra.algebra.mult);
  }
  // without conjugacy dedupe, conjugate pairs carry the same number of candidates
  ClassifyOptions all;
  all.dedupe_conjugates = false;
  Classification c3 = classify(G, f, all);
  EXPECT_GE(c3.entries.size(), c.entries.size());
  std::vector<int> count(c3.pairs.size(), 0);
  for (const auto& e : c3.entries) ++count[e.pair];
  for (std::size_t i = 0; i < c3.pairs.size(); ++i)
    EXPECT_EQ(count[i], count[c3.pairs[i].represented_by]) << c3.pairs[i].H.describe() << " / " << c3.pairs[i].N.describe();
}

INSTANTIATE_TEST_SUITE_P(Groups, ClassifySweep,
                         ::testing::Values(std::make_pair(std::string("C2"), std::int64_t{13}),
                                           std::make_pair(std::string("C3"), std::int64_t{7}),
                                           std::make_pair(std::string("S3"), std::int64_t{7}),
                                           std::make_pair(std::string("D4"), std::int64_t{5}),
                                           std::make_pair(std::string("Q8"), std::int64_t{5}),
                                           std::make_pair(std::string("C2xC2"), std::int64_t{3})));

TEST(LocalAnalysis, SemisimpleAndModularCases) {
  auto G = make("S3");
  Classification c = classify(G, FieldSpec::prime(7));
  for (const auto& e : c.entries) {
    LocalAnalysis la = analyze_local(e.algebra);
    EXPECT_TRUE(la.ok()) << e.data.H.describe() << " / " << e.data.N.describe();
    EXPECT_TRUE(la.fpdim.census);
    ASSERT_TRUE(la.muger.has_value());
    EXPECT_TRUE(la.muger->trivial);
    ASSERT_TRUE(la.modular.has_value());
    EXPECT_EQ(la.fpdim.census_local, la.fpdim.fpdim_local * la.fpdim.dim_A * la.fpdim.dim_A);
  }
}

TEST(LocalAnalysis, NonSemisimpleCharacteristic) {
  auto G = make("C6");
  BuiltAlgebra A = build_A({whole_group(G), generated_subgroup(G, {3}), trivial_cocycle(generated_subgroup(G, {3}), 1),
                            trivial_epsilon(whole_group(G), generated_subgroup(G, {3}), 1)},
                           FieldSpec::prime(3));
  LocalAnalysis la = analyze_local(A);
  EXPECT_FALSE(la.fpdim.census);
  EXPECT_EQ(la.fpdim.fpdim_local, 9);
  EXPECT_FALSE(la.muger.has_value());
  EXPECT_TRUE(la.ok());
}

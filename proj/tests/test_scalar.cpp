#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rfa/linalg.hpp"
#include "rfa/scalar.hpp"

using namespace rfa;

namespace {

// multiplicative order by repeated multiplication
int brute_order(const Scalar& x) {
  Scalar y = x;
  for (int k = 1; k <= 1000; ++k) {
    if (y.is_one()) return k;
    y = y * x;
  }
  return -1;
}

}  // namespace

TEST(Scalar, AdditiveInverse) {
  auto f = FieldSpec::prime(7);
  EXPECT_TRUE((Scalar::one(f) + (-Scalar::one(f))).is_zero());
}

TEST(Scalar, ZetaFourSquared) {
  auto f = FieldSpec::cyclotomic(4);
  auto z = Scalar::zeta(f);
  EXPECT_EQ(z * z, -Scalar::one(f));
}

TEST(Scalar, InverseMatchesBruteForce) {
  auto f = FieldSpec::prime(7);
  auto inv = Scalar::from_int(f, 3).inverse();
  int oracle = -1;
  for (int x = 0; x < 7; ++x)
    if ((3 * x) % 7 == 1) oracle = x;
  EXPECT_EQ(inv.residue(), oracle);
  EXPECT_EQ(inv.residue(), 5);
}

TEST(Scalar, RootOfUnityExamples) {
  EXPECT_EQ(root_of_unity(FieldSpec::prime(7), 2).residue(), 6);
  auto q12 = FieldSpec::cyclotomic(12);
  EXPECT_EQ(root_of_unity(q12, 4), Scalar::zeta(q12).pow(3));
  auto f13 = FieldSpec::prime(13);
  auto r = root_of_unity(f13, 4);
  std::vector<std::int64_t> order4;
  for (int x = 1; x < 13; ++x)
    if (brute_order(Scalar::from_int(f13, x)) == 4) order4.push_back(x);
  EXPECT_NE(std::find(order4.begin(), order4.end(), r.residue()), order4.end());
  EXPECT_EQ(root_of_unity(f13, 4), r);
}

TEST(Scalar, RootOfUnityUnavailable) {
  EXPECT_THROW(root_of_unity(FieldSpec::prime(7), 4), Error);
  EXPECT_THROW(root_of_unity(FieldSpec::cyclotomic(5), 4), Error);
  try {
    root_of_unity(FieldSpec::prime(7), 5);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderUnavailable);
  }
}

TEST(Scalar, IntegerInField) {
  auto f3 = FieldSpec::prime(3);
  EXPECT_TRUE(integer_in_field(f3, 3).is_zero());
  EXPECT_FALSE(is_invertible_integer(f3, 3));
  EXPECT_EQ(integer_in_field(f3, 4).residue(), 1);
  EXPECT_TRUE(is_invertible_integer(f3, 4));
  auto q5 = FieldSpec::cyclotomic(5);
  EXPECT_EQ(integer_in_field(q5, 24), Scalar::from_int(q5, 24));
  EXPECT_TRUE(is_invertible_integer(q5, 24));
  EXPECT_EQ(integer_in_field(FieldSpec::prime(7), -1).residue(), 6);
}

TEST(Scalar, Errors) {
  auto f = FieldSpec::prime(7);
  try {
    (void)Scalar::zero(f).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  try {
    (void)(Scalar::one(f) + Scalar::one(FieldSpec::prime(5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
  EXPECT_THROW(FieldSpec::prime(8), Error);
  EXPECT_THROW(FieldSpec::cyclotomic(0), Error);
}

class FieldAxioms : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(FieldAxioms, RandomTriples) {
  auto f = GetParam();
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    auto a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_EQ(b / a * a, b);
    }
    // canonical forms: difference zero iff equal
    EXPECT_EQ((a - b).is_zero(), a == b);
  }
}

TEST_P(FieldAxioms, RootsHaveExactOrder) {
  auto f = GetParam();
  auto cap = f.root_capacity();
  for (std::int64_t k = 1; k <= cap; ++k) {
    if (cap % k != 0) continue;
    auto z = root_of_unity(f, k);
    EXPECT_TRUE(z.pow(k).is_one());
    for (std::int64_t j = 1; j < k; ++j) EXPECT_FALSE(z.pow(j).is_one()) << k << " " << j;
    // compatible system
    for (std::int64_t j = 1; j <= k; ++j)
      if (k % j == 0) EXPECT_EQ(z.pow(k / j), root_of_unity(f, j));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(FieldSpec::prime(2), FieldSpec::prime(7), FieldSpec::prime(13),
                                           FieldSpec::galois(3, 2), FieldSpec::galois(2, 3),
                                           FieldSpec::cyclotomic(1), FieldSpec::cyclotomic(5),
                                           FieldSpec::cyclotomic(9), FieldSpec::cyclotomic(12)));

TEST(Scalar, NegativePowers) {
  auto f = FieldSpec::cyclotomic(7);
  auto z = Scalar::zeta(f);
  EXPECT_EQ(z.pow(-1) * z, Scalar::one(f));
  EXPECT_EQ(z.pow(-3), z.pow(4));
}

TEST(Scalar, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12).size(), 5u);
}

TEST(Scalar, ExtensionFields) {
  auto f9 = FieldSpec::finite(9);
  EXPECT_EQ(f9, FieldSpec::galois(3, 2));
  EXPECT_EQ(f9.characteristic(), 3);
  EXPECT_EQ(FieldSpec::finite(7), FieldSpec::prime(7));
  EXPECT_THROW(FieldSpec::finite(12), Error);
  // F_9 contains a square root of -1, F_3 does not
  auto i = root_of_unity(f9, 4);
  EXPECT_EQ(i * i, -Scalar::one(f9));
  EXPECT_THROW(root_of_unity(FieldSpec::prime(3), 4), Error);
  // every nonzero element is a power of the order-8 root
  auto g = root_of_unity(f9, 8);
  std::set<std::int64_t> codes;
  Scalar x = Scalar::one(f9);
  for (int k = 0; k < 8; ++k, x = x * g) codes.insert(x.residue());
  EXPECT_EQ(codes.size(), 8u);
  EXPECT_EQ(codes.count(0), 0u);
  EXPECT_TRUE(integer_in_field(f9, 3).is_zero());
  EXPECT_EQ(Scalar::from_digits(f9, {1, 2}).digits(), (std::vector<std::int64_t>{1, 2}));
}

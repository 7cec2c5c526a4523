#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nearring/numtheory.hpp"

using namespace nearring;

namespace {

// Digit sum oracle through repeated mpz string conversion.
std::uint64_t digit_sum_via_string(std::uint64_t n, int base) {
  const std::string s = Integer(static_cast<unsigned long>(n)).get_str(base);
  std::uint64_t t = 0;
  for (char ch : s) t += (ch >= 'a') ? ch - 'a' + 10 : ch - '0';
  return t;
}

Integer factorial(std::uint64_t n) {
  Integer r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

Integer multinomial_via_factorials(std::span<const std::uint64_t> parts) {
  std::uint64_t k = 0;
  Integer den = 1;
  for (auto p : parts) {
    k += p;
    den *= factorial(p);
  }
  return factorial(k) / den;
}

}  // namespace

TEST(DigitSum, Examples) {
  EXPECT_EQ(digit_sum(0, 2), 0u);
  EXPECT_EQ(digit_sum(15, 3), digit_sum_via_string(15, 3));
  EXPECT_EQ(digit_sum(15, 3), 3u);
  EXPECT_EQ(digit_sum(255, 2), 8u);
  EXPECT_THROW(digit_sum(5, 1), std::invalid_argument);
  EXPECT_THROW(digit_sum(5, 0), std::invalid_argument);
}

TEST(DigitSum, AgreesWithStringOracle) {
  for (int base : {2, 3, 5, 10, 16})
    for (std::uint64_t n = 0; n < 3000; ++n) ASSERT_EQ(digit_sum(n, base), digit_sum_via_string(n, base));
}

TEST(DigitSum, ScalingAndCongruence) {
  for (std::uint64_t i = 1; i <= 1000; ++i) ASSERT_EQ(digit_sum(2 * i, 2), digit_sum(i, 2));
  for (std::uint64_t b : {2u, 3u, 7u, 10u})
    for (std::uint64_t n = 0; n < 2000; ++n) {
      ASSERT_EQ(digit_sum(b * n, b), digit_sum(n, b));
      ASSERT_EQ(digit_sum(n, b) % (b - 1), n % (b - 1));
    }
}

TEST(Multinomial, Examples) {
  const std::vector<std::uint64_t> a{1, 1}, b{2, 2}, c{7};
  EXPECT_EQ(multinomial(2, a), multinomial_via_factorials(a));
  EXPECT_EQ(multinomial(2, a), 2);
  EXPECT_EQ(multinomial(4, b), 6);
  EXPECT_EQ(multinomial(7, c), 1);
  EXPECT_EQ(multinomial(0, std::vector<std::uint64_t>{}), 1);
  EXPECT_THROW(multinomial(5, b), std::invalid_argument);
}

TEST(Multinomial, AgreesWithFactorialOracleAndIsSymmetric) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::uint64_t> part(0, 12);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (int n = 0; n < 500; ++n) {
    std::vector<std::uint64_t> parts(len(rng));
    for (auto& p : parts) p = part(rng);
    std::uint64_t k = 0;
    for (auto p : parts) k += p;
    const Integer v = multinomial(k, parts);
    ASSERT_EQ(v, multinomial_via_factorials(parts));
    std::shuffle(parts.begin(), parts.end(), rng);
    ASSERT_EQ(multinomial(k, parts), v);
  }
}

TEST(PadicValuation, Examples) {
  EXPECT_EQ(padic_valuation(9, 3), 2u);
  EXPECT_EQ(padic_valuation(7, 2), 0u);
  EXPECT_EQ(padic_valuation(18, 3), 2u);
  EXPECT_EQ(padic_valuation(-48, 2), 4u);
  EXPECT_THROW(padic_valuation(0, 3), std::domain_error);
}

TEST(PadicValuation, AgreesWithTrialDivision) {
  for (long n = -500; n <= 500; ++n) {
    if (n == 0) continue;
    for (std::uint64_t p : {2u, 3u, 5u}) {
      std::uint64_t e = 0;
      long m = n;
      while (m % static_cast<long>(p) == 0) {
        m /= static_cast<long>(p);
        ++e;
      }
      ASSERT_EQ(padic_valuation(n, p), e) << n << ' ' << p;
    }
  }
}

TEST(ResidueClassSet, StandardSets) {
  const auto& s = standard_sets();
  EXPECT_TRUE(s.A.contains(15));
  EXPECT_TRUE(s.A.contains(39));
  EXPECT_FALSE(s.A.contains(3));
  EXPECT_FALSE(s.B.contains(3));
  EXPECT_TRUE(s.B.contains(75));
  EXPECT_TRUE(s.B.contains(33));
  EXPECT_FALSE(s.D.contains(1));
  EXPECT_TRUE(s.D.contains(25));
  EXPECT_TRUE(s.C.contains(5));
  EXPECT_TRUE(s.C.contains(15));
  EXPECT_FALSE(s.C.contains(9));
  EXPECT_EQ(s.A.members_upto(33), (std::vector<std::size_t>{15, 21}));
  EXPECT_EQ(s.B.members_upto(33), (std::vector<std::size_t>{33}));
}

TEST(ResidueClassSet, DefinitionByBruteForce) {
  const ResidueClassSet r("R", 10, {1, 4}, {4, 11});
  for (std::uint64_t n = 0; n < 200; ++n) {
    const bool expect = (n % 10 == 1 || n % 10 == 4) && n != 4 && n != 11;
    ASSERT_EQ(r.contains(n), expect) << n;
  }
  EXPECT_EQ(r.members_upto(30), (std::vector<std::size_t>{1, 14, 21, 24}));
}

TEST(Lemma31, Instances) {
  const std::vector<std::uint64_t> a{1, 1}, b{3, 3};
  const auto x = check_lemma_31(2, 1, a, 0);
  EXPECT_TRUE(x.hypotheses);
  EXPECT_TRUE(x.conclusion);
  EXPECT_FALSE(check_lemma_31(3, 1, b, 0).hypotheses);
}

TEST(Lemma31, SweepsHaveNoViolations) {
  const SweepSummary s2 = sweep_lemma_31(2, 2, 6, 3);
  EXPECT_GT(s2.applicable, 0u);
  EXPECT_EQ(s2.violations, 0u);
  const SweepSummary s3 = sweep_lemma_31(3, 2, 9, 3);
  EXPECT_GT(s3.applicable, 0u);
  EXPECT_EQ(s3.violations, 0u);
}

TEST(Lemma32, Instances) {
  const std::vector<std::uint64_t> ls{2, 4}, ks{1, 1};
  const auto x = check_lemma_32(ls, ks, 2);
  EXPECT_TRUE(x.hypotheses);
  EXPECT_TRUE(x.conclusion);
  const std::vector<std::uint64_t> l1{2}, k1{1};
  EXPECT_FALSE(check_lemma_32(l1, k1, 0).hypotheses);
  // m = 0 is excluded: the all-zero tuple would have an odd multinomial.
  const std::vector<std::uint64_t> z{0};
  EXPECT_FALSE(check_lemma_32(l1, z, 0).hypotheses);
  EXPECT_THROW(check_lemma_32(ls, k1, 1), std::invalid_argument);
}

TEST(Lemma32, SweepHasNoViolations) {
  const SweepSummary s = sweep_lemma_32(3, 3, 8);
  EXPECT_GT(s.applicable, 0u);
  EXPECT_EQ(s.violations, 0u);
}

TEST(ResidueIdentities, HoldUpTo10000) { EXPECT_EQ(count_residue_identity_failures(10000), 0u); }

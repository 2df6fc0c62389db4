#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "quintic/errors.hpp"
#include "quintic/verify.hpp"

using namespace quintic;

namespace {

GeneralQuintic from_int_roots(const std::vector<long>& r) {
  const auto c = oracle::from_roots(r);
  return GeneralQuintic{c[4], c[3], c[2], c[1], c[0]};
}

// q(x) -> q(x - s): roots move by +s.
GeneralQuintic translate(const GeneralQuintic& q, const Rational& s) {
  const ExactPolynomial p = q.to_polynomial().shifted(-s);
  return GeneralQuintic{p[4], p[3], p[2], p[1], p[0]};
}

// lambda^5 q(x / lambda): roots scale by lambda.
GeneralQuintic scale(const GeneralQuintic& q, const Rational& lambda) {
  return GeneralQuintic{q.a4 * lambda, q.a3 * lambda * lambda, q.a2 * lambda * lambda * lambda,
                        q.a1 * lambda * lambda * lambda * lambda,
                        q.a0 * lambda * lambda * lambda * lambda * lambda};
}

}  // namespace

TEST(Verify, PairwiseSumsInIndexOrder) {
  const std::vector<Complex> roots{0.0, 1.0, -1.0, 2.0, -2.0};
  const auto sums = pairwise_sums(roots);
  const std::vector<Complex> expected{1, -1, 2, -2, 0, 3, -1, 1, -3, 0};
  EXPECT_EQ(sums, expected);
  EXPECT_THROW(pairwise_sums(std::vector<Complex>{1.0, 2.0}), std::invalid_argument);
}

TEST(Verify, MatchExamples) {
  const std::vector<Complex> a{1.0, 2.0, 3.0};
  const std::vector<Complex> b{3.0, 1.0 + 1e-10, 2.0};
  const MatchReport m = multiset_match(a, b, 1e-7);
  EXPECT_TRUE(m.matched);
  EXPECT_NEAR(m.max_distance, 1e-10, 1e-15);
  EXPECT_FALSE(m.exhaustive);

  const MatchReport bad = multiset_match(a, std::vector<Complex>{1.0, 2.0, 4.0}, 1e-7);
  EXPECT_FALSE(bad.matched);
  EXPECT_DOUBLE_EQ(bad.max_distance, 1.0);

  EXPECT_THROW(multiset_match(a, std::vector<Complex>{1.0}, 1e-7), std::invalid_argument);
}

TEST(Verify, ExhaustiveSearchBeatsGreedy) {
  // Greedy takes 0 -> 0.9 first and leaves 1 -> -1.1 (distance 2.1);
  // the optimal pairing has worst distance 1.1.
  const std::vector<Complex> a{0.0, 1.0};
  const std::vector<Complex> b{0.9, -1.1};
  const MatchReport m = multiset_match(a, b, 1e-7);
  EXPECT_TRUE(m.exhaustive);
  EXPECT_FALSE(m.matched);
  EXPECT_LE(m.max_distance, 1.1 + 1e-12);
}

TEST(Verify, ExhaustiveMatchesBruteForceOptimum) {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> a(6), b(6);
    for (auto& x : a) x = oracle::random_complex(rng, 1.0);
    for (auto& x : b) x = oracle::random_complex(rng, 1.0);
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    double best = 1e9;
    do {
      double worst = 0;
      for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
      best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const MatchReport m = multiset_match(a, b, 1e-7);
    EXPECT_NEAR(m.max_distance, best, 1e-15) << trial;
  }
}

TEST(Verify, FullCheckBringJerrard) {
  const CheckReport r = full_check(GeneralQuintic{0, 0, 0, 1, 3});
  EXPECT_TRUE(r.matched());
  EXPECT_LT(r.match->max_distance, 1e-12);
  ASSERT_TRUE(r.solution.has_value());
  EXPECT_LT(r.split_residual(), 1e-12);
  EXPECT_LT(r.worst_root_residual(), 1e-14);
  ASSERT_TRUE(r.root_match.has_value());
  EXPECT_LT(r.root_match->max_distance, 1e-12);
  EXPECT_TRUE(r.errors.empty());
}

TEST(Verify, FullCheckIntegerWitness) {
  const CheckReport r = full_check(GeneralQuintic{0, -5, 0, 4, 0});
  EXPECT_TRUE(r.matched());
  EXPECT_LT(r.match->max_distance, 1e-7);
}

TEST(Verify, FullCheckRepeatedRoot) {
  // (x-1)^2 (x^3 - 2)
  const CheckReport r = full_check(GeneralQuintic{-2, 1, -2, 4, -2});
  EXPECT_TRUE(r.matched());
  EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "repeated_roots"), r.flags.end());
  EXPECT_EQ(r.match_tolerance, 1e-4);
}

TEST(Verify, FullCheckFifthPower) {
  const CheckReport r = full_check(GeneralQuintic{-5, 10, -10, 5, -1});
  EXPECT_TRUE(r.matched());
  EXPECT_FALSE(r.solution.has_value());
  ASSERT_TRUE(r.solve_failure);
  EXPECT_THROW(std::rethrow_exception(r.solve_failure), NoViableSplit);
  EXPECT_FALSE(r.errors.empty());
}

TEST(Verify, TranslationCovariance) {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    const GeneralQuintic q = sample_quintic(808, trial, 3.0);
    const Rational s = oracle::random_rational(rng, 4);
    const CheckReport a = full_check(q);
    const CheckReport b = full_check(translate(q, s));
    ASSERT_TRUE(a.matched());
    ASSERT_TRUE(b.matched());
    // Pair sums move by 2s.
    std::vector<Complex> moved;
    for (Complex k : a.resolvent_roots) moved.push_back(k + 2.0 * s.get_d());
    EXPECT_LT(multiset_match(moved, b.resolvent_roots, 1e-6).max_distance, 1e-6) << trial;
  }
}

TEST(Verify, ScalingCovariance) {
  for (int trial = 0; trial < 30; ++trial) {
    const GeneralQuintic q = sample_quintic(909, trial, 3.0);
    const CheckReport a = full_check(q);
    const CheckReport b = full_check(scale(q, 2));
    ASSERT_TRUE(a.matched());
    ASSERT_TRUE(b.matched());
    std::vector<Complex> scaled;
    for (Complex k : a.resolvent_roots) scaled.push_back(2.0 * k);
    EXPECT_LT(multiset_match(scaled, b.resolvent_roots, 1e-6).max_distance, 1e-6) << trial;
    // Exactly: R_b(k) = 2^10 R_a(k / 2).
    const ExactPolynomial ra = a.resolvent.poly, rb = b.resolvent.poly;
    for (std::size_t d = 0; d <= 10; ++d) {
      Rational factor = 1;
      for (std::size_t i = d; i < 10; ++i) factor *= 2;
      EXPECT_EQ(rb[d], ra[d] * factor);
    }
  }
}

TEST(Verify, SampleQuinticIsReproducible) {
  const GeneralQuintic a = sample_quintic(1, 5, 5.0);
  const GeneralQuintic b = sample_quintic(1, 5, 5.0);
  EXPECT_EQ(a.to_polynomial(), b.to_polynomial());
  for (const Rational* c : {&a.a4, &a.a3, &a.a2, &a.a1, &a.a0}) {
    EXPECT_LE(abs(*c), 5);
    EXPECT_EQ(Rational(*c * 1000).get_den(), 1);
  }
}

TEST(Verify, TrialsIndependentOfThreadCount) {
  const VerifySummary one = run_trials(40, 99, 5.0, 1);
  const VerifySummary four = run_trials(40, 99, 5.0, 4);
  ASSERT_EQ(one.trials.size(), 40u);
  ASSERT_EQ(four.trials.size(), 40u);
  EXPECT_EQ(one.passed, 40);
  EXPECT_EQ(one.passed, four.passed);
  EXPECT_EQ(one.worst_distance, four.worst_distance);
  for (std::size_t i = 0; i < 40; ++i) {
    EXPECT_EQ(one.trials[i].trial, i);
    EXPECT_EQ(one.trials[i].quintic.to_polynomial(), four.trials[i].quintic.to_polynomial());
    EXPECT_EQ(one.trials[i].max_distance, four.trials[i].max_distance);
  }
  EXPECT_DOUBLE_EQ(one.pass_rate(), 1.0);
}

TEST(Verify, RootSeparation) {
  EXPECT_DOUBLE_EQ(relative_root_separation(std::vector<Complex>{0.0, 1.0, 3.0}), 1.0 / 4.0);
}

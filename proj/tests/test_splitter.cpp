#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "quintic/errors.hpp"
#include "quintic/splitter.hpp"

using namespace quintic;

namespace {

std::vector<Complex> oracle_roots(const DepressedQuintic& dq) {
  const auto lr = oracle::durand_kerner(std::vector<double>{
      dq.c0.get_d(), dq.c1.get_d(), dq.c2.get_d(), dq.c3.get_d(), 0.0, 1.0});
  std::vector<Complex> out;
  for (const auto& z : lr) out.emplace_back(double(z.real()), double(z.imag()));
  return out;
}

DepressedQuintic random_depressed(std::mt19937_64& rng) {
  return DepressedQuintic{oracle::random_rational(rng, 6), oracle::random_rational(rng, 6),
                          oracle::random_rational(rng, 6), oracle::random_rational(rng, 6), 0};
}

}  // namespace

TEST(Splitter, IntegerWitnessSplitsExactly) {
  const DepressedQuintic dq{-5, 0, 4, 0, 0};
  const SplitResult s = split(dq, 3.0);
  EXPECT_EQ(s.n, Complex(2.0));
  EXPECT_EQ(s.l, Complex(2.0));
  EXPECT_EQ(s.m, Complex(0.0));
  EXPECT_EQ(s.quadratic, (DensePolynomial{2.0, -3.0, 1.0}));
  EXPECT_EQ(s.cubic, (DensePolynomial{0.0, 2.0, 3.0, 1.0}));
  EXPECT_EQ(s.residual, 0.0);
  EXPECT_TRUE(s.clean);
  EXPECT_EQ(s.route, PairProductRoute::kExplicit);

  const ExactSplit e = split_exact(dq, 3);
  EXPECT_EQ(e.n, 2);
  EXPECT_EQ(e.l, 2);
  EXPECT_EQ(e.m, 0);
  EXPECT_EQ(e.quadratic * e.cubic, dq.to_polynomial());
}

TEST(Splitter, ExactSplitRecomposesOnRationalPairSums) {
  // Roots 1, 2, -3, 4, -4: k = 1 + 2 is a rational resolvent root.
  const auto q = oracle::from_roots({1, 2, -3, 4, -4});
  const DepressedQuintic dq{q[3], q[2], q[1], q[0], 0};
  const ExactSplit e = split_exact(dq, 3);
  EXPECT_EQ(e.n, 2);
  EXPECT_EQ(e.quadratic * e.cubic, dq.to_polynomial());
}

TEST(Splitter, BringJerrardSplitAtLargerRealRoot) {
  const DepressedQuintic dq{0, 0, 1, 3, 0};
  const SplitResult s = split(dq, 2.0837590792241645736);
  EXPECT_LT(s.residual, 1e-12);
  EXPECT_TRUE(s.clean);
  EXPECT_NEAR(s.k.imag(), 0.0, 1e-15);
}

TEST(Splitter, ZeroQuinticAtZeroIsDegenerate) {
  EXPECT_THROW(split(DepressedQuintic{0, 0, 0, 0, 0}, 0.0), DegenerateDenominator);
}

TEST(Splitter, RejectsNonRoots) {
  EXPECT_THROW(split(DepressedQuintic{0, 0, 1, 3, 0}, 1.0), NotAResolventRoot);
}

TEST(Splitter, ChooseSplitRootPrefersLargerRealRoot) {
  const DepressedQuintic dq{0, 0, 1, 3, 0};
  const RootSet rs = find_all_roots(build_resolvent(dq).to_dense());
  const SplitResult s = choose_split_root(dq, rs);
  EXPECT_NEAR(s.k.real(), 2.0837590792241645736, 1e-13);
  EXPECT_NEAR(s.k.imag(), 0.0, 1e-15);
  EXPECT_TRUE(s.clean);
}

TEST(Splitter, ChooseSplitRootOnSymmetricQuintic) {
  // x^5 + x^3 + x: E != 0, D = F = 0.
  const DepressedQuintic dq{1, 0, 1, 0, 0};
  const RootSet rs = find_all_roots(build_resolvent(dq).to_dense());
  const SplitResult s = choose_split_root(dq, rs);
  EXPECT_TRUE(s.clean);
  EXPECT_LT(residual_norm(s.quadratic * s.cubic, dq.to_polynomial().to_dense()), 1e-12);
}

TEST(Splitter, ChooseSplitRootOnPureFifthPowerFails) {
  const DepressedQuintic dq{0, 0, 0, 0, 0};
  const RootSet rs = find_all_roots(build_resolvent(dq).to_dense());
  EXPECT_THROW(choose_split_root(dq, rs), NoViableSplit);
}

TEST(Splitter, RealCandidate) {
  EXPECT_TRUE(is_real_candidate(Complex(2.0, 1e-12)));
  EXPECT_FALSE(is_real_candidate(Complex(2.0, 1e-3)));
}

TEST(Splitter, PropertiesOnRandomQuintics) {
  std::mt19937_64 rng(404);
  int splits = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const DepressedQuintic dq = random_depressed(rng);
    const DensePolynomial target = dq.to_polynomial().to_dense();
    const auto roots = oracle_roots(dq);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) {
        const Complex k = roots[i] + roots[j];
        SplitResult s;
        try {
          s = split(dq, k);
        } catch (const Error&) {
          continue;
        }
        if (!s.clean) continue;
        ++splits;
        // Recomposition, independently of the stored residual.
        EXPECT_LT(residual_norm(s.quadratic * s.cubic, target), 1e-9);
        // The quadratic carries exactly the pair (i, j).
        EXPECT_LT(std::abs(s.n - roots[i] * roots[j]), 1e-7 * (1.0 + std::abs(s.n)));
        // mn = F and Vieta on the cubic: sum of its roots is -k.
        EXPECT_LT(std::abs(s.m * s.n - dq.c0.get_d()), 1e-7 * (1.0 + std::abs(s.m * s.n)));
        Complex rest_sum = 0.0;
        for (std::size_t t = 0; t < 5; ++t) {
          if (t != i && t != j) rest_sum += roots[t];
        }
        EXPECT_LT(std::abs(s.cubic[2] - (-rest_sum)), 1e-7 * (1.0 + std::abs(k)));
        EXPECT_EQ(s.cubic[2], s.k);
        EXPECT_EQ(s.quadratic[1], -s.k);
      }
    }
    const SplitResult chosen =
        choose_split_root(dq, find_all_roots(build_resolvent(dq).to_dense()));
    EXPECT_TRUE(chosen.clean) << "trial " << trial;
  }
  EXPECT_GT(splits, 900);
}

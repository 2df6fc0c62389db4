#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "quintic/errors.hpp"
#include "quintic/rootfinder.hpp"

using namespace quintic;

namespace {

DensePolynomial from_complex_roots(const std::vector<Complex>& roots) {
  DensePolynomial p{1.0};
  for (const Complex& r : roots) p = p * DensePolynomial{-r, 1.0};
  return p;
}

// Max distance under the greedy nearest pairing; both sides small, so O(n^2) is fine.
double greedy_distance(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0.0;
  for (const Complex& x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex u, Complex v) {
      return std::abs(u - x) < std::abs(v - x);
    });
    worst = std::max(worst, std::abs(*it - x));
    b.erase(it);
  }
  return worst;
}

}  // namespace

TEST(RootFinder, QuadraticExample) {
  const RootSet rs = find_all_roots(DensePolynomial{-1.0, 0.0, 1.0});
  ASSERT_EQ(rs.roots.size(), 2u);
  EXPECT_NEAR(rs.roots[0].real(), -1.0, 1e-15);
  EXPECT_NEAR(rs.roots[1].real(), 1.0, 1e-15);
  EXPECT_NEAR(rs.roots[0].imag(), 0.0, 1e-15);
  EXPECT_EQ(rs.max_multiplicity(), 1);
}

TEST(RootFinder, BringJerrardResolventRealRoots) {
  const DensePolynomial r{-9.0, 12.0, -4.0, 0.0, 0.0, -33.0, -3.0, 0.0, 0.0, 0.0, 1.0};
  const RootSet rs = find_all_roots(r);
  ASSERT_EQ(rs.roots.size(), 10u);
  const auto real = real_roots(rs);
  ASSERT_EQ(real.size(), 2u);
  EXPECT_NEAR(real[0], -0.95076151333909930674, 1e-13);
  EXPECT_NEAR(real[1], 2.0837590792241645736, 1e-13);
  for (double res : rs.residuals) EXPECT_LE(res, 1e-13);
}

TEST(RootFinder, IntegerWitnessResolventHasDoubleRoots) {
  // prod over pair sums of {0, +-1, +-2}: {+-1 twice, 0 twice, +-2, +-3}
  const DensePolynomial r{0.0, 0.0, 36.0, 0.0, -85.0, 0.0, 63.0, 0.0, -15.0, 0.0, 1.0};
  const RootSet rs = find_all_roots(r);
  auto real = real_roots(rs);
  ASSERT_EQ(real.size(), 10u);
  const std::vector<double> expected{-3, -2, -1, -1, 0, 0, 1, 1, 2, 3};
  for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(real[i], expected[i], 1e-7) << i;
  EXPECT_EQ(rs.max_multiplicity(), 2);
}

TEST(RootFinder, ZeroPolynomialThrows) {
  EXPECT_THROW(find_all_roots(DensePolynomial{}), ZeroPolynomial);
  EXPECT_THROW(find_all_roots(DensePolynomial{0.0, 0.0}), ZeroPolynomial);
  EXPECT_THROW(find_all_roots(DensePolynomial{4.0}), std::invalid_argument);
}

TEST(RootFinder, PureTenthPower) {
  std::vector<Complex> c(11, 0.0);
  c[10] = 1.0;
  const RootSet rs = find_all_roots(DensePolynomial(c));
  ASSERT_EQ(rs.roots.size(), 10u);
  for (const Complex& z : rs.roots) EXPECT_EQ(z, Complex(0.0));
  EXPECT_EQ(rs.max_multiplicity(), 10);
}

TEST(RootFinder, MatchesOracleOnRandomPolynomials) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> deg(1, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = deg(rng);
    std::vector<double> c(d + 1);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (auto& x : c) x = u(rng);
    c.back() = 1.0;
    const RootSet rs = find_all_roots(DensePolynomial(std::vector<Complex>(c.begin(), c.end())));
    ASSERT_EQ(static_cast<int>(rs.roots.size()), d);
    const auto lr = oracle::durand_kerner(c);
    std::vector<Complex> expected;
    for (const auto& z : lr) expected.emplace_back(double(z.real()), double(z.imag()));
    EXPECT_LT(greedy_distance(rs.roots, expected), 1e-8) << "trial " << trial;
  }
}

TEST(RootFinder, ReconstructionFromRoots) {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<int> deg(1, 10);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Complex> roots(deg(rng));
    for (auto& r : roots) r = oracle::random_complex(rng, 2.0);
    const DensePolynomial p = from_complex_roots(roots);
    const RootSet rs = find_all_roots(p);
    EXPECT_LT(residual_norm(from_complex_roots(rs.roots), p), 1e-8) << "trial " << trial;
  }
}

TEST(RootFinder, RealPolynomialsGiveConjugateRoots) {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> c(11);
    for (auto& x : c) x = u(rng);
    c.back() = 1.0;
    const RootSet rs = find_all_roots(DensePolynomial(c));
    std::vector<Complex> conj;
    for (const Complex& z : rs.roots) conj.push_back(std::conj(z));
    EXPECT_LT(greedy_distance(rs.roots, conj), 1e-8) << "trial " << trial;
  }
}

TEST(RootFinder, Deterministic) {
  const DensePolynomial p{3.0, 1.0, 0.0, Complex(0.0, 2.0), -1.0, 1.0};
  const RootSet a = find_all_roots(p);
  const RootSet b = find_all_roots(p);
  EXPECT_EQ(a.roots, b.roots);
  EXPECT_EQ(a.residuals, b.residuals);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(RootFinder, OutputIsSortedLexicographically) {
  const RootSet rs = find_all_roots(DensePolynomial{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0});
  for (std::size_t i = 1; i < rs.roots.size(); ++i) {
    const Complex a = rs.roots[i - 1], b = rs.roots[i];
    EXPECT_TRUE(a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag()));
  }
}

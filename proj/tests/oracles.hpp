#pragma once

// Test-only reference computations. Nothing here calls into the library's
// numeric paths, so agreement is an independent check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using LComplex = std::complex<long double>;

/// Naive integer convolution.
inline std::vector<long> int_mul(const std::vector<long>& a,
                                      const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// prod_{i<j} (k - (r_i + r_j)), ascending coefficients.
inline std::vector<long> pair_sum_polynomial(const std::vector<long>& roots) {
  std::vector<long> p{1};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) p = int_mul(p, {-(roots[i] + roots[j]), 1});
  }
  return p;
}

/// prod (x - r_i), ascending coefficients.
inline std::vector<long> from_roots(const std::vector<long>& roots) {
  std::vector<long> p{1};
  for (long r : roots) p = int_mul(p, {-r, 1});
  return p;
}

/// Durand-Kerner in long double with the classic (0.4+0.9i)^j starts.
/// Input is ascending and monic-normalised internally.
inline std::vector<LComplex> durand_kerner(std::vector<LComplex> c, int iterations = 2000) {
  const LComplex lead = c.back();
  for (auto& x : c) x /= lead;
  const std::size_t n = c.size() - 1;
  auto eval = [&](LComplex z) {
    LComplex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  std::vector<LComplex> z(n);
  const LComplex seed(0.4L, 0.9L);
  z[0] = 1;
  for (std::size_t i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
  for (int it = 0; it < iterations; ++it) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      LComplex denom = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const LComplex step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

inline std::vector<LComplex> durand_kerner(const std::vector<double>& c, int iterations = 2000) {
  std::vector<LComplex> lc(c.begin(), c.end());
  return durand_kerner(lc, iterations);
}

/// Bisection on a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Rising factorial (a)_n, exactly.
inline mpq_class pochhammer(const mpq_class& a, int n) {
  mpq_class out = 1;
  for (int i = 0; i < n; ++i) out *= a + i;
  return out;
}

inline mpq_class factorial(int n) {
  mpq_class out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

/// n-th series term from Pochhammer products, no recurrence.
inline mpq_class pfq_term_direct(const std::vector<mpq_class>& upper,
                                 const std::vector<mpq_class>& lower, const mpq_class& z, int n) {
  mpq_class t = 1;
  for (const auto& a : upper) t *= pochhammer(a, n);
  for (const auto& b : lower) t /= pochhammer(b, n);
  mpq_class zn = 1;
  for (int i = 0; i < n; ++i) zn *= z;
  return t * zn / factorial(n);
}

/// Sum of the first `terms` series terms, each built from scratch in long
/// double (O(n) products per term).
inline LComplex pfq_direct_sum(const std::vector<long double>& upper,
                               const std::vector<long double>& lower, LComplex z, int terms) {
  LComplex sum = 0;
  LComplex zn = 1;
  for (int n = 0; n < terms; ++n, zn *= z) {
    long double log_mag = 0;
    int sign = 1;
    for (long double a : upper) {
      for (int i = 0; i < n; ++i) {
        const long double f = a + i;
        if (f == 0) return sum;
        if (f < 0) sign = -sign;
        log_mag += std::log(std::fabs(f));
      }
    }
    for (long double b : lower) {
      for (int i = 0; i < n; ++i) {
        const long double f = b + i;
        if (f < 0) sign = -sign;
        log_mag -= std::log(std::fabs(f));
      }
    }
    for (int i = 2; i <= n; ++i) log_mag -= std::log(static_cast<long double>(i));
    sum += static_cast<long double>(sign) * std::exp(log_mag) * zn;
  }
  return sum;
}

inline std::complex<double> random_complex(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

inline mpq_class random_rational(std::mt19937_64& rng, long limit) {
  std::uniform_int_distribution<long> num(-limit, limit);
  std::uniform_int_distribution<long> den(1, limit);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace oracle

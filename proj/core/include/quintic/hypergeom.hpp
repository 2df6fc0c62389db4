#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quintic/poly_core.hpp"

namespace quintic {

/// Generalized hypergeometric series pFq(upper; lower; z).
struct PFQParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Complex z;
  double tol = 1e-14;
  int max_terms = 10000;
};

struct PFQResult {
  Complex value;
  int terms = 0;             // number of series terms summed
  bool terminating = false;  // an upper parameter is a non-positive integer
  double error_bound = 0.0;  // truncation bound; 0 for terminating series, inf if unknown
};

/// Sums the series with the term-ratio recurrence
///   t_{n+1} = t_n * prod(a_i + n) / prod(b_j + n) * z / (n + 1)
/// until |t_n| < tol * |sum|.
///
/// Throws PoleParameter when a lower parameter is a non-positive integer,
/// DivergentArgument for p > q + 1 or for p = q + 1 with |z| >= 1 (non-
/// terminating series), NoConvergence after max_terms terms.
PFQResult pfq(const PFQParams& params);

/// Smallest N >= 0 with -N among the upper parameters, if any.
std::optional<long> terminating_order(const std::vector<Rational>& upper);

/// First `count` series terms at rational z, exactly, via the recurrence.
std::vector<Rational> pfq_terms_exact(const std::vector<Rational>& upper,
                                      const std::vector<Rational>& lower, const Rational& z,
                                      int count);

/// Exact value of a terminating series at rational z. Throws
/// std::invalid_argument if the series does not terminate and PoleParameter
/// on a bad lower parameter.
Rational pfq_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                   const Rational& z);

/// One weighted 4F3 term of the three-term pair-sum representation.
struct WeightedSeries {
  double weight;
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

/// The three weighted 4F3 series whose sum represents the real pair sum
/// 2.0837590792241645736... of x^5 + x + 3:
///   sqrt(2) 4F3(-1/20,3/20,7/20,11/20; 1/4,1/2,3/4; z)
///   - 45/(16 sqrt(2)) 4F3(-9/20,13/20,17/20,21/20; 3/4,5/4,3/2; z)
///   + 3/2 4F3(1/5,2/5,3/5,4/5; 1/2,3/4,5/4; z)
std::array<WeightedSeries, 3> pair_sum_series();

/// The argument the representation is stated at: -253125/256. Outside the
/// disk of convergence.
Rational pair_sum_argument();

struct SeriesCombination {
  Complex value;
  std::array<int, 3> terms{};
  double error_bound = 0.0;
};

/// Evaluates the three-term combination at an admissible z (|z| < 1).
/// Throws DivergentArgument otherwise.
SeriesCombination pair_sum_combination(Complex z, double tol = 1e-14, int max_terms = 10000);

}  // namespace quintic

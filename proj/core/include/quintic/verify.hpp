#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quintic/closed_form.hpp"
#include "quintic/poly_core.hpp"
#include "quintic/resolvent.hpp"
#include "quintic/rootfinder.hpp"

namespace quintic {

struct MatchedPair {
  Complex left;
  Complex right;
  double distance = 0.0;
};

/// One-to-one pairing of two equal-size multisets.
struct MatchReport {
  std::vector<MatchedPair> pairs;  // ordered by `left` lexicographically
  double max_distance = 0.0;
  bool matched = false;            // max_distance < tolerance
  bool exhaustive = false;         // greedy pairing was replaced by exact search
};

/// r_i + r_j for i < j in index order (01, 02, 03, 04, 12, ...).
/// Throws std::invalid_argument unless exactly five roots are given.
std::vector<Complex> pairwise_sums(std::span<const Complex> roots);

/// Greedy nearest-neighbour pairing over `a` in lexicographic order. If its
/// worst distance is not below `tol`, a branch-and-bound search finds the
/// pairing that minimises the worst distance. Deterministic.
/// Throws std::invalid_argument on length mismatch.
MatchReport multiset_match(std::span<const Complex> a, std::span<const Complex> b, double tol);

struct CheckOptions {
  RootFinderOptions root_finder{};
  SplitOptions split{};
  double match_tol = 1e-7;
  double relaxed_match_tol = 1e-4;  // used when the oracle sees repeated roots
  std::optional<int> root_index;    // forwarded to solve_quintic
};

/// Everything full_check learned about one quintic. Sub-step failures land
/// in `errors`; later steps still run where they can.
struct CheckReport {
  GeneralQuintic quintic;
  DepressedQuintic depressed;
  Resolvent resolvent;

  std::vector<Complex> oracle_roots;     // direct roots of the quintic
  std::vector<Complex> pair_sums;        // pairwise sums of oracle_roots
  std::vector<Complex> resolvent_roots;  // shifted to the original variable (k - 2*shift)

  double match_tolerance = 0.0;
  std::optional<MatchReport> match;       // resolvent roots vs pair sums
  std::optional<QuinticSolution> solution;
  std::optional<MatchReport> root_match;  // closed-form roots vs oracle roots

  std::vector<std::string> flags;   // diagnostics, e.g. "repeated_roots"
  std::vector<std::string> errors;  // "<step>: <message>"
  std::exception_ptr solve_failure;  // the exception solve_quintic raised, if any

  bool matched() const { return match && match->matched; }
  double split_residual() const;   // +inf without a split
  double worst_root_residual() const;  // +inf without a solution
};

CheckReport full_check(const GeneralQuintic& q, const CheckOptions& options = {});

/// Smallest |r_i - r_j| / (1 + max|r|) over distinct root indices.
double relative_root_separation(std::span<const Complex> roots);

/// Seeded random monic quintic with coefficients on the grid
/// {-bound, ..., bound} in steps of 1/1000, rejection-sampled until the
/// roots are separated by at least `min_separation` (relative). The stream
/// depends only on (seed, trial).
GeneralQuintic sample_quintic(std::uint64_t seed, std::uint64_t trial, double bound,
                              double min_separation = 1e-3);

struct TrialSummary {
  std::uint64_t trial = 0;
  GeneralQuintic quintic;
  bool matched = false;
  double max_distance = 0.0;
  double split_residual = 0.0;
  double worst_root_residual = 0.0;
  std::vector<std::string> errors;
  std::vector<std::string> flags;
};

struct VerifySummary {
  std::vector<TrialSummary> trials;  // ordered by trial index
  int passed = 0;
  double worst_distance = 0.0;
  double worst_split_residual = 0.0;
  double worst_root_residual = 0.0;

  double pass_rate() const {
    return trials.empty() ? 0.0 : static_cast<double>(passed) / static_cast<double>(trials.size());
  }
};

/// Runs full_check on `count` sampled quintics, using up to `threads`
/// workers. Results do not depend on the thread count.
VerifySummary run_trials(int count, std::uint64_t seed, double bound, int threads = 1,
                         const CheckOptions& options = {});

}  // namespace quintic

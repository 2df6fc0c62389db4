#pragma once

#include <vector>

#include "quintic/poly_core.hpp"

namespace quintic {

struct RootFinderOptions {
  double tol = 1e-14;  // relative residual (backward error) target
  int max_iter = 500;
};

/// Roots of a dense polynomial, with multiplicity. `residuals[i]` is
/// relative_residual(p, roots[i]); `multiplicity[i]` is the size of the
/// numerically coincident cluster the root belongs to.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;
  std::vector<int> multiplicity;
  int iterations = 0;

  int max_multiplicity() const;
};

/// All complex roots by Aberth-Ehrlich simultaneous iteration followed by
/// Newton polishing. Exact zero roots (vanishing low-order coefficients)
/// are peeled off first. Clusters of roots that behave as a multiple root
/// are collapsed onto their centroid.
///
/// Throws ZeroPolynomial for p == 0, std::invalid_argument for a nonzero
/// constant, NoConvergence when some root misses its (multiplicity-relaxed)
/// residual bound after max_iter sweeps.
RootSet find_all_roots(const DensePolynomial& p, const RootFinderOptions& options = {});

/// Roots with |imag| < imag_tol * (1 + |real|), imaginary part dropped.
std::vector<double> real_roots(const RootSet& rs, double imag_tol = 1e-9);

}  // namespace quintic

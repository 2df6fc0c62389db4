#pragma once

#include <array>
#include <string>
#include <vector>

#include "quintic/poly_core.hpp"
#include "quintic/resolvent.hpp"
#include "quintic/rootfinder.hpp"
#include "quintic/splitter.hpp"

namespace quintic {

/// Roots of monic x^2 + bx + c.
struct QuadraticRoots {
  Complex r1, r2;
};

/// Roots of monic x^3 + p2 x^2 + p1 x + p0.
struct CubicRoots {
  Complex r1, r2, r3;
};

/// Cancellation-free quadratic formula: the larger-magnitude root is formed
/// without subtraction, the other as c / r1.
QuadraticRoots solve_quadratic(Complex b, Complex c);

/// Cardano over the complex numbers. Depresses with t = x + p2/3, takes the
/// larger-magnitude cube-root radicand, and pairs branches so that u*v = -p/3.
/// Each root gets Newton refinement on the original cubic when that lowers
/// the residual.
CubicRoots solve_cubic(Complex p2, Complex p1, Complex p0);

struct QuinticOptions {
  RootFinderOptions root_finder{};
  SplitOptions split{};
  /// Use this resolvent root (index into the sorted resolvent RootSet)
  /// instead of choose_split_root.
  std::optional<int> root_index;
  double root_tol = 1e-8;  // required |q(x)| / scale per returned root
};

/// Full pipeline output plus the intermediate results it went through.
struct QuinticSolution {
  GeneralQuintic quintic;
  DepressedQuintic depressed;
  Resolvent resolvent;
  RootSet resolvent_roots;
  SplitResult split;
  std::array<Complex, 5> roots{};      // in the original variable
  std::array<double, 5> residuals{};   // relative_residual against the original quintic
  std::array<int, 5> multiplicity{};   // cluster size among the returned roots
  std::vector<std::string> notes;      // provenance and diagnostic flags
};

/// depress -> resolvent -> resolvent roots -> split -> quadratic + cubic
/// formulas -> undo shift.
///
/// Throws NoViableSplit when no resolvent root splits the quintic (for
/// instance any quintic of the form (x - a)^5), NoConvergence from the root
/// finder, std::out_of_range for a bad root_index.
QuinticSolution solve_quintic(const GeneralQuintic& q, const QuinticOptions& options = {});

}  // namespace quintic

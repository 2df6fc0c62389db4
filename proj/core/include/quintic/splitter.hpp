#pragma once

#include <optional>

#include "quintic/poly_core.hpp"
#include "quintic/resolvent.hpp"
#include "quintic/rootfinder.hpp"

namespace quintic {

struct SplitOptions {
  double resolvent_tol = 1e-8;     // relative residual for accepting k as a resolvent root
  double residual_ceiling = 1e-6;  // largest accepted recomposition residual
  double clean_threshold = 1e-9;   // splits below this are "clean"
};

/// Which formula produced the pair product n.
enum class PairProductRoute { kExplicit, kQuadraticFallback };

/// x^5 + Cx^3 + Dx^2 + Ex + F = (x^2 - kx + n)(x^3 + kx^2 + lx + m).
struct SplitResult {
  Complex k, n, l, m;
  DensePolynomial quadratic;  // x^2 - kx + n
  DensePolynomial cubic;      // x^3 + kx^2 + lx + m
  double residual = 0.0;
  double denominator_magnitude = 0.0;
  PairProductRoute route = PairProductRoute::kExplicit;
  bool clean = false;
};

/// Splits the depressed quintic along the pair-sum k.
///
/// n comes from the explicit formula, or from the quadratic relation when
/// that formula's denominator is degenerate (fallback branches with n ~ 0
/// are unusable: m is then unconstrained by mn = F). Then
///   l = C - n + k^2,   m = D - nk + lk.
/// The residual is residual_norm(quadratic * cubic, quintic), maxed with
/// |mn - F| / (1 + |F|) when n != 0.
///
/// Throws NotAResolventRoot if k is not a root of the resolvent to
/// options.resolvent_tol, DegenerateDenominator if no n branch is usable.
SplitResult split(const DepressedQuintic& dq, Complex k, const SplitOptions& options = {});

/// Exact variant for rational k. Throws DegenerateDenominator when
/// 5k^3 + Ck - D == 0 and NotAResolventRoot when k is not an exact root.
struct ExactSplit {
  Rational k, n, l, m;
  ExactPolynomial quadratic;
  ExactPolynomial cubic;
};
ExactSplit split_exact(const DepressedQuintic& dq, const Rational& k);

/// Tries every root in `rs` and keeps the best split.
///
/// Splits are ranked first by tier (clean, then accepted), then by residual
/// within the accepted tier; clean splits count as tied on residual. Ties
/// prefer real k, then larger |5k^3 + Ck - D|, then larger Re k.
/// Throws NoViableSplit when no candidate reaches options.residual_ceiling.
SplitResult choose_split_root(const DepressedQuintic& dq, const RootSet& rs,
                              const SplitOptions& options = {});

/// True if |Im k| is negligible relative to |k|.
bool is_real_candidate(Complex k, double imag_tol = 1e-9);

}  // namespace quintic

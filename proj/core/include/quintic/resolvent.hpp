#pragma once

#include <array>
#include <string_view>

#include "quintic/poly_core.hpp"

namespace quintic {

/// Which algebraic route produced a resolvent.
enum class ResolventSource { kExpanded, kProductForm };

std::string_view to_string(ResolventSource source);

/// Degree-10 polynomial in k whose roots are the ten pairwise sums r_i + r_j
/// of a depressed quintic's roots. Always monic.
struct Resolvent {
  ExactPolynomial poly;
  ResolventSource source = ResolventSource::kExpanded;

  DensePolynomial to_dense() const { return poly.to_dense(); }
};

/// Closed-form coefficients of the pair-sum resolvent.
Resolvent build_resolvent(const DepressedQuintic& dq);

/// Same polynomial obtained by expanding
///   (2(k^5+Ck^3+Dk^2+Ek) - F)(13k^5+6Ck^3-5Dk^2+(C^2-2E)k+F-DC)
///     - (k^4+Ck^2+Dk+E)(5k^3+Ck-D)^2
/// term by term. Must agree with build_resolvent exactly.
Resolvent build_resolvent_product_form(const DepressedQuintic& dq);

/// A pair-sum candidate k together with the matching pair product n.
struct SplitParameters {
  Complex k;
  Complex n;
  double denominator_magnitude = 0.0;  // |5k^3 + Ck - D|
};

/// Degeneracy threshold for |5k^3 + Ck - D|:
/// 1e-8 * (1+|k|)^3 * (1 + max(|C|,|D|)).
double denominator_threshold(const DepressedQuintic& dq, Complex k);

/// n = (2(k^5+Ck^3+Dk^2+Ek) - F) / (5k^3 + Ck - D).
/// Throws DegenerateDenominator below denominator_threshold.
SplitParameters n_from_k(const DepressedQuintic& dq, Complex k);

/// Both solutions of n^2 - (3k^2+C) n + (k^4+Ck^2+Dk+E) = 0. Valid even
/// where n_from_k's denominator vanishes; the caller picks a branch.
std::array<SplitParameters, 2> n_fallback(const DepressedQuintic& dq, Complex k);

/// Relative residual of n(3k^2 - n + C) = k^4 + Ck^2 + Dk + E.
double pair_relation_residual(const DepressedQuintic& dq, Complex k, Complex n);

}  // namespace quintic

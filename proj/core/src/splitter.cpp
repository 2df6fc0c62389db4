#include "quintic/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "quintic/errors.hpp"

namespace quintic {
namespace {

SplitResult assemble(const DepressedQuintic& dq, const DensePolynomial& target,
                     const SplitParameters& params, PairProductRoute route,
                     const SplitOptions& options) {
  const Complex C = to_double(dq.c3);
  const Complex D = to_double(dq.c2);
  const Complex F = to_double(dq.c0);
  const Complex k = params.k;
  const Complex n = params.n;

  SplitResult r;
  r.k = k;
  r.n = n;
  r.l = C - n + k * k;
  r.m = D - n * k + r.l * k;
  r.quadratic = DensePolynomial{n, -k, 1.0};
  r.cubic = DensePolynomial{r.m, r.l, k, 1.0};
  r.residual = residual_norm(r.quadratic * r.cubic, target);
  if (n != Complex{}) {
    r.residual = std::max(r.residual, std::abs(r.m * n - F) / (1.0 + std::abs(F)));
  }
  r.denominator_magnitude = params.denominator_magnitude;
  r.route = route;
  r.clean = r.residual < options.clean_threshold;
  return r;
}

}  // namespace

bool is_real_candidate(Complex k, double imag_tol) {
  return std::abs(k.imag()) < imag_tol * (1.0 + std::abs(k.real()));
}

SplitResult split(const DepressedQuintic& dq, Complex k, const SplitOptions& options) {
  const double on_resolvent = relative_residual(build_resolvent(dq).to_dense(), k);
  if (on_resolvent > options.resolvent_tol) throw NotAResolventRoot(on_resolvent);

  const DensePolynomial target = dq.to_polynomial().to_dense();
  try {
    return assemble(dq, target, n_from_k(dq, k), PairProductRoute::kExplicit, options);
  } catch (const DegenerateDenominator& degenerate) {
    std::optional<SplitResult> best;
    const double n_floor = 1e-8 * std::pow(1.0 + std::abs(k), 2);
    for (const auto& candidate : n_fallback(dq, k)) {
      if (std::abs(candidate.n) <= n_floor) continue;
      SplitResult r = assemble(dq, target, candidate, PairProductRoute::kQuadraticFallback, options);
      if (!best || r.residual < best->residual) best = std::move(r);
    }
    if (!best) throw;
    return *best;
  }
}

ExactSplit split_exact(const DepressedQuintic& dq, const Rational& k) {
  const Rational& C = dq.c3;
  const Rational& D = dq.c2;
  const Rational& E = dq.c1;
  const Rational& F = dq.c0;

  if (sgn(build_resolvent(dq).poly.evaluate(k)) != 0) {
    throw NotAResolventRoot(std::abs(to_double(build_resolvent(dq).poly.evaluate(k))));
  }
  const Rational denom = 5 * k * k * k + C * k - D;
  if (sgn(denom) == 0) throw DegenerateDenominator(0.0);

  ExactSplit s;
  s.k = k;
  s.n = (2 * (k * k * k * k * k + C * k * k * k + D * k * k + E * k) - F) / denom;
  s.l = C - s.n + k * k;
  s.m = D - s.n * k + s.l * k;
  s.quadratic = ExactPolynomial{s.n, Rational(-k), Rational(1)};
  s.cubic = ExactPolynomial{s.m, s.l, k, Rational(1)};
  return s;
}

SplitResult choose_split_root(const DepressedQuintic& dq, const RootSet& rs,
                              const SplitOptions& options) {
  std::vector<SplitResult> accepted;
  for (const Complex& k : rs.roots) {
    try {
      SplitResult r = split(dq, k, options);
      if (r.residual <= options.residual_ceiling) accepted.push_back(std::move(r));
    } catch (const Error&) {
      // Candidate rejected; others may still work.
    }
  }
  if (accepted.empty()) {
    throw NoViableSplit("no resolvent root yields a split with residual <= " +
                        std::to_string(options.residual_ceiling));
  }

  // Lower key wins. Clean splits compare equal on the residual component.
  auto key = [](const SplitResult& r) {
    const double residual_rank = r.clean ? 0.0 : r.residual;
    return std::make_tuple(!r.clean, residual_rank, !is_real_candidate(r.k),
                           -r.denominator_magnitude, -r.k.real(), -r.k.imag());
  };
  return *std::min_element(accepted.begin(), accepted.end(),
                           [&](const SplitResult& a, const SplitResult& b) { return key(a) < key(b); });
}

}  // namespace quintic

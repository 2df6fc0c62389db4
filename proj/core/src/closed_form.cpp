#include "quintic/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quintic/errors.hpp"

namespace quintic {
namespace {

Complex principal_cbrt(Complex w) {
  return std::polar(std::cbrt(std::abs(w)), std::arg(w) / 3.0);
}

Complex refine_cubic_root(const DensePolynomial& cubic, Complex x) {
  for (int step = 0; step < 2; ++step) {
    const Complex fx = evaluate(cubic, x);
    const Complex dfx = (3.0 * x + 2.0 * cubic[2]) * x + cubic[1];
    if (fx == Complex{} || dfx == Complex{}) break;
    const Complex next = x - fx / dfx;
    if (std::abs(evaluate(cubic, next)) >= std::abs(fx)) break;
    x = next;
  }
  return x;
}

}  // namespace

QuadraticRoots solve_quadratic(Complex b, Complex c) {
  Complex disc = std::sqrt(b * b - 4.0 * c);
  if ((std::conj(b) * disc).real() < 0.0) disc = -disc;
  const Complex big = -0.5 * (b + disc);
  if (big == Complex{}) return {Complex{}, Complex{}};
  return {big, c / big};
}

CubicRoots solve_cubic(Complex p2, Complex p1, Complex p0) {
  const Complex shift = p2 / 3.0;
  const Complex p = p1 - p2 * shift;
  const Complex q = 2.0 * shift * shift * shift - shift * p1 + p0;

  const Complex s = std::sqrt(0.25 * q * q + p * p * p / 27.0);
  const Complex plus = -0.5 * q + s;
  const Complex minus = -0.5 * q - s;
  const Complex radicand = std::abs(plus) >= std::abs(minus) ? plus : minus;

  std::array<Complex, 3> t{};
  if (radicand != Complex{}) {
    const Complex omega{-0.5, 0.5 * std::numbers::sqrt3};
    const Complex u = principal_cbrt(radicand);
    const Complex v = -p / (3.0 * u);
    t = {u + v, u * omega + v * std::conj(omega), u * std::conj(omega) + v * omega};
  }

  const DensePolynomial cubic{p0, p1, p2, 1.0};
  return {refine_cubic_root(cubic, t[0] - shift), refine_cubic_root(cubic, t[1] - shift),
          refine_cubic_root(cubic, t[2] - shift)};
}

QuinticSolution solve_quintic(const GeneralQuintic& q, const QuinticOptions& options) {
  QuinticSolution sol;
  sol.quintic = q;
  sol.depressed = depress(q);
  sol.resolvent = build_resolvent(sol.depressed);
  sol.resolvent_roots = find_all_roots(sol.resolvent.to_dense(), options.root_finder);

  if (options.root_index) {
    const int idx = *options.root_index;
    if (idx < 0 || idx >= static_cast<int>(sol.resolvent_roots.roots.size())) {
      throw std::out_of_range("root index " + std::to_string(idx) + " outside [0, 10)");
    }
    try {
      sol.split = split(sol.depressed, sol.resolvent_roots.roots[idx], options.split);
    } catch (const Error& e) {
      throw NoViableSplit("resolvent root " + std::to_string(idx) + ": " + e.what());
    }
    if (sol.split.residual > options.split.residual_ceiling) {
      throw NoViableSplit("resolvent root " + std::to_string(idx) + " gives split residual " +
                          std::to_string(sol.split.residual));
    }
    sol.notes.push_back("root_index forced to " + std::to_string(idx));
  } else {
    sol.split = choose_split_root(sol.depressed, sol.resolvent_roots, options.split);
  }
  if (sol.split.route == PairProductRoute::kQuadraticFallback) {
    sol.notes.emplace_back("pair product from quadratic fallback");
  }
  if (!sol.split.clean) sol.notes.emplace_back("split accepted but not clean");
  if (sol.resolvent_roots.max_multiplicity() > 1) {
    sol.notes.push_back("resolvent has repeated roots (max multiplicity " +
                        std::to_string(sol.resolvent_roots.max_multiplicity()) + ")");
  }

  const SplitResult& s = sol.split;
  const QuadraticRoots qr = solve_quadratic(-s.k, s.n);
  const CubicRoots cr = solve_cubic(s.k, s.l, s.m);
  const Complex shift = to_double(sol.depressed.shift);
  const std::array<Complex, 5> ys{qr.r1, qr.r2, cr.r1, cr.r2, cr.r3};

  for (std::size_t i = 0; i < 5; ++i) sol.roots[i] = ys[i] - shift;

  // x = 0 is known exactly from the trailing zero coefficients; the radicals
  // only get within rounding of it, which leaves an order-one backward error.
  const ExactPolynomial exact = q.to_polynomial();
  std::size_t zeros = 0;
  while (zeros < 5 && exact[zeros] == 0) ++zeros;
  if (zeros > 0) {
    std::array<std::size_t, 5> order{0, 1, 2, 3, 4};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(sol.roots[a]) < std::abs(sol.roots[b]);
    });
    for (std::size_t i = 0; i < zeros; ++i) sol.roots[order[i]] = Complex{};
  }

  const DensePolynomial original = exact.to_dense();
  for (std::size_t i = 0; i < 5; ++i) sol.residuals[i] = relative_residual(original, sol.roots[i]);

  int worst_multiplicity = 1;
  bool residual_exceeded = false;
  for (std::size_t i = 0; i < 5; ++i) {
    int m = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      const double scale = 1.0 + std::abs(sol.roots[i]);
      if (std::abs(sol.roots[i] - sol.roots[j]) < 1e-4 * scale) ++m;
    }
    sol.multiplicity[i] = m;
    worst_multiplicity = std::max(worst_multiplicity, m);
    if (sol.residuals[i] >= std::pow(options.root_tol, 1.0 / m)) residual_exceeded = true;
  }
  if (worst_multiplicity > 1) {
    sol.notes.push_back("repeated roots (max multiplicity " + std::to_string(worst_multiplicity) +
                        "); multiplicity-relaxed residual bounds");
  }
  if (residual_exceeded) sol.notes.emplace_back("root residual above tolerance");
  return sol;
}

}  // namespace quintic

#include "quintic/resolvent.hpp"

#include <algorithm>
#include <cmath>

#include "quintic/closed_form.hpp"
#include "quintic/errors.hpp"

namespace quintic {

std::string_view to_string(ResolventSource source) {
  switch (source) {
    case ResolventSource::kExpanded:
      return "expanded";
    case ResolventSource::kProductForm:
      return "product-form";
  }
  return "unknown";
}

Resolvent build_resolvent(const DepressedQuintic& dq) {
  const Rational& C = dq.c3;
  const Rational& D = dq.c2;
  const Rational& E = dq.c1;
  const Rational& F = dq.c0;

  std::vector<Rational> k(11);
  k[10] = 1;
  k[9] = 0;
  k[8] = 3 * C;
  k[7] = D;
  k[6] = 3 * C * C - 3 * E;
  k[5] = 2 * D * C - 11 * F;
  k[4] = C * C * C - D * D - 2 * C * E;
  k[3] = D * C * C - 4 * D * E - 4 * C * F;
  k[2] = 7 * D * F - C * D * D - 4 * E * E + E * C * C;
  k[1] = 4 * E * F - F * C * C - D * D * D;
  k[0] = -F * F + F * D * C - D * D * E;
  return Resolvent{ExactPolynomial(std::move(k)), ResolventSource::kExpanded};
}

Resolvent build_resolvent_product_form(const DepressedQuintic& dq) {
  const Rational& C = dq.c3;
  const Rational& D = dq.c2;
  const Rational& E = dq.c1;
  const Rational& F = dq.c0;

  // 2(k^5 + Ck^3 + Dk^2 + Ek) - F
  const ExactPolynomial numerator{-F, 2 * E, 2 * D, 2 * C, Rational(0), Rational(2)};
  // 13k^5 + 6Ck^3 - 5Dk^2 + (C^2 - 2E)k + F - DC
  const ExactPolynomial cofactor{F - D * C, C * C - 2 * E, -5 * D, 6 * C, Rational(0),
                                 Rational(13)};
  // k^4 + Ck^2 + Dk + E
  const ExactPolynomial quartic{E, D, C, Rational(0), Rational(1)};
  // 5k^3 + Ck - D
  const ExactPolynomial denominator{-D, C, Rational(0), Rational(5)};

  return Resolvent{numerator * cofactor - quartic * denominator * denominator,
                   ResolventSource::kProductForm};
}

double denominator_threshold(const DepressedQuintic& dq, Complex k) {
  const double scale = 1.0 + std::max(std::abs(to_double(dq.c3)), std::abs(to_double(dq.c2)));
  return 1e-8 * std::pow(1.0 + std::abs(k), 3) * scale;
}

SplitParameters n_from_k(const DepressedQuintic& dq, Complex k) {
  const Complex C = to_double(dq.c3);
  const Complex D = to_double(dq.c2);
  const Complex E = to_double(dq.c1);
  const Complex F = to_double(dq.c0);

  const Complex k2 = k * k;
  const Complex k3 = k2 * k;
  const Complex denom = 5.0 * k3 + C * k - D;
  const double magnitude = std::abs(denom);
  if (magnitude < denominator_threshold(dq, k)) throw DegenerateDenominator(magnitude);

  const Complex numer = 2.0 * (k3 * k2 + C * k3 + D * k2 + E * k) - F;
  return SplitParameters{k, numer / denom, magnitude};
}

std::array<SplitParameters, 2> n_fallback(const DepressedQuintic& dq, Complex k) {
  const Complex C = to_double(dq.c3);
  const Complex D = to_double(dq.c2);
  const Complex E = to_double(dq.c1);

  const Complex k2 = k * k;
  const double magnitude = std::abs(5.0 * k2 * k + C * k - D);
  const QuadraticRoots roots = solve_quadratic(-(3.0 * k2 + C), k2 * k2 + C * k2 + D * k + E);
  return {SplitParameters{k, roots.r1, magnitude}, SplitParameters{k, roots.r2, magnitude}};
}

double pair_relation_residual(const DepressedQuintic& dq, Complex k, Complex n) {
  const Complex C = to_double(dq.c3);
  const Complex D = to_double(dq.c2);
  const Complex E = to_double(dq.c1);

  const Complex k2 = k * k;
  const Complex lhs = n * (3.0 * k2 - n + C);
  const Complex rhs = k2 * k2 + C * k2 + D * k + E;
  const double scale = 1.0 + std::abs(n) * (3.0 * std::abs(k2) + std::abs(n) + std::abs(C)) +
                       std::abs(k2 * k2) + std::abs(C * k2) + std::abs(D * k) + std::abs(E);
  return std::abs(lhs - rhs) / scale;
}

}  // namespace quintic

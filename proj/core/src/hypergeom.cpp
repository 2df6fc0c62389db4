#include "quintic/hypergeom.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quintic/errors.hpp"

namespace quintic {
namespace {

bool is_nonpositive_integer(const Rational& r) {
  return r.get_den() == 1 && sgn(r) <= 0;
}

void check_lower(const std::vector<Rational>& lower) {
  for (const auto& b : lower) {
    if (is_nonpositive_integer(b)) {
      throw PoleParameter("lower parameter " + b.get_str() + " is a non-positive integer");
    }
  }
}

// |t_{n+1} / t_n| in double.
Complex term_ratio(const std::vector<double>& upper, const std::vector<double>& lower, Complex z,
                   long n) {
  const double dn = static_cast<double>(n);
  double r = 1.0;
  for (double a : upper) r *= a + dn;
  for (double b : lower) r /= b + dn;
  return z * (r / (dn + 1.0));
}

std::vector<double> as_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

}  // namespace

std::optional<long> terminating_order(const std::vector<Rational>& upper) {
  std::optional<long> order;
  for (const auto& a : upper) {
    if (!is_nonpositive_integer(a)) continue;
    const long n = -a.get_num().get_si();
    if (!order || n < *order) order = n;
  }
  return order;
}

PFQResult pfq(const PFQParams& params) {
  check_lower(params.lower);
  const std::optional<long> order = terminating_order(params.upper);
  const std::size_t p = params.upper.size();
  const std::size_t q = params.lower.size();
  const Complex z = params.z;

  PFQResult out;
  out.terminating = order.has_value();
  if (z == Complex{} || (order && *order == 0)) {
    out.value = 1.0;
    out.terms = 1;
    return out;
  }
  if (!order) {
    if (p > q + 1) {
      throw DivergentArgument("pFq with p > q+1 diverges for every z != 0");
    }
    if (p == q + 1 && std::abs(z) >= 1.0) {
      throw DivergentArgument("pFq with p = q+1 needs |z| < 1, got |z| = " +
                              std::to_string(std::abs(z)));
    }
  }

  const std::vector<double> upper = as_doubles(params.upper);
  const std::vector<double> lower = as_doubles(params.lower);

  Complex sum{};
  Complex term = 1.0;
  for (long n = 0;; ++n) {
    if (out.terms >= params.max_terms) throw NoConvergence("pFq series", out.terms);
    sum += term;
    ++out.terms;
    if (order && n == *order) break;
    const Complex next = term * term_ratio(upper, lower, z, n);
    if (std::abs(next) < params.tol * std::abs(sum)) {
      if (!order) {
        double rho = (p == q + 1) ? std::abs(z) : 0.0;
        for (long m = n + 1; m <= n + 64; ++m) {
          rho = std::max(rho, std::abs(term_ratio(upper, lower, z, m)));
        }
        out.error_bound = rho < 1.0 ? std::abs(next) / (1.0 - rho)
                                    : std::numeric_limits<double>::infinity();
        break;
      }
    }
    term = next;
  }
  out.value = sum;
  return out;
}

std::vector<Rational> pfq_terms_exact(const std::vector<Rational>& upper,
                                      const std::vector<Rational>& lower, const Rational& z,
                                      int count) {
  check_lower(lower);
  std::vector<Rational> terms;
  Rational term = 1;
  for (int n = 0; n < count; ++n) {
    terms.push_back(term);
    Rational ratio = z / (n + 1);
    for (const auto& a : upper) ratio *= a + n;
    for (const auto& b : lower) ratio /= b + n;
    term *= ratio;
  }
  return terms;
}

Rational pfq_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                   const Rational& z) {
  const std::optional<long> order = terminating_order(upper);
  if (!order) throw std::invalid_argument("pfq_exact: series does not terminate");
  Rational sum = 0;
  for (const auto& t : pfq_terms_exact(upper, lower, z, static_cast<int>(*order) + 1)) sum += t;
  return sum;
}

std::array<WeightedSeries, 3> pair_sum_series() {
  const double sqrt2 = std::numbers::sqrt2;
  return {{
      {sqrt2,
       {Rational(-1, 20), Rational(3, 20), Rational(7, 20), Rational(11, 20)},
       {Rational(1, 4), Rational(1, 2), Rational(3, 4)}},
      {-45.0 / (16.0 * sqrt2),
       {Rational(-9, 20), Rational(13, 20), Rational(17, 20), Rational(21, 20)},
       {Rational(3, 4), Rational(5, 4), Rational(3, 2)}},
      {1.5,
       {Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)},
       {Rational(1, 2), Rational(3, 4), Rational(5, 4)}},
  }};
}

Rational pair_sum_argument() { return Rational(-253125, 256); }

SeriesCombination pair_sum_combination(Complex z, double tol, int max_terms) {
  SeriesCombination out;
  const auto series = pair_sum_series();
  for (std::size_t i = 0; i < series.size(); ++i) {
    const PFQResult r = pfq(PFQParams{series[i].upper, series[i].lower, z, tol, max_terms});
    out.value += series[i].weight * r.value;
    out.terms[i] = r.terms;
    out.error_bound += std::abs(series[i].weight) * r.error_bound;
  }
  return out;
}

}  // namespace quintic

#include "quintic/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "quintic/errors.hpp"

namespace quintic {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Fixed rotation of the starting circle; keeps starts off symmetry axes.
constexpr double kStartAngle = 0.5 * (std::numbers::sqrt3 - 1.0);

struct HornerResult {
  Complex value;
  Complex derivative;
  double error_bound;  // running rounding-error bound on `value`
};

HornerResult horner_with_bound(const std::vector<Complex>& c, Complex z) {
  const double az = std::abs(z);
  Complex p = c.back();
  Complex dp{};
  double e = 0.5 * std::abs(p);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
    e = e * az + std::abs(p);
  }
  return {p, dp, 4.0 * kEps * std::max(2.0 * e - std::abs(p), 0.0)};
}

// Residual floor below which no double-precision evaluation can go.
double residual_floor(int degree) { return 16.0 * degree * kEps; }

std::vector<Complex> initial_guesses(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  const Complex lead = c.back();
  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / lead));
  const double radius = 1.0 + bound;
  std::vector<Complex> z(n);
  for (int j = 0; j < n; ++j) {
    z[j] = std::polar(radius, 2.0 * std::numbers::pi * j / n + kStartAngle);
  }
  return z;
}

// Returns the number of sweeps used; all entries of `done` true on exit
// unless the sweep budget ran out.
int aberth(const std::vector<Complex>& c, std::vector<Complex>& z, int max_iter) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  int sweep = 0;
  while (sweep < max_iter) {
    ++sweep;
    bool all_done = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      const HornerResult h = horner_with_bound(c, z[j]);
      if (std::abs(h.value) <= h.error_bound) {
        done[j] = true;
        continue;
      }
      Complex repulsion{};
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) repulsion += 1.0 / (z[j] - z[i]);
      }
      Complex denom = h.derivative / h.value - repulsion;
      if (denom == Complex{}) denom = Complex{kEps, kEps};
      const Complex step = 1.0 / denom;
      z[j] -= step;
      if (std::abs(step) <= kEps * std::abs(z[j])) {
        done[j] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done && std::all_of(done.begin(), done.end(), [](bool b) { return b; })) break;
  }
  return sweep;
}

void newton_polish(const DensePolynomial& p, std::vector<Complex>& z) {
  const auto& c = p.coeffs();
  for (auto& root : z) {
    for (int step = 0; step < 3; ++step) {
      const HornerResult h = horner_with_bound(c, root);
      if (h.value == Complex{} || h.derivative == Complex{}) break;
      const Complex candidate = root - h.value / h.derivative;
      if (std::abs(evaluate(p, candidate)) < std::abs(h.value)) {
        root = candidate;
      } else {
        break;
      }
    }
  }
}

// A root of multiplicity m is a simple root of p^(m-1); Newton there
// converges quadratically where plain Newton on p crawls.
Complex refine_multiple_root(const DensePolynomial& p, Complex z, int m) {
  const DensePolynomial f = derivative(p, m - 1);
  const DensePolynomial df = derivative(f, 1);
  for (int step = 0; step < 8; ++step) {
    const Complex fz = evaluate(f, z);
    const Complex dfz = evaluate(df, z);
    if (fz == Complex{} || dfz == Complex{}) break;
    const Complex next = z - fz / dfz;
    if (std::abs(evaluate(f, next)) >= std::abs(fz)) break;
    z = next;
  }
  return z;
}

// Groups indices by single linkage at the given relative threshold.
std::vector<std::vector<std::size_t>> link_clusters(const std::vector<Complex>& z,
                                                    const std::vector<std::size_t>& members,
                                                    double threshold) {
  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Complex za = z[members[a]];
      const Complex zb = z[members[b]];
      const double scale = 1.0 + std::max(std::abs(za), std::abs(zb));
      if (std::abs(za - zb) < threshold * scale) parent[find(a)] = find(b);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(members.size(), -1);
  for (std::size_t a = 0; a < members.size(); ++a) {
    const std::size_t r = find(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(members[a]);
  }
  return groups;
}

// Replaces each cluster that behaves as a multiple root by its centroid.
// A cluster qualifies when the centroid's residual is no worse than the
// members' (the centroid of a multiple root's approximations is far more
// accurate than any single member). Failing clusters are retried at a
// tighter linkage threshold.
void collapse_clusters(const DensePolynomial& p, std::vector<Complex>& z,
                       std::vector<int>& multiplicity, const std::vector<std::size_t>& members,
                       double threshold) {
  if (members.size() < 2 || threshold < 1e-12) return;
  const double floor = residual_floor(p.degree());
  for (const auto& group : link_clusters(z, members, threshold)) {
    if (group.size() < 2) continue;
    Complex centroid{};
    double worst_member = 0.0;
    for (std::size_t i : group) {
      centroid += z[i];
      worst_member = std::max(worst_member, relative_residual(p, z[i]));
    }
    centroid /= static_cast<double>(group.size());
    if (relative_residual(p, centroid) <= std::max(floor, worst_member)) {
      const Complex refined = refine_multiple_root(p, centroid, static_cast<int>(group.size()));
      if (relative_residual(p, refined) <= std::max(floor, worst_member)) centroid = refined;
      for (std::size_t i : group) {
        z[i] = centroid;
        multiplicity[i] = static_cast<int>(group.size());
      }
    } else {
      collapse_clusters(p, z, multiplicity, group, threshold * 0.1);
    }
  }
}

}  // namespace

int RootSet::max_multiplicity() const {
  int m = roots.empty() ? 0 : 1;
  for (int k : multiplicity) m = std::max(m, k);
  return m;
}

RootSet find_all_roots(const DensePolynomial& p, const RootFinderOptions& options) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.degree() < 1) throw std::invalid_argument("find_all_roots: degree must be at least 1");

  const auto& c = p.coeffs();
  std::size_t zeros = 0;
  while (c[zeros] == Complex{}) ++zeros;
  const std::vector<Complex> reduced(c.begin() + static_cast<long>(zeros), c.end());

  RootSet out;
  std::vector<Complex> z;
  if (reduced.size() == 2) {
    z.push_back(-reduced[0] / reduced[1]);
  } else if (reduced.size() > 2) {
    z = initial_guesses(reduced);
    out.iterations = aberth(reduced, z, options.max_iter);
    newton_polish(p, z);
  }

  std::vector<int> multiplicity(z.size(), 1);
  std::vector<std::size_t> members(z.size());
  std::iota(members.begin(), members.end(), 0);
  collapse_clusters(p, z, multiplicity, members, 1e-2);

  for (std::size_t i = 0; i < zeros; ++i) {
    out.roots.emplace_back();
    out.multiplicity.push_back(static_cast<int>(zeros));
  }
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  out.multiplicity.insert(out.multiplicity.end(), multiplicity.begin(), multiplicity.end());

  // Stable lexicographic order keeps output independent of start layout.
  std::vector<std::size_t> order(out.roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Complex x = out.roots[a];
    const Complex y = out.roots[b];
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  RootSet sorted;
  sorted.iterations = out.iterations;
  const double base = std::max(options.tol, residual_floor(p.degree()));
  for (std::size_t i : order) {
    const Complex r = out.roots[i];
    const int m = out.multiplicity[i];
    const double residual = relative_residual(p, r);
    if (residual > std::pow(base, 1.0 / m)) {
      throw NoConvergence("Aberth iteration", out.iterations);
    }
    sorted.roots.push_back(r);
    sorted.residuals.push_back(residual);
    sorted.multiplicity.push_back(m);
  }
  return sorted;
}

std::vector<double> real_roots(const RootSet& rs, double imag_tol) {
  std::vector<double> out;
  for (const auto& r : rs.roots) {
    if (std::abs(r.imag()) < imag_tol * (1.0 + std::abs(r.real()))) out.push_back(r.real());
  }
  return out;
}

}  // namespace quintic

#include "quintic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "quintic/errors.hpp"

namespace quintic {
namespace {

bool lex_less(Complex x, Complex y) {
  return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
}

std::vector<std::size_t> lex_order(std::span<const Complex> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(v[a], v[b]); });
  return order;
}

// Bottleneck assignment by depth-first branch and bound. Rows are visited in
// `rows` order; each row tries its columns nearest-first.
class BottleneckSearch {
 public:
  BottleneckSearch(std::span<const Complex> a, std::span<const Complex> b,
                   std::vector<std::size_t> rows, std::vector<std::size_t> seed, double seed_cost)
      : a_(a), b_(b), rows_(std::move(rows)), best_(std::move(seed)), best_cost_(seed_cost) {
    const std::size_t n = a.size();
    dist_.assign(n, std::vector<double>(n));
    by_distance_.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dist_[i][j] = std::abs(a[i] - b[j]);
      std::iota(by_distance_[i].begin(), by_distance_[i].end(), 0);
      std::stable_sort(by_distance_[i].begin(), by_distance_[i].end(),
                       [&](std::size_t x, std::size_t y) { return dist_[i][x] < dist_[i][y]; });
    }
    current_.assign(n, 0);
    used_.assign(n, false);
  }

  void run() { descend(0, 0.0); }
  const std::vector<std::size_t>& best() const { return best_; }
  double best_cost() const { return best_cost_; }

 private:
  // Every unassigned row still needs some free column.
  bool hopeless(std::size_t depth) const {
    for (std::size_t d = depth; d < rows_.size(); ++d) {
      const std::size_t row = rows_[d];
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t col : by_distance_[row]) {
        if (!used_[col]) {
          nearest = dist_[row][col];
          break;
        }
      }
      if (nearest >= best_cost_) return true;
    }
    return false;
  }

  void descend(std::size_t depth, double cost) {
    if (depth == rows_.size()) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = current_;
      }
      return;
    }
    if (hopeless(depth)) return;
    const std::size_t row = rows_[depth];
    for (std::size_t col : by_distance_[row]) {
      if (used_[col]) continue;
      const double d = dist_[row][col];
      if (d >= best_cost_) break;
      used_[col] = true;
      current_[row] = col;
      descend(depth + 1, std::max(cost, d));
      used_[col] = false;
    }
  }

  std::span<const Complex> a_;
  std::span<const Complex> b_;
  std::vector<std::size_t> rows_;
  std::vector<std::vector<double>> dist_;
  std::vector<std::vector<std::size_t>> by_distance_;
  std::vector<std::size_t> current_;
  std::vector<bool> used_;
  std::vector<std::size_t> best_;
  double best_cost_;
};

MatchReport make_report(std::span<const Complex> a, std::span<const Complex> b,
                        const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& assignment, double tol) {
  MatchReport r;
  for (std::size_t row : rows) {
    const double d = std::abs(a[row] - b[assignment[row]]);
    r.pairs.push_back({a[row], b[assignment[row]], d});
    r.max_distance = std::max(r.max_distance, d);
  }
  r.matched = r.max_distance < tol;
  return r;
}

}  // namespace

std::vector<Complex> pairwise_sums(std::span<const Complex> roots) {
  if (roots.size() != 5) throw std::invalid_argument("pairwise_sums: expected 5 roots");
  std::vector<Complex> sums;
  sums.reserve(10);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) sums.push_back(roots[i] + roots[j]);
  }
  return sums;
}

MatchReport multiset_match(std::span<const Complex> a, std::span<const Complex> b, double tol) {
  if (a.size() != b.size()) throw std::invalid_argument("multiset_match: length mismatch");
  const std::vector<std::size_t> rows = lex_order(a);

  std::vector<std::size_t> greedy(a.size());
  std::vector<bool> used(b.size(), false);
  double greedy_cost = 0.0;
  for (std::size_t row : rows) {
    std::size_t pick = b.size();
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t col = 0; col < b.size(); ++col) {
      const double d = std::abs(a[row] - b[col]);
      if (!used[col] && d < nearest) {
        nearest = d;
        pick = col;
      }
    }
    used[pick] = true;
    greedy[row] = pick;
    greedy_cost = std::max(greedy_cost, nearest);
  }
  if (greedy_cost < tol) return make_report(a, b, rows, greedy, tol);

  BottleneckSearch search(a, b, rows, greedy, greedy_cost);
  search.run();
  MatchReport r = make_report(a, b, rows, search.best(), tol);
  r.exhaustive = true;
  return r;
}

double CheckReport::split_residual() const {
  return solution ? solution->split.residual : std::numeric_limits<double>::infinity();
}

double CheckReport::worst_root_residual() const {
  if (!solution) return std::numeric_limits<double>::infinity();
  return *std::max_element(solution->residuals.begin(), solution->residuals.end());
}

CheckReport full_check(const GeneralQuintic& q, const CheckOptions& options) {
  CheckReport report;
  report.quintic = q;
  report.depressed = depress(q);
  report.resolvent = build_resolvent(report.depressed);
  report.match_tolerance = options.match_tol;

  try {
    const RootSet oracle = find_all_roots(q.to_polynomial().to_dense(), options.root_finder);
    report.oracle_roots = oracle.roots;
    report.pair_sums = pairwise_sums(report.oracle_roots);
    if (oracle.max_multiplicity() > 1) {
      report.flags.push_back("repeated_roots");
      report.match_tolerance = options.relaxed_match_tol;
    }
  } catch (const Error& e) {
    report.errors.push_back(std::string("oracle: ") + e.what());
  }

  try {
    const RootSet rs = find_all_roots(report.resolvent.to_dense(), options.root_finder);
    const Complex twice_shift = 2.0 * to_double(report.depressed.shift);
    for (const Complex& k : rs.roots) report.resolvent_roots.push_back(k - twice_shift);
    if (rs.max_multiplicity() > 1) report.flags.push_back("repeated_resolvent_roots");
  } catch (const Error& e) {
    report.errors.push_back(std::string("resolvent roots: ") + e.what());
  }

  if (!report.pair_sums.empty() && !report.resolvent_roots.empty()) {
    report.match = multiset_match(report.resolvent_roots, report.pair_sums, report.match_tolerance);
  }

  try {
    QuinticOptions qo;
    qo.root_finder = options.root_finder;
    qo.split = options.split;
    qo.root_index = options.root_index;
    report.solution = solve_quintic(q, qo);
    for (const auto& note : report.solution->notes) report.flags.push_back(note);
    if (!report.oracle_roots.empty()) {
      report.root_match = multiset_match(report.solution->roots, report.oracle_roots,
                                         report.match_tolerance);
    }
  } catch (const Error& e) {
    report.errors.push_back(std::string("solve: ") + e.what());
    report.solve_failure = std::current_exception();
  }
  return report;
}

double relative_root_separation(std::span<const Complex> roots) {
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, 1.0 + std::abs(r));
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      sep = std::min(sep, std::abs(roots[i] - roots[j]) / scale);
    }
  }
  return sep;
}

GeneralQuintic sample_quintic(std::uint64_t seed, std::uint64_t trial, double bound,
                              double min_separation) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  const long grid = 1000;
  const long limit = std::lround(bound * grid);
  std::uniform_int_distribution<long> coeff(-limit, limit);
  auto draw = [&] { return Rational(coeff(rng), grid); };

  for (int attempt = 0; attempt < 1000; ++attempt) {
    GeneralQuintic q;
    q.a4 = draw();
    q.a3 = draw();
    q.a2 = draw();
    q.a1 = draw();
    q.a0 = draw();
    try {
      const RootSet rs = find_all_roots(q.to_polynomial().to_dense());
      if (rs.max_multiplicity() == 1 && relative_root_separation(rs.roots) >= min_separation) {
        return q;
      }
    } catch (const Error&) {
      // Resample.
    }
  }
  throw NoConvergence("quintic rejection sampling", 1000);
}

VerifySummary run_trials(int count, std::uint64_t seed, double bound, int threads,
                         const CheckOptions& options) {
  if (count < 1) throw std::invalid_argument("run_trials: count must be at least 1");
  VerifySummary summary;
  summary.trials.resize(static_cast<std::size_t>(count));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      TrialSummary& t = summary.trials[static_cast<std::size_t>(i)];
      t.trial = static_cast<std::uint64_t>(i);
      try {
        t.quintic = sample_quintic(seed, t.trial, bound);
      } catch (const Error& e) {
        t.errors.push_back(std::string("sample: ") + e.what());
        continue;
      }
      const CheckReport r = full_check(t.quintic, options);
      t.matched = r.matched();
      t.max_distance =
          r.match ? r.match->max_distance : std::numeric_limits<double>::infinity();
      t.split_residual = r.split_residual();
      t.worst_root_residual = r.worst_root_residual();
      t.errors = r.errors;
      t.flags = r.flags;
    }
  };

  const int workers = std::max(1, std::min(threads, count));
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& t : summary.trials) {
    if (t.matched) ++summary.passed;
    summary.worst_distance = std::max(summary.worst_distance, t.max_distance);
    summary.worst_split_residual = std::max(summary.worst_split_residual, t.split_residual);
    summary.worst_root_residual = std::max(summary.worst_root_residual, t.worst_root_residual);
  }
  return summary;
}

}  // namespace quintic

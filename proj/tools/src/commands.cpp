#include "quintic_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "quintic/quintic.hpp"
#include "quintic_cli/parse.hpp"
#include "quintic_cli/report.hpp"

namespace quintic::cli {
namespace {

using nlohmann::json;

struct ResolventArgs {
  std::vector<std::string> coeffs;
  std::string format = "text";
};

struct SolveArgs {
  std::vector<std::string> coeffs;
  double tol = 1e-14;
  int max_iter = 500;
  std::optional<int> root_index;
  std::string format = "text";
  int precision = 17;
};

struct VerifyArgs {
  int count = 200;
  std::uint64_t seed = 0;
  double bound = 5.0;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string format = "text";
  int precision = 17;
};

struct PfqArgs {
  std::vector<std::string> upper;
  std::vector<std::string> lower;
  std::string z = "0";
  std::string z_imag = "0";
  bool pair_sum = false;
  double tol = 1e-14;
  int max_terms = 10000;
  std::string format = "text";
  int precision = 17;
};

std::vector<Rational> parse_all(const std::vector<std::string>& tokens) {
  std::vector<Rational> out;
  for (const auto& t : tokens) out.push_back(parse_rational(t));
  return out;
}

int cmd_resolvent(const ResolventArgs& a, std::ostream& out) {
  const GeneralQuintic q = parse_quintic(a.coeffs);
  const DepressedQuintic dq = depress(q);
  const Resolvent r = build_resolvent(dq);
  if (a.format == "json") {
    out << json{{"quintic", exact_strings(q)},
                {"depressed", exact_strings(dq)},
                {"resolvent", exact_strings(r.poly)},
                {"polynomial", polynomial_text(r.poly, "k")}}
               .dump(2)
        << "\n";
  } else {
    out << polynomial_text(r.poly, "k") << "\n";
    out << "coefficients:";
    for (const auto& c : exact_strings(r.poly)) out << " " << c;
    out << "\n";
  }
  return kOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const GeneralQuintic q = parse_quintic(a.coeffs);

  CheckOptions options;
  options.root_finder.tol = a.tol;
  options.root_finder.max_iter = a.max_iter;
  options.root_index = a.root_index;
  const CheckReport check = full_check(q, options);

  RunReport r;
  r.precision = a.precision;
  r.quintic = exact_strings(q);
  r.depressed = exact_strings(check.depressed);
  r.resolvent = exact_strings(check.resolvent.poly);
  r.root_index = a.root_index;
  if (check.match) r.match = format_match(*check.match, check.match_tolerance, a.precision);
  r.notes = check.flags;

  int code = kOk;
  if (check.solution) {
    const QuinticSolution& s = *check.solution;
    r.status = s.split.clean ? "clean" : "accepted";
    r.k = format_complex(s.split.k, a.precision);
    r.n = format_complex(s.split.n, a.precision);
    r.l = format_complex(s.split.l, a.precision);
    r.m = format_complex(s.split.m, a.precision);
    for (std::size_t i = 0; i < 3; ++i) r.quadratic.push_back(format_complex(s.split.quadratic[i], a.precision));
    for (std::size_t i = 0; i < 4; ++i) r.cubic.push_back(format_complex(s.split.cubic[i], a.precision));
    for (std::size_t i = 0; i < 5; ++i) {
      r.roots.push_back(format_complex(s.roots[i], a.precision));
      r.residuals.push_back(format_decimal(s.residuals[i], a.precision));
    }
  } else {
    try {
      if (check.solve_failure) std::rethrow_exception(check.solve_failure);
      r.status = "error";
      code = kNoConvergence;
    } catch (const NoViableSplit& e) {
      r.status = "no_viable_split";
      r.error = e.what();
      code = kFailed;
    } catch (const NoConvergence& e) {
      r.status = "error";
      r.error = e.what();
      code = kNoConvergence;
    }
    err << "solve: " << r.error << "\n";
  }
  for (const auto& e : check.errors) {
    if (e.rfind("solve:", 0) != 0) {
      err << e << "\n";
      code = std::max(code, static_cast<int>(kNoConvergence));
    }
  }

  r.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << (a.format == "json" ? to_json(r).dump(2) + "\n" : to_text(r));
  return code;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const VerifySummary s = run_trials(a.count, a.seed, a.bound, a.threads);
  const int p = a.precision;
  if (a.format == "json") {
    json trials = json::array();
    for (const auto& t : s.trials) {
      trials.push_back({{"trial", t.trial},
                        {"quintic", exact_strings(t.quintic)},
                        {"matched", t.matched},
                        {"max_distance", format_decimal(t.max_distance, p)},
                        {"split_residual", format_decimal(t.split_residual, p)},
                        {"worst_root_residual", format_decimal(t.worst_root_residual, p)},
                        {"flags", t.flags},
                        {"errors", t.errors}});
    }
    out << json{{"count", a.count},
                {"seed", a.seed},
                {"bound", a.bound},
                {"passed", s.passed},
                {"pass_rate", format_decimal(s.pass_rate(), p)},
                {"worst_distance", format_decimal(s.worst_distance, p)},
                {"worst_split_residual", format_decimal(s.worst_split_residual, p)},
                {"worst_root_residual", format_decimal(s.worst_root_residual, p)},
                {"trials", trials}}
               .dump(2)
        << "\n";
  } else {
    out << "count: " << a.count << "\n"
        << "seed: " << a.seed << "\n"
        << "bound: " << format_decimal(a.bound, p) << "\n"
        << "passed: " << s.passed << "\n"
        << "pass_rate: " << format_decimal(s.pass_rate(), p) << "\n"
        << "worst_distance: " << format_decimal(s.worst_distance, p) << "\n"
        << "worst_split_residual: " << format_decimal(s.worst_split_residual, p) << "\n"
        << "worst_root_residual: " << format_decimal(s.worst_root_residual, p) << "\n";
  }
  for (const auto& t : s.trials) {
    if (t.matched) continue;
    err << "trial " << t.trial << " unmatched (max_distance " << format_decimal(t.max_distance, p)
        << ")";
    for (const auto& e : t.errors) err << "; " << e;
    err << "\n";
  }
  return s.passed == static_cast<int>(s.trials.size()) ? kOk : kFailed;
}

int cmd_pfq(const PfqArgs& a, std::ostream& out, std::ostream& err) {
  const Complex z{to_double(parse_rational(a.z)), to_double(parse_rational(a.z_imag))};
  const int p = a.precision;
  try {
    json j;
    std::string text;
    if (a.pair_sum) {
      const SeriesCombination c = pair_sum_combination(z, a.tol, a.max_terms);
      const ComplexText v = format_complex(c.value, p);
      j = {{"value", {{"re", v.re}, {"im", v.im}}},
           {"terms", c.terms},
           {"error_bound", format_decimal(c.error_bound, p)}};
      text = "value: " + v.re + " " + v.im + "i\nterms: " + std::to_string(c.terms[0]) + " " +
             std::to_string(c.terms[1]) + " " + std::to_string(c.terms[2]) +
             "\nerror_bound: " + format_decimal(c.error_bound, p) + "\n";
    } else {
      const PFQResult r =
          pfq(PFQParams{parse_all(a.upper), parse_all(a.lower), z, a.tol, a.max_terms});
      const ComplexText v = format_complex(r.value, p);
      j = {{"value", {{"re", v.re}, {"im", v.im}}},
           {"terms", r.terms},
           {"terminating", r.terminating},
           {"error_bound", format_decimal(r.error_bound, p)}};
      text = "value: " + v.re + " " + v.im + "i\nterms: " + std::to_string(r.terms) +
             "\nterminating: " + (r.terminating ? "true" : "false") +
             "\nerror_bound: " + format_decimal(r.error_bound, p) + "\n";
    }
    out << (a.format == "json" ? j.dump(2) + "\n" : text);
    return kOk;
  } catch (const DivergentArgument& e) {
    err << "pfq: divergent argument: " << e.what() << "\n";
    return kFailed;
  } catch (const PoleParameter& e) {
    err << "pfq: pole parameter: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pair-sum resolvent construction and quintic splitting", "quintic"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json"});
  const auto precisions = CLI::Range(1, 17);

  ResolventArgs ra;
  auto* resolvent = app.add_subcommand("resolvent", "Print the exact degree-10 pair-sum resolvent");
  resolvent->add_option("coeffs", ra.coeffs, "C D E F, or a4 a3 a2 a1 a0")->required()->expected(4, 5);
  resolvent->add_option("--format", ra.format)->check(formats);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Split the quintic and solve both factors");
  solve->add_option("coeffs", sa.coeffs, "C D E F, or a4 a3 a2 a1 a0")->required()->expected(4, 5);
  solve->add_option("--tol", sa.tol, "Root-finder relative residual target");
  solve->add_option("--max-iter", sa.max_iter, "Root-finder sweep budget")->check(CLI::PositiveNumber);
  solve->add_option("--root-index", sa.root_index, "Use this resolvent root (0-9)");
  solve->add_option("--format", sa.format)->check(formats);
  solve->add_option("--precision", sa.precision, "Significant digits")->check(precisions);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the pair-sum property on random quintics");
  verify->add_option("--count", va.count)->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed);
  verify->add_option("--bound", va.bound, "Coefficient bound")->check(CLI::PositiveNumber);
  verify->add_option("--threads", va.threads)->check(CLI::PositiveNumber);
  verify->add_option("--format", va.format)->check(formats);
  verify->add_option("--precision", va.precision)->check(precisions);

  PfqArgs pa;
  auto* pfq_cmd = app.add_subcommand("pfq", "Evaluate a generalized hypergeometric series");
  pfq_cmd->add_option("--upper", pa.upper, "Numerator parameters");
  pfq_cmd->add_option("--lower", pa.lower, "Denominator parameters");
  pfq_cmd->add_option("--z", pa.z, "Real part of the argument");
  pfq_cmd->add_option("--z-imag", pa.z_imag, "Imaginary part of the argument");
  pfq_cmd->add_flag("--pair-sum", pa.pair_sum, "Evaluate the three-term 4F3 pair-sum combination");
  pfq_cmd->add_option("--tol", pa.tol);
  pfq_cmd->add_option("--max-terms", pa.max_terms)->check(CLI::PositiveNumber);
  pfq_cmd->add_option("--format", pa.format)->check(formats);
  pfq_cmd->add_option("--precision", pa.precision)->check(precisions);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*resolvent) return cmd_resolvent(ra, out);
    if (*solve) return cmd_solve(sa, out, err);
    if (*verify) return cmd_verify(va, out, err);
    if (*pfq_cmd) return cmd_pfq(pa, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kNoConvergence;
  }
  return kParseError;
}

}  // namespace quintic::cli

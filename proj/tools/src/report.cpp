#include "quintic_cli/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace quintic::cli {

using nlohmann::json;

std::string format_decimal(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

ComplexText format_complex(Complex z, int precision) {
  return {format_decimal(z.real(), precision), format_decimal(z.imag(), precision)};
}

Complex parse_complex(const ComplexText& text) {
  return {std::strtod(text.re.c_str(), nullptr), std::strtod(text.im.c_str(), nullptr)};
}

std::vector<std::string> exact_strings(const GeneralQuintic& q) {
  return {q.a4.get_str(), q.a3.get_str(), q.a2.get_str(), q.a1.get_str(), q.a0.get_str()};
}

std::vector<std::string> exact_strings(const DepressedQuintic& dq) {
  return {dq.c3.get_str(), dq.c2.get_str(), dq.c1.get_str(), dq.c0.get_str(),
          dq.shift.get_str()};
}

std::vector<std::string> exact_strings(const ExactPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

MatchText format_match(const MatchReport& match, double tolerance, int precision) {
  MatchText t;
  t.matched = match.matched;
  t.max_distance = format_decimal(match.max_distance, precision);
  t.tolerance = format_decimal(tolerance, precision);
  for (const auto& p : match.pairs) {
    t.pairs.push_back({format_complex(p.left, precision), format_complex(p.right, precision),
                       format_decimal(p.distance, precision)});
  }
  return t;
}

namespace {

json complex_json(const ComplexText& c) { return json{{"re", c.re}, {"im", c.im}}; }

ComplexText complex_from(const json& j) {
  return {j.at("re").get<std::string>(), j.at("im").get<std::string>()};
}

json optional_complex(const std::optional<ComplexText>& c) {
  return c ? complex_json(*c) : json(nullptr);
}

std::optional<ComplexText> optional_complex_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return complex_from(j);
}

json complex_list(const std::vector<ComplexText>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(complex_json(c));
  return out;
}

std::vector<ComplexText> complex_list_from(const json& j) {
  std::vector<ComplexText> out;
  for (const auto& c : j) out.push_back(complex_from(c));
  return out;
}

std::string complex_text(const ComplexText& c) { return c.re + " " + c.im + "i"; }

}  // namespace

const std::vector<std::string>& run_report_keys() {
  static const std::vector<std::string> keys = {
      "quintic", "depressed", "resolvent", "k",     "n",         "l",
      "m",       "quadratic", "cubic",     "roots", "residuals", "match",
      "timing_ms", "status",  "precision", "root_index", "notes", "error"};
  return keys;
}

json to_json(const RunReport& r) {
  json j;
  j["precision"] = r.precision;
  j["quintic"] = r.quintic;
  j["depressed"] = r.depressed;
  j["resolvent"] = r.resolvent;
  j["status"] = r.status;
  j["root_index"] = r.root_index ? json(*r.root_index) : json(nullptr);
  j["k"] = optional_complex(r.k);
  j["n"] = optional_complex(r.n);
  j["l"] = optional_complex(r.l);
  j["m"] = optional_complex(r.m);
  j["quadratic"] = complex_list(r.quadratic);
  j["cubic"] = complex_list(r.cubic);
  j["roots"] = complex_list(r.roots);
  j["residuals"] = r.residuals;
  if (r.match) {
    json pairs = json::array();
    for (const auto& p : r.match->pairs) {
      pairs.push_back({{"resolvent_root", complex_json(p.resolvent_root)},
                       {"pair_sum", complex_json(p.pair_sum)},
                       {"distance", p.distance}});
    }
    j["match"] = {{"matched", r.match->matched},
                  {"max_distance", r.match->max_distance},
                  {"tolerance", r.match->tolerance},
                  {"pairs", pairs}};
  } else {
    j["match"] = nullptr;
  }
  j["notes"] = r.notes;
  j["error"] = r.error;
  j["timing_ms"] = r.timing_ms;
  return j;
}

RunReport run_report_from_json(const json& j) {
  RunReport r;
  r.precision = j.at("precision").get<int>();
  r.quintic = j.at("quintic").get<std::vector<std::string>>();
  r.depressed = j.at("depressed").get<std::vector<std::string>>();
  r.resolvent = j.at("resolvent").get<std::vector<std::string>>();
  r.status = j.at("status").get<std::string>();
  if (!j.at("root_index").is_null()) r.root_index = j.at("root_index").get<int>();
  r.k = optional_complex_from(j.at("k"));
  r.n = optional_complex_from(j.at("n"));
  r.l = optional_complex_from(j.at("l"));
  r.m = optional_complex_from(j.at("m"));
  r.quadratic = complex_list_from(j.at("quadratic"));
  r.cubic = complex_list_from(j.at("cubic"));
  r.roots = complex_list_from(j.at("roots"));
  r.residuals = j.at("residuals").get<std::vector<std::string>>();
  if (!j.at("match").is_null()) {
    const json& m = j.at("match");
    MatchText t;
    t.matched = m.at("matched").get<bool>();
    t.max_distance = m.at("max_distance").get<std::string>();
    t.tolerance = m.at("tolerance").get<std::string>();
    for (const auto& p : m.at("pairs")) {
      t.pairs.push_back({complex_from(p.at("resolvent_root")), complex_from(p.at("pair_sum")),
                         p.at("distance").get<std::string>()});
    }
    r.match = std::move(t);
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.error = j.at("error").get<std::string>();
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string to_text(const RunReport& r) {
  std::ostringstream os;
  auto list = [&](const char* key, const std::vector<std::string>& v) {
    os << key << ":";
    for (const auto& s : v) os << " " << s;
    os << "\n";
  };
  auto clist = [&](const char* key, const std::vector<ComplexText>& v) {
    os << key << ":";
    for (const auto& c : v) os << " (" << complex_text(c) << ")";
    os << "\n";
  };
  list("quintic", r.quintic);
  list("depressed", r.depressed);
  list("resolvent", r.resolvent);
  os << "status: " << r.status << "\n";
  if (r.root_index) os << "root_index: " << *r.root_index << "\n";
  const std::pair<const char*, const std::optional<ComplexText>*> params[] = {
      {"k", &r.k}, {"n", &r.n}, {"l", &r.l}, {"m", &r.m}};
  for (const auto& [name, value] : params) {
    if (*value) os << name << ": " << complex_text(**value) << "\n";
  }
  if (!r.quadratic.empty()) clist("quadratic", r.quadratic);
  if (!r.cubic.empty()) clist("cubic", r.cubic);
  if (!r.roots.empty()) clist("roots", r.roots);
  if (!r.residuals.empty()) list("residuals", r.residuals);
  if (r.match) {
    os << "match: " << (r.match->matched ? "true" : "false") << " max_distance "
       << r.match->max_distance << " tolerance " << r.match->tolerance << "\n";
  }
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  if (!r.error.empty()) os << "error: " << r.error << "\n";
  os << "timing_ms: " << format_decimal(r.timing_ms, 6) << "\n";
  return os.str();
}

std::string polynomial_text(const ExactPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational c = p[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || d == 0) os << mag.get_str();
    if (d > 0) {
      if (!unit) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

}  // namespace quintic::cli

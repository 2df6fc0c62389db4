#include "quintic_cli/parse.hpp"

#include <regex>

namespace quintic::cli {

Rational parse_rational(std::string_view token) {
  static const std::regex integer(R"(([+-]?)(\d+))");
  static const std::regex fraction(R"(([+-]?)(\d+)/(\d+))");
  static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");

  const std::string s(token);
  std::smatch m;
  auto sign = [&] { return m[1].str() == "-" ? std::string("-") : std::string(); };
  if (std::regex_match(s, m, integer)) {
    return Rational(mpz_class(sign() + m[2].str(), 10));
  }
  if (std::regex_match(s, m, fraction)) {
    const mpz_class den(m[3].str(), 10);
    if (den == 0) throw ParseError(s);
    Rational r(mpz_class(sign() + m[2].str(), 10), den);
    r.canonicalize();
    return r;
  }
  if (std::regex_match(s, m, decimal) && (m[2].length() > 0 || m[3].length() > 0)) {
    const std::string digits = m[2].str() + m[3].str();
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
      const std::string e = m[4].str();
      if (e.size() > 6) throw ParseError(s);
      exponent += std::stol(e);
    }
    Rational r(mpz_class(sign() + (digits.empty() ? "0" : digits), 10));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
      r /= scale;
    } else {
      r *= scale;
    }
    r.canonicalize();
    return r;
  }
  throw ParseError(s);
}

GeneralQuintic parse_quintic(const std::vector<std::string>& tokens) {
  std::vector<Rational> c;
  c.reserve(tokens.size());
  for (const auto& t : tokens) c.push_back(parse_rational(t));
  if (c.size() == 4) return GeneralQuintic{Rational(0), c[0], c[1], c[2], c[3]};
  if (c.size() == 5) return GeneralQuintic{c[0], c[1], c[2], c[3], c[4]};
  throw std::invalid_argument("expected 4 (depressed) or 5 (general) coefficients, got " +
                              std::to_string(tokens.size()));
}

}  // namespace quintic::cli

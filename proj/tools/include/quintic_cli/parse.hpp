#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quintic/poly_core.hpp"

namespace quintic::cli {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string token)
      : std::runtime_error("cannot parse '" + token + "' as an integer, decimal or p/q rational"),
        token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Parses "12", "-3/4", "0.125", "1.5e-3" exactly. Decimals expand their
/// literal digits: "0.1" is 1/10, not the nearest double.
Rational parse_rational(std::string_view token);

/// Four tokens are C D E F of a depressed quintic; five are a4 a3 a2 a1 a0
/// of a monic general quintic.
GeneralQuintic parse_quintic(const std::vector<std::string>& tokens);

}  // namespace quintic::cli

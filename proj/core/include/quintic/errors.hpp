#pragma once

#include <stdexcept>
#include <string>

namespace quintic {

/// Base class for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The pair-product formula's denominator 5k^3 + Ck - D is numerically zero.
class DegenerateDenominator : public Error {
 public:
  explicit DegenerateDenominator(double magnitude)
      : Error("degenerate denominator |5k^3+Ck-D| = " + std::to_string(magnitude)),
        magnitude_(magnitude) {}
  double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

class NotAResolventRoot : public Error {
 public:
  explicit NotAResolventRoot(double residual)
      : Error("candidate is not a resolvent root (relative residual " +
              std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, int iterations)
      : Error(what + " did not converge after " + std::to_string(iterations) + " iterations"),
        iterations_(iterations) {}
  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("polynomial is identically zero") {}
};

class NoViableSplit : public Error {
 public:
  using Error::Error;
};

class DivergentArgument : public Error {
 public:
  using Error::Error;
};

class PoleParameter : public Error {
 public:
  using Error::Error;
};

}  // namespace quintic

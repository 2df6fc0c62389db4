#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace quintic {

using Complex = std::complex<double>;
using Rational = mpq_class;

/// Lossy one-way conversion into the numeric domain.
inline double to_double(const Rational& q) { return q.get_d(); }

/// Univariate polynomial over complex doubles, coefficients in ascending
/// degree. Trailing zeros above the true degree are stripped on
/// construction so `coeffs().size() == degree() + 1` (empty for zero).
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<Complex> coeffs);
  DensePolynomial(std::initializer_list<Complex> coeffs);

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

  /// Coefficient of x^i; zero above the degree.
  Complex operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : Complex{};
  }

  /// Largest coefficient magnitude.
  double max_abs_coeff() const noexcept;

  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Univariate polynomial over arbitrary-precision rationals. All arithmetic
/// is exact.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> coeffs);
  ExactPolynomial(std::initializer_list<Rational> coeffs);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Rational operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  Rational evaluate(const Rational& x) const;

  /// Returns p(x + t).
  ExactPolynomial shifted(const Rational& t) const;

  DensePolynomial to_dense() const;

  friend ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q);
  friend ExactPolynomial operator-(const ExactPolynomial& p, const ExactPolynomial& q);
  friend ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q);
  friend ExactPolynomial operator*(const Rational& s, const ExactPolynomial& p);
  friend bool operator==(const ExactPolynomial& p, const ExactPolynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Monic x^5 + a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0.
struct GeneralQuintic {
  Rational a4, a3, a2, a1, a0;

  ExactPolynomial to_polynomial() const;
};

/// x^5 + c3 x^3 + c2 x^2 + c1 x + c0, obtained from a general quintic by
/// x = y - shift. Roots of the original are the roots of this form minus
/// `shift`.
struct DepressedQuintic {
  Rational c3, c2, c1, c0;
  Rational shift;

  ExactPolynomial to_polynomial() const;

  /// Re-expands under y = x + shift, recovering the general quintic exactly.
  GeneralQuintic undepress() const;
};

/// Removes the x^4 term with the Tschirnhaus shift a4/5.
DepressedQuintic depress(const GeneralQuintic& q);

DensePolynomial multiply(const DensePolynomial& p, const DensePolynomial& q);
inline DensePolynomial operator*(const DensePolynomial& p, const DensePolynomial& q) {
  return multiply(p, q);
}

/// Horner evaluation.
Complex evaluate(const DensePolynomial& p, Complex x);

/// max_i |p_i - q_i| / (1 + max(|p_i|, |q_i|)), zero-padding the shorter list.
double residual_norm(const DensePolynomial& p, const DensePolynomial& q);

/// order-th derivative.
DensePolynomial derivative(const DensePolynomial& p, int order = 1);

/// |p(x)| / sum_i |p_i| |x|^i, the componentwise backward error of x as a
/// root of p. Zero when p(x) is exactly zero.
double relative_residual(const DensePolynomial& p, Complex x);

}  // namespace quintic

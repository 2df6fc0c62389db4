#include "quintic/poly_core.hpp"

#include <algorithm>
#include <cmath>

namespace quintic {

DensePolynomial::DensePolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

DensePolynomial::DensePolynomial(std::initializer_list<Complex> coeffs)
    : DensePolynomial(std::vector<Complex>(coeffs)) {}

double DensePolynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

ExactPolynomial::ExactPolynomial(std::initializer_list<Rational> coeffs)
    : ExactPolynomial(std::vector<Rational>(coeffs)) {}

void ExactPolynomial::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational ExactPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPolynomial ExactPolynomial::shifted(const Rational& t) const {
  // Horner in the polynomial ring: acc <- acc * (x + t) + c_i.
  const ExactPolynomial x_plus_t{t, Rational(1)};
  ExactPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x_plus_t + ExactPolynomial{*it};
  }
  return acc;
}

DensePolynomial ExactPolynomial::to_dense() const {
  std::vector<Complex> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(to_double(c), 0.0);
  return DensePolynomial(std::move(out));
}

ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q) {
  std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] + q[i];
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator-(const ExactPolynomial& p, const ExactPolynomial& q) {
  std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] - q[i];
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator*(const Rational& s, const ExactPolynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& c : out) c *= s;
  return ExactPolynomial(std::move(out));
}

ExactPolynomial GeneralQuintic::to_polynomial() const {
  return ExactPolynomial{a0, a1, a2, a3, a4, Rational(1)};
}

ExactPolynomial DepressedQuintic::to_polynomial() const {
  return ExactPolynomial{c0, c1, c2, c3, Rational(0), Rational(1)};
}

GeneralQuintic DepressedQuintic::undepress() const {
  const ExactPolynomial p = to_polynomial().shifted(shift);
  return GeneralQuintic{p[4], p[3], p[2], p[1], p[0]};
}

DepressedQuintic depress(const GeneralQuintic& q) {
  const Rational shift = q.a4 / 5;
  const ExactPolynomial p = q.to_polynomial().shifted(-shift);
  return DepressedQuintic{p[3], p[2], p[1], p[0], shift};
}

DensePolynomial multiply(const DensePolynomial& p, const DensePolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return DensePolynomial(std::move(out));
}

Complex evaluate(const DensePolynomial& p, Complex x) {
  Complex acc{};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double residual_norm(const DensePolynomial& p, const DensePolynomial& q) {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = 1.0 + std::max(std::abs(p[i]), std::abs(q[i]));
    worst = std::max(worst, std::abs(p[i] - q[i]) / scale);
  }
  return worst;
}

DensePolynomial derivative(const DensePolynomial& p, int order) {
  std::vector<Complex> c = p.coeffs();
  for (int k = 0; k < order && !c.empty(); ++k) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<double>(i);
    c.pop_back();
  }
  return DensePolynomial(std::move(c));
}

double relative_residual(const DensePolynomial& p, Complex x) {
  const double ax = std::abs(x);
  double scale = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) scale = scale * ax + std::abs(*it);
  const double value = std::abs(evaluate(p, x));
  if (value == 0.0) return 0.0;
  return scale > 0.0 ? value / scale : value;
}

}  // namespace quintic

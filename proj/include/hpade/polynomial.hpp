#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hpade/scalar.hpp"

namespace hpade {

/// Dense univariate polynomial c_0 + c_1 z + ... + c_d z^d. Trailing exact
/// zeros are trimmed on construction, so the zero polynomial has no
/// coefficients and degree -1.
template <FieldScalar S>
class Polynomial {
 public:
  explicit Polynomial(int digits = kDefaultDigits) : digits_(digits) {}
  Polynomial(std::vector<S> coeffs, int digits) : coeffs_(std::move(coeffs)), digits_(digits) { trim(); }

  static Polynomial constant(const S& c) { return Polynomial(std::vector<S>{c}, c.digits()); }
  static Polynomial monomial(int k, int digits) {
    std::vector<S> c(static_cast<std::size_t>(k) + 1, S::from_int(0, digits));
    c.back() = S::from_int(1, digits);
    return Polynomial(std::move(c), digits);
  }
  /// z - root
  static Polynomial linear_factor(const S& root) {
    const int d = root.digits();
    return Polynomial(std::vector<S>{-root, S::from_int(1, d)}, d);
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  int digits() const { return digits_; }
  const std::vector<S>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of z^k; zero beyond the degree.
  S coeff(int k) const {
    if (k < 0 || k > degree()) return S::from_int(0, digits_);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const S& leading() const { return coeffs_.back(); }

  /// Horner evaluation.
  S operator()(const S& z) const {
    if (coeffs_.empty()) return S::from_int(0, digits_);
    S acc = coeffs_.back();
    for (int k = degree() - 1; k >= 0; --k) acc = acc * z + coeffs_[static_cast<std::size_t>(k)];
    return acc;
  }

  Polynomial derivative() const {
    if (degree() < 1) return Polynomial(digits_);
    std::vector<S> c;
    c.reserve(coeffs_.size() - 1);
    for (int k = 1; k <= degree(); ++k) c.push_back(coeffs_[static_cast<std::size_t>(k)] * static_cast<long>(k));
    return Polynomial(std::move(c), digits_);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<S> c(std::max(a.size(), b.size()), S::from_int(0, a.digits_));
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a.coeffs_[k];
    for (std::size_t k = 0; k < b.size(); ++k) c[k] = c[k] + b.coeffs_[k];
    return Polynomial(std::move(c), a.digits_);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  Polynomial operator-() const {
    std::vector<S> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return Polynomial(std::move(c), digits_);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.digits_);
    std::vector<S> c(a.size() + b.size() - 1, S::from_int(0, a.digits_));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c), a.digits_);
  }
  friend Polynomial operator*(const Polynomial& a, const S& s) {
    std::vector<S> c;
    c.reserve(a.size());
    for (const auto& x : a.coeffs_) c.push_back(x * s);
    return Polynomial(std::move(c), a.digits_);
  }
  friend Polynomial operator*(const S& s, const Polynomial& a) { return a * s; }
  friend Polynomial operator/(const Polynomial& a, const S& s) {
    std::vector<S> c;
    c.reserve(a.size());
    for (const auto& x : a.coeffs_) c.push_back(x / s);
    return Polynomial(std::move(c), a.digits_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
  int digits_;
};

template <FieldScalar S>
S poly_eval(const Polynomial<S>& p, const S& z) {
  return p(z);
}

/// Divides by the leading coefficient. The zero polynomial is returned as is.
template <FieldScalar S>
Polynomial<S> monic(const Polynomial<S>& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

/// Expands leading * prod (z - r_i).
template <FieldScalar S>
Polynomial<S> from_roots(const std::vector<S>& roots, const S& leading) {
  const int d = leading.digits();
  std::vector<S> c{leading};
  for (const auto& r : roots) {
    std::vector<S> next(c.size() + 1, S::from_int(0, d));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] = next[k + 1] + c[k];
      next[k] = next[k] - c[k] * r;
    }
    c = std::move(next);
  }
  return Polynomial<S>(std::move(c), d);
}

/// Largest coefficient modulus; zero for the zero polynomial.
inline Real max_abs_coeff(const Polynomial<Scalar>& p) {
  Real m = make_real(0, p.digits());
  for (const auto& c : p.coeffs()) m = max(m, abs(c));
  return m;
}

/// sum |c_k| |z|^k, the scale of a Horner evaluation.
inline Real abs_eval(const Polynomial<Scalar>& p, const Real& r) {
  Real acc = make_real(0, p.digits());
  for (int k = p.degree(); k >= 0; --k) acc = acc * r + abs(p.coeffs()[static_cast<std::size_t>(k)]);
  return acc;
}

inline Polynomial<Scalar> to_floating(const Polynomial<ExactScalar>& p, int digits) {
  std::vector<Scalar> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(to_floating(x, digits));
  return Polynomial<Scalar>(std::move(c), digits);
}

/// Sets to exact zero every coefficient with modulus <= rel_tol * max|c|.
/// Removes rounding debris that would otherwise count toward the degree.
inline Polynomial<Scalar> chop(const Polynomial<Scalar>& p, const Real& rel_tol) {
  if (p.is_zero()) return p;
  const Real cut = rel_tol * max_abs_coeff(p);
  std::vector<Scalar> c = p.coeffs();
  for (auto& x : c)
    if (abs(x) <= cut) x = Scalar::zero(p.digits());
  return Polynomial<Scalar>(std::move(c), p.digits());
}

}  // namespace hpade

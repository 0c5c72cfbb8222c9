#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hpade/polynomial.hpp"
#include "hpade/scalar.hpp"

namespace hpade {

/// Truncated Taylor expansion c_0 + c_1 z + ... + c_{N-1} z^{N-1} + O(z^N)
/// at z = 0.
template <FieldScalar S>
class PowerSeries {
 public:
  explicit PowerSeries(int digits = kDefaultDigits) : digits_(digits) {}
  PowerSeries(std::vector<S> coeffs, int digits) : coeffs_(std::move(coeffs)), digits_(digits) {}

  static PowerSeries constant(const S& c, int order) {
    std::vector<S> v(static_cast<std::size_t>(order), S::from_int(0, c.digits()));
    if (order > 0) v[0] = c;
    return PowerSeries(std::move(v), c.digits());
  }
  static PowerSeries from_polynomial(const Polynomial<S>& p, int order) {
    std::vector<S> v(static_cast<std::size_t>(order), S::from_int(0, p.digits()));
    for (int k = 0; k < order && k <= p.degree(); ++k) v[static_cast<std::size_t>(k)] = p.coeffs()[static_cast<std::size_t>(k)];
    return PowerSeries(std::move(v), p.digits());
  }

  /// Truncation order N: the number of known coefficients.
  int order() const { return static_cast<int>(coeffs_.size()); }
  int digits() const { return digits_; }
  const std::vector<S>& coeffs() const { return coeffs_; }
  const S& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  const S& at(int k) const {
    if (k < 0 || k >= order())
      throw error(errc::insufficient_data,
                  "coefficient " + std::to_string(k) + " of a series truncated at " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(k)];
  }

  PowerSeries truncate(int n) const {
    n = std::clamp(n, 0, order());
    return PowerSeries(std::vector<S>(coeffs_.begin(), coeffs_.begin() + n), digits_);
  }

  /// The first min(n, N) coefficients as a polynomial.
  Polynomial<S> to_polynomial(int n) const {
    n = std::min(n, order());
    return Polynomial<S>(std::vector<S>(coeffs_.begin(), coeffs_.begin() + n), digits_);
  }

 private:
  std::vector<S> coeffs_;
  int digits_;
};

namespace detail {

template <FieldScalar S>
void require_same_precision(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  if (a.digits() != b.digits())
    throw error(errc::precision_mismatch, "series at " + std::to_string(a.digits()) + " and " +
                                              std::to_string(b.digits()) + " digits");
}

template <FieldScalar S>
S zero_like(int digits) {
  return S::from_int(0, digits);
}

/// True when c is 1 exactly (exact mode) or to rounding level (floating mode).
template <FieldScalar S>
bool is_unit(const S& c) {
  const S diff = c - S::from_int(1, c.digits());
  if constexpr (scalar_traits<S>::exact) {
    return diff.is_zero();
  } else {
    return abs(diff) <= rounding_tolerance(c.digits());
  }
}

}  // namespace detail

template <FieldScalar S>
PowerSeries<S> series_add(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  detail::require_same_precision(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<S> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c.push_back(a[k] + b[k]);
  return PowerSeries<S>(std::move(c), a.digits());
}

template <FieldScalar S>
PowerSeries<S> series_sub(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  detail::require_same_precision(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<S> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c.push_back(a[k] - b[k]);
  return PowerSeries<S>(std::move(c), a.digits());
}

template <FieldScalar S>
PowerSeries<S> series_scale(const PowerSeries<S>& a, const S& s) {
  std::vector<S> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(x * s);
  return PowerSeries<S>(std::move(c), a.digits());
}

/// Cauchy product truncated at min(N_a, N_b).
template <FieldScalar S>
PowerSeries<S> series_mul(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  detail::require_same_precision(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<S> c(static_cast<std::size_t>(n), detail::zero_like<S>(a.digits()));
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return PowerSeries<S>(std::move(c), a.digits());
}

/// Product with a polynomial, keeping the order of the series.
template <FieldScalar S>
PowerSeries<S> series_mul(const Polynomial<S>& p, const PowerSeries<S>& a) {
  return series_mul(PowerSeries<S>::from_polynomial(p, a.order()), a);
}

/// a / b via the division recurrence; b_0 must be nonzero.
template <FieldScalar S>
PowerSeries<S> series_div(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  detail::require_same_precision(a, b);
  const int n = std::min(a.order(), b.order());
  if (n == 0) return PowerSeries<S>(a.digits());
  if (b[0].is_zero()) throw error(errc::non_unit_leading_term, "division by a series with zero constant term");
  std::vector<S> q;
  q.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    S acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[static_cast<std::size_t>(k - j)];
    q.push_back(acc / b[0]);
  }
  return PowerSeries<S>(std::move(q), a.digits());
}

template <FieldScalar S>
PowerSeries<S> series_inv(const PowerSeries<S>& a) {
  return series_div(PowerSeries<S>::constant(S::from_int(1, a.digits()), a.order()), a);
}

template <FieldScalar S>
PowerSeries<S> series_derivative(const PowerSeries<S>& a) {
  std::vector<S> c;
  for (int k = 1; k < a.order(); ++k) c.push_back(a[k] * static_cast<long>(k));
  return PowerSeries<S>(std::move(c), a.digits());
}

/// Antiderivative with zero constant term; gains one order.
template <FieldScalar S>
PowerSeries<S> series_integral(const PowerSeries<S>& a) {
  std::vector<S> c{detail::zero_like<S>(a.digits())};
  for (int k = 0; k < a.order(); ++k) c.push_back(a[k] / static_cast<long>(k + 1));
  return PowerSeries<S>(std::move(c), a.digits());
}

/// a^p for rational p on the principal branch, from the recurrence implied by
/// a (a^p)' = p a' a^p:
///   b_k = 1/(k a_0) * sum_{j=1..k} (p j - (k - j)) a_j b_{k-j}.
template <FieldScalar S>
PowerSeries<S> series_pow_rational(const PowerSeries<S>& a, const Rational& p) {
  const int n = a.order();
  const int d = a.digits();
  if (n == 0) return a;
  if (a[0].is_zero()) throw error(errc::non_unit_leading_term, "rational power of a series with zero constant term");

  S seed = detail::zero_like<S>(d);
  if constexpr (scalar_traits<S>::exact) {
    if (mp::denominator(p) == 1) {
      long k = mp::numerator(p).template convert_to<long>();
      S base = k >= 0 ? a[0] : S::from_int(1, d) / a[0];
      seed = S::from_int(1, d);
      for (long e = k >= 0 ? k : -k; e > 0; --e) seed = seed * base;
    } else if (detail::is_unit(a[0])) {
      seed = S::from_int(1, d);
    } else {
      throw error(errc::inexact_operation, "non-integer power of a non-unit leading term in exact mode");
    }
  } else {
    seed = pow(a[0], p);
  }

  const long pn = mp::numerator(p).template convert_to<long>();
  const long pd = mp::denominator(p).template convert_to<long>();
  std::vector<S> b;
  b.reserve(static_cast<std::size_t>(n));
  b.push_back(seed);
  for (int k = 1; k < n; ++k) {
    S acc = detail::zero_like<S>(d);
    for (int j = 1; j <= k; ++j) {
      if (a[j].is_zero()) continue;
      // (p j - k + j) * pd = pn j + (j - k) pd
      const long w = pn * j + static_cast<long>(j - k) * pd;
      if (w == 0) continue;
      acc += a[j] * b[static_cast<std::size_t>(k - j)] * w;
    }
    b.push_back(acc / (a[0] * (static_cast<long>(k) * pd)));
  }
  return PowerSeries<S>(std::move(b), d);
}

/// log a for a series with a_0 = 1, as the integral of a'/a.
template <FieldScalar S>
PowerSeries<S> series_log(const PowerSeries<S>& a) {
  if (a.order() == 0) return a;
  if (!detail::is_unit(a[0])) throw error(errc::non_unit_leading_term, "logarithm needs a series with constant term 1");
  if (a.order() == 1) return PowerSeries<S>::constant(detail::zero_like<S>(a.digits()), 1);
  return series_integral(series_div(series_derivative(a), a.truncate(a.order() - 1)));
}

/// log(a/b) on the branch with log 1 = 0; both constant terms must be 1.
template <FieldScalar S>
PowerSeries<S> series_log_ratio(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  detail::require_same_precision(a, b);
  if (a.order() > 0 && !detail::is_unit(a[0]))
    throw error(errc::non_unit_leading_term, "numerator of log ratio must start with 1");
  if (b.order() > 0 && !detail::is_unit(b[0]))
    throw error(errc::non_unit_leading_term, "denominator of log ratio must start with 1");
  return series_log(series_div(a, b));
}

namespace detail {

/// Second route for log(a/b): the Mercator series in u = a/b - 1. Quadratic in
/// series products, kept as an independent check of series_log_ratio.
template <FieldScalar S>
PowerSeries<S> log_ratio_mercator(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  PowerSeries<S> q = series_div(a, b);
  const int n = q.order();
  const int d = q.digits();
  std::vector<S> uc = q.coeffs();
  if (n > 0) uc[0] = uc[0] - S::from_int(1, d);
  PowerSeries<S> u(std::move(uc), d);
  std::vector<S> acc(static_cast<std::size_t>(n), zero_like<S>(d));
  PowerSeries<S> term = u;
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      S t = term[i] / static_cast<long>(k);
      acc[static_cast<std::size_t>(i)] = (k % 2 == 1) ? acc[static_cast<std::size_t>(i)] + t : acc[static_cast<std::size_t>(i)] - t;
    }
    term = series_mul(term, u);
  }
  return PowerSeries<S>(std::move(acc), d);
}

}  // namespace detail

/// Partial sum sum_k c_k z^k.
template <FieldScalar S>
S series_sum(const PowerSeries<S>& a, const S& z) {
  if (a.order() == 0) return detail::zero_like<S>(a.digits());
  S acc = a[a.order() - 1];
  for (int k = a.order() - 2; k >= 0; --k) acc = acc * z + a[k];
  return acc;
}

inline PowerSeries<Scalar> to_floating(const PowerSeries<ExactScalar>& a, int digits) {
  std::vector<Scalar> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(to_floating(x, digits));
  return PowerSeries<Scalar>(std::move(c), digits);
}

/// f, f^2, ..., f^k computed once and shared by the Hermite-Pade builders.
template <FieldScalar S>
class PowerTable {
 public:
  PowerTable(const PowerSeries<S>& f, int max_power) {
    powers_.push_back(PowerSeries<S>::constant(S::from_int(1, f.digits()), f.order()));
    for (int j = 1; j <= max_power; ++j) powers_.push_back(j == 1 ? f : series_mul(powers_.back(), f));
  }
  /// f^j, j = 0 gives the constant 1.
  const PowerSeries<S>& operator[](int j) const { return powers_[static_cast<std::size_t>(j)]; }
  int max_power() const { return static_cast<int>(powers_.size()) - 1; }

 private:
  std::vector<PowerSeries<S>> powers_;
};

}  // namespace hpade

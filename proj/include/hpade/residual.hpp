#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hpade/polynomial.hpp"
#include "hpade/power_series.hpp"
#include "hpade/scalar.hpp"

namespace hpade {

/// |re| + |im|, a cheap modulus bound within a factor sqrt(2).
inline Real abs1(const Scalar& z) { return abs(z.real()) + abs(z.imag()); }

/// Accumulates a residual series sum_i p_i s_i - sum_j P_j together with the
/// magnitude scale sum |p_i||s_i| of every coefficient, so that floating
/// residuals can be judged against their own rounding level.
template <FieldScalar S>
class Residual {
 public:
  Residual(int order, int digits)
      : order_(order), digits_(digits), r_(static_cast<std::size_t>(std::max(order, 0)), S::from_int(0, digits)) {
    if constexpr (!scalar_traits<S>::exact) {
      scale_.assign(r_.size(), make_real(0, digits));
      tol_ = rounding_tolerance(digits);
    }
  }

  int order() const { return order_; }
  const std::vector<S>& coeffs() const { return r_; }

  /// r += sign * p * s, truncated at the residual order.
  void add_product(const Polynomial<S>& p, const PowerSeries<S>& s, int sign = 1) {
    if (s.order() < order_) throw error(errc::insufficient_data, "series shorter than residual order");
    for (int i = 0; i <= p.degree() && i < order_; ++i) {
      const S& a = p.coeffs()[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      const S sa = sign < 0 ? -a : a;
      Real a1;
      if constexpr (!scalar_traits<S>::exact) a1 = abs1(a);
      for (int k = i; k < order_; ++k) {
        const S& b = s[k - i];
        if (b.is_zero()) continue;
        r_[static_cast<std::size_t>(k)] += sa * b;
        if constexpr (!scalar_traits<S>::exact) scale_[static_cast<std::size_t>(k)] += a1 * abs1(b);
      }
    }
  }

  /// r += sign * p.
  void add_polynomial(const Polynomial<S>& p, int sign = 1) {
    for (int i = 0; i <= p.degree() && i < order_; ++i) {
      const S& a = p.coeffs()[static_cast<std::size_t>(i)];
      r_[static_cast<std::size_t>(i)] += sign < 0 ? -a : a;
      if constexpr (!scalar_traits<S>::exact) scale_[static_cast<std::size_t>(i)] += abs1(a);
    }
  }

  bool vanishes(int k) const {
    const S& r = r_[static_cast<std::size_t>(k)];
    if constexpr (scalar_traits<S>::exact) {
      return r.is_zero();
    } else {
      if (r.is_zero()) return true;
      return abs1(r) <= tol_ * scale_[static_cast<std::size_t>(k)];
    }
  }

  /// Index of the first non-vanishing coefficient; the truncation order when
  /// every available coefficient vanishes (a lower bound for the true order).
  int vanishing_order() const {
    for (int k = 0; k < order_; ++k)
      if (!vanishes(k)) return k;
    return order_;
  }

 private:
  int order_;
  int digits_;
  std::vector<S> r_;
  std::vector<Real> scale_;
  Real tol_;
};

}  // namespace hpade

#pragma once

#include <string>
#include <vector>

#include "hpade/power_series.hpp"
#include "hpade/scalar.hpp"
#include "hpade/trig_polynomial.hpp"

namespace hpade {

/// Lindstedt-Poincare solution of nu^2 u'' + eps nu (u^2 - 1) u' + u = 0 with
/// u = sum u_k(x) eps^k, nu = sum nu_tilde_k eps^k, u'(0) = 0.
template <class T>
struct VdpExpansionT {
  int order = 0;
  std::vector<TrigPolynomial<T>> u;
  std::vector<T> nu_tilde;
  /// nu_j = nu_tilde_{2j}; nu[0] = 1.
  std::vector<T> nu;
  /// u_k(0), the coefficients of the amplitude A(eps). The last one is
  /// provisional: its cos x part is only fixed at order K + 1.
  std::vector<T> amplitude;
};

using VdpExpansion = VdpExpansionT<Rational>;

namespace detail {

template <class T>
VdpExpansionT<T> lindstedt(int K) {
  using TP = TrigPolynomial<T>;
  if (K < 0) throw error(errc::invalid_params, "expansion order must be >= 0, got " + std::to_string(K));
  VdpExpansionT<T> out;
  out.order = K;
  auto& u = out.u;
  auto& nt = out.nu_tilde;
  const TP cosx = TP::cos_term(1, T(1));

  u.push_back(TP::cos_term(1, T(2)));
  nt.push_back(T(1));
  std::vector<TP> du{u[0].derivative()}, d2u{du[0].derivative()};
  std::vector<TP> U2{u[0] * u[0]};
  std::vector<TP> W{U2[0] * du[0] - du[0]};
  std::vector<T> N2{T(1)};
  // Response of (u^2 - 1) u' to u_{k-1} += cos x.
  const TP L = ((U2[0] - TP::cos_term(0, T(1))) * cosx).derivative();
  const TP Fnu = d2u[0] * T(2);

  for (int k = 1; k <= K; ++k) {
    T n2k(0);
    for (int i = 1; i < k; ++i) n2k += nt[static_cast<std::size_t>(i)] * nt[static_cast<std::size_t>(k - i)];
    TP F = d2u[0] * n2k;
    for (int l = 1; l < k; ++l) F += d2u[static_cast<std::size_t>(l)] * N2[static_cast<std::size_t>(k - l)];
    for (int i = 0; i < k; ++i) F += W[static_cast<std::size_t>(k - 1 - i)] * nt[static_cast<std::size_t>(i)];

    // Secular terms: cos x and sin x parts of the forcing must vanish.
    T a(0), nu(0);
    if (k == 1) {
      nu = -F.cos_coeff(1) / Fnu.cos_coeff(1);
    } else {
      const TP Fa = L * nt[0] - cosx * N2[1];
      const T m11 = Fa.cos_coeff(1), m12 = Fnu.cos_coeff(1);
      const T m21 = Fa.sin_coeff(1), m22 = Fnu.sin_coeff(1);
      const T r1 = -F.cos_coeff(1), r2 = -F.sin_coeff(1);
      const T det = m11 * m22 - m12 * m21;
      a = (r1 * m22 - m12 * r2) / det;
      nu = (m11 * r2 - m21 * r1) / det;
      F += Fa * a;
    }
    F += Fnu * nu;

    // u_k'' + u_k = -F off the first harmonic; sin x part fixed by u_k'(0) = 0.
    TP uk;
    T slope(0);
    for (int j = 0; j < F.harmonics(); ++j) {
      if (j == 1) continue;
      const T den = T(j * j - 1);
      const T c = F.cos_coeff(j) / den, s = F.sin_coeff(j) / den;
      if (!c.is_zero()) uk.cos_at(j) = c;
      if (!s.is_zero()) {
        uk.sin_at(j) = s;
        slope += s * j;
      }
    }
    if (!slope.is_zero()) uk.sin_at(1) = -slope;
    uk.trim();

    if (k >= 2) {
      const auto p = static_cast<std::size_t>(k - 1);
      const TP delta = cosx * a;
      u[p] += delta;
      du[p] += delta.derivative();
      d2u[p] -= delta;
      U2[p] += u[0] * delta * T(2);
      W[p] += L * a;
    }
    nt.push_back(nu);
    N2.push_back(n2k + nu * 2);
    u.push_back(uk);
    du.push_back(uk.derivative());
    d2u.push_back(du.back().derivative());

    TP u2;
    for (int q = 0; 2 * q < k; ++q) u2 += u[static_cast<std::size_t>(q)] * u[static_cast<std::size_t>(k - q)] * T(2);
    if (k % 2 == 0) u2 += u[static_cast<std::size_t>(k / 2)] * u[static_cast<std::size_t>(k / 2)];
    U2.push_back(u2);
    TP w = du.back() * T(-1);
    for (int q = 0; q <= k; ++q) w += U2[static_cast<std::size_t>(q)] * du[static_cast<std::size_t>(k - q)];
    W.push_back(w);
  }

  for (int j = 0; 2 * j <= K; ++j) out.nu.push_back(nt[static_cast<std::size_t>(2 * j)]);
  for (const auto& uk : u) out.amplitude.push_back(uk.at_zero());
  return out;
}

}  // namespace detail

/// Exact expansion through order K in eps.
inline VdpExpansion vdp_expand(int K) { return detail::lindstedt<Rational>(K); }

/// Same recurrence in MPFR arithmetic; used for orders where exact rationals
/// grow too large to be practical.
inline VdpExpansionT<Real> vdp_expand_floating(int K, int digits) {
  require_digits(digits);
  PrecisionScope scope(digits);
  return detail::lindstedt<Real>(K);
}

/// Largest eps-order computed in exact arithmetic by vdp_nu_series.
inline constexpr int kVdpExactCeiling = 40;

/// 1 + nu_1 w + ... + nu_K w^K in w = eps^2. Exact rationals are rounded once;
/// past kVdpExactCeiling the recurrence runs in floating point with 40 guard
/// digits.
inline PowerSeries<Scalar> vdp_nu_series(int K, int digits) {
  require_digits(digits);
  if (K < 0) throw error(errc::invalid_params, "series order must be >= 0, got " + std::to_string(K));
  std::vector<Scalar> c;
  if (2 * K <= kVdpExactCeiling) {
    const auto e = vdp_expand(2 * K);
    for (const auto& q : e.nu) c.push_back(Scalar::from_rational(q, digits));
  } else {
    const auto e = vdp_expand_floating(2 * K, digits + 40);
    for (const auto& x : e.nu) c.push_back(Scalar(x, make_real(0, digits), digits));
  }
  return PowerSeries<Scalar>(std::move(c), digits);
}

}  // namespace hpade

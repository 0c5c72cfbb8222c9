#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hpade/polynomial.hpp"
#include "hpade/power_series.hpp"
#include "hpade/residual.hpp"
#include "hpade/scalar.hpp"

namespace hpade {

enum class ModelKind { six_root, sqrt_pair, log_pair, cube2021, cardano_2016_1, cardano_2016_2, zhukovsky_markov };

inline const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::six_root: return "six_root";
    case ModelKind::sqrt_pair: return "sqrt_pair";
    case ModelKind::log_pair: return "log_pair";
    case ModelKind::cube2021: return "cube2021";
    case ModelKind::cardano_2016_1: return "cardano_2016_1";
    case ModelKind::cardano_2016_2: return "cardano_2016_2";
    case ModelKind::zhukovsky_markov: return "zhukovsky_markov";
  }
  return "unknown";
}

inline ModelKind parse_model_kind(const std::string& s) {
  for (auto k : {ModelKind::six_root, ModelKind::sqrt_pair, ModelKind::log_pair, ModelKind::cube2021,
                 ModelKind::cardano_2016_1, ModelKind::cardano_2016_2, ModelKind::zhukovsky_markov})
    if (s == to_string(k)) return k;
  if (s == "six") return ModelKind::six_root;
  if (s == "sq") return ModelKind::sqrt_pair;
  if (s == "log") return ModelKind::log_pair;
  if (s == "cardano1") return ModelKind::cardano_2016_1;
  if (s == "cardano2") return ModelKind::cardano_2016_2;
  if (s == "zhukovsky") return ModelKind::zhukovsky_markov;
  throw error(errc::invalid_params, "unknown model kind '" + s + "'");
}

inline int param_count(ModelKind k) {
  switch (k) {
    case ModelKind::six_root: return 6;
    case ModelKind::sqrt_pair:
    case ModelKind::log_pair: return 4;
    case ModelKind::cube2021: return 1;
    case ModelKind::cardano_2016_1:
    case ModelKind::cardano_2016_2: return 0;
    case ModelKind::zhukovsky_markov: return 2;
  }
  return 0;
}

struct ModelSpec {
  ModelKind kind = ModelKind::cube2021;
  /// a_1..a_6, a_1..a_4, a, or (A, B) depending on the kind.
  std::vector<Scalar> params;
};

/// Fixed parameter sets for the kinds whose parameters the source leaves
/// open. All branch points sit in 0.4 <= |z| <= 2.5.
inline std::vector<Scalar> default_params(ModelKind k, int digits) {
  auto c = [digits](const char* re, const char* im) { return Scalar::parse(re, im, digits); };
  switch (k) {
    case ModelKind::six_root:
      return {c("0.8", "0.5"), c("0.8", "-0.5"), c("-0.9", "0.6"), c("-0.9", "-0.6"), c("0.1", "1.2"), c("0.1", "-1.2")};
    case ModelKind::sqrt_pair:
    case ModelKind::log_pair:
      return {c("0.9", "0.6"), c("-0.7", "0.8"), c("0.9", "-0.6"), c("-0.7", "-0.8")};
    case ModelKind::cube2021: {
      // (0.3 + i) sqrt(3)
      const Real s3 = sqrt(make_real(3, digits));
      return {Scalar(Real(make_real(3, digits) / 10 * s3), s3, digits)};
    }
    case ModelKind::cardano_2016_1:
    case ModelKind::cardano_2016_2: return {};
    case ModelKind::zhukovsky_markov: return {Scalar::from_int(2, digits), Scalar::from_int(3, digits)};
  }
  return {};
}

inline ModelSpec default_model(ModelKind k, int digits) { return ModelSpec{k, default_params(k, digits)}; }

namespace detail {

inline PowerSeries<Scalar> linear_series(const Scalar& c0, const Scalar& c1, int n) {
  std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar::zero(c0.digits()));
  if (n > 0) v[0] = c0;
  if (n > 1) v[1] = c1;
  return PowerSeries<Scalar>(std::move(v), c0.digits());
}

/// 1 - a z truncated at order n.
inline PowerSeries<Scalar> one_minus(const Scalar& a, int n) {
  return linear_series(Scalar::one(a.digits()), -a, n);
}

inline void check_zhukovsky(const Real& A, const Real& B) {
  if (!(A > 1 && B > A)) throw error(errc::invalid_params, "zhukovsky model needs 1 < A < B");
}

inline Polynomial<Scalar> int_poly(std::initializer_list<long> c, int digits) {
  std::vector<Scalar> v;
  for (long x : c) v.push_back(Scalar::from_int(x, digits));
  return Polynomial<Scalar>(std::move(v), digits);
}

/// Coefficient polynomials (p, q) of w^3 + p(z) w + q(z) = 0.
inline std::pair<Polynomial<Scalar>, Polynomial<Scalar>> cardano_cubic(int which, int digits) {
  if (which == 1) {
    // 3 (z^2 + 3z + 5), 2 (z^3 + 2z^2 + z + 1)
    return {int_poly({15, 9, 3}, digits), int_poly({2, 2, 4, 2}, digits)};
  }
  if (which == 2) {
    // -3 (z - 1)^2, 2 (z - 3)^3
    return {int_poly({-3, 6, -3}, digits), int_poly({-54, 54, -18, 2}, digits)};
  }
  throw error(errc::invalid_params, "Cardano model index must be 1 or 2");
}

/// w(0) from the Cardano formula with principal roots.
inline Scalar cardano_seed(int which, int digits) {
  const Rational third(1, 3);
  if (which == 1) {
    // P = 5, Q = 1: cbrt(-Q + sqrt(P^3 + Q^2)) - P / cbrt(...)
    const Scalar P = Scalar::from_int(5, digits), Q = Scalar::from_int(1, digits);
    const Scalar r = pow(-Q + sqrt(P * P * P + Q * Q), third);
    return r - P / r;
  }
  // P = (z-1)^2 = 1, Q = (z-3)^3 = -27: cbrt(-Q + sqrt(Q^2 - P^3)) + P / cbrt(...)
  const Scalar P = Scalar::from_int(1, digits), Q = Scalar::from_int(-27, digits);
  const Scalar r = pow(-Q + sqrt(Q * Q - P * P * P), third);
  return r + P / r;
}

}  // namespace detail

inline void validate(const ModelSpec& spec) {
  const int need = param_count(spec.kind);
  if (static_cast<int>(spec.params.size()) != need)
    throw error(errc::invalid_params, std::string(to_string(spec.kind)) + " takes " + std::to_string(need) +
                                          " parameters, got " + std::to_string(spec.params.size()));
  if (spec.kind == ModelKind::zhukovsky_markov) {
    if (!spec.params[0].is_real() || !spec.params[1].is_real())
      throw error(errc::invalid_params, "zhukovsky parameters must be real");
    detail::check_zhukovsky(spec.params[0].real(), spec.params[1].real());
  }
}

/// Residual w^3 + p w + q of a series against a Cardano cubic.
inline Residual<Scalar> cardano_residual(int which, const PowerSeries<Scalar>& w) {
  const auto [p, q] = detail::cardano_cubic(which, w.digits());
  Residual<Scalar> r(w.order(), w.digits());
  const auto w2 = series_mul(w, w);
  r.add_product(Polynomial<Scalar>::constant(Scalar::one(w.digits())), series_mul(w2, w));
  r.add_product(p, w);
  r.add_polynomial(q);
  return r;
}

/// Taylor coefficients of the Cardano branch by series Newton iteration on
/// the defining cubic, doubling the number of correct terms per step.
inline PowerSeries<Scalar> cardano_series(int which, int n, int digits) {
  require_digits(digits);
  const auto [p, q] = detail::cardano_cubic(which, digits);
  const Scalar w0 = detail::cardano_seed(which, digits);
  const Scalar f0 = w0 * w0 * w0 + p.coeff(0) * w0 + q.coeff(0);
  const Real scale = abs(w0) * abs(w0) * abs(w0) + abs(p.coeff(0)) * abs(w0) + abs(q.coeff(0));
  if (abs(f0) > rounding_tolerance(digits) * scale)
    throw error(errc::seed_mismatch, "Cardano seed does not satisfy the cubic at z = 0");
  if (n <= 0) return PowerSeries<Scalar>(digits);

  PowerSeries<Scalar> w = PowerSeries<Scalar>::constant(w0, 1);
  auto newton_step = [&](int m) {
    std::vector<Scalar> c = w.coeffs();
    c.resize(static_cast<std::size_t>(m), Scalar::zero(digits));
    w = PowerSeries<Scalar>(std::move(c), digits);
    const auto ps = PowerSeries<Scalar>::from_polynomial(p, m);
    const auto qs = PowerSeries<Scalar>::from_polynomial(q, m);
    const auto w2 = series_mul(w, w);
    const auto F = series_add(series_add(series_mul(w2, w), series_mul(ps, w)), qs);
    const auto dF = series_add(series_scale(w2, Scalar::from_int(3, digits)), ps);
    w = series_sub(w, series_div(F, dF));
  };
  int m = 1;
  while (m < n) {
    m = std::min(2 * m, n);
    newton_step(m);
  }
  newton_step(n);
  return w;
}

/// phi(zeta) = zeta + (zeta - 1)^{1/2} (zeta + 1)^{1/2}, the exterior
/// Joukowski inverse with phi ~ 2 zeta at infinity.
inline Scalar joukowski_inverse(const Scalar& zeta) {
  const int d = zeta.digits();
  return zeta + sqrt(zeta - Scalar::one(d)) * sqrt(zeta + Scalar::one(d));
}

/// True for points of [-1, 1] (to rounding level in the imaginary part).
inline bool on_unit_segment(const Scalar& zeta) {
  return abs(zeta.imag()) <= rounding_tolerance(zeta.digits()) && abs(zeta.real()) <= 1;
}

/// f_*(zeta) = [(A - 1/phi)(B - 1/phi)]^{-1/2} on the branch ~ 1/sqrt(AB) at
/// infinity. Both factors have positive real part off the cut, so principal
/// square roots of each give that branch.
inline Scalar zhukovsky_values(const Real& A, const Real& B, const Scalar& zeta) {
  detail::check_zhukovsky(A, B);
  if (on_unit_segment(zeta)) throw error(errc::on_branch_cut, "zeta lies on [-1, 1]");
  const int d = zeta.digits();
  const Scalar psi = Scalar::one(d) / joukowski_inverse(zeta);
  const Scalar a(A, make_real(0, d), d), b(B, make_real(0, d), d);
  return Scalar::one(d) / (sqrt(a - psi) * sqrt(b - psi));
}

/// Taylor coefficients of f(z) = f_*(1/z), using 1/phi(1/z) = z / (1 + (1 - z^2)^{1/2}).
inline PowerSeries<Scalar> zhukovsky_series(const Real& A, const Real& B, int n, int digits) {
  detail::check_zhukovsky(A, B);
  require_digits(digits);
  const Scalar one = Scalar::one(digits);
  std::vector<Scalar> sq(static_cast<std::size_t>(n), Scalar::zero(digits));
  if (n > 0) sq[0] = one;
  if (n > 2) sq[2] = -one;
  const auto root = series_pow_rational(PowerSeries<Scalar>(sq, digits), Rational(1, 2));
  const auto psi = series_div(detail::linear_series(Scalar::zero(digits), one, n), series_add(PowerSeries<Scalar>::constant(one, n), root));
  const Scalar a(Real(A, static_cast<unsigned>(digits)), make_real(0, digits), digits);
  const Scalar b(Real(B, static_cast<unsigned>(digits)), make_real(0, digits), digits);
  const auto fa = series_sub(PowerSeries<Scalar>::constant(a, n), psi);
  const auto fb = series_sub(PowerSeries<Scalar>::constant(b, n), psi);
  return series_pow_rational(series_mul(fa, fb), Rational(-1, 2));
}

/// First n Taylor coefficients of the model at z = 0.
inline PowerSeries<Scalar> model_series(const ModelSpec& spec, int n, int digits) {
  require_digits(digits);
  validate(spec);
  if (n < 0) throw error(errc::invalid_params, "negative truncation order");
  std::vector<Scalar> a;
  for (const auto& p : spec.params) a.push_back(p.digits() == digits ? p : Scalar(p.real(), p.imag(), digits));
  const Scalar one = Scalar::one(digits);

  switch (spec.kind) {
    case ModelKind::six_root: {
      auto prod = PowerSeries<Scalar>::constant(one, n);
      for (const auto& aj : a) prod = series_mul(prod, detail::one_minus(aj, n));
      return series_pow_rational(prod, Rational(1, 6));
    }
    case ModelKind::sqrt_pair: {
      const auto t1 = series_pow_rational(series_div(detail::one_minus(a[0], n), detail::one_minus(a[1], n)), Rational(1, 2));
      const auto t2 = series_pow_rational(series_div(detail::one_minus(a[2], n), detail::one_minus(a[3], n)), Rational(1, 2));
      return series_add(t1, t2);
    }
    case ModelKind::log_pair: {
      const auto l1 = series_log_ratio(detail::one_minus(a[0], n), detail::one_minus(a[1], n));
      const auto l2 = series_log_ratio(detail::one_minus(a[2], n), detail::one_minus(a[3], n));
      return series_add(l1, l2);
    }
    case ModelKind::cube2021: {
      std::vector<Scalar> c(static_cast<std::size_t>(n), Scalar::zero(digits));
      if (n > 0) c[0] = one;
      if (n > 2) c[2] = -one;
      const auto t1 = series_pow_rational(PowerSeries<Scalar>(c, digits), Rational(1, 3));
      const auto t2 = series_pow_rational(detail::one_minus(a[0], n), Rational(-2, 3));
      return series_mul(t1, t2);
    }
    case ModelKind::cardano_2016_1: return cardano_series(1, n, digits);
    case ModelKind::cardano_2016_2: return cardano_series(2, n, digits);
    case ModelKind::zhukovsky_markov: return zhukovsky_series(a[0].real(), a[1].real(), n, digits);
  }
  throw error(errc::invalid_params, "unhandled model kind");
}

/// Discriminant of the Cardano cubic, whose zeros are the branch points.
inline Polynomial<Scalar> cardano_discriminant(int which, int digits) {
  using detail::int_poly;
  if (which == 1) {
    const auto p = int_poly({5, 3, 1}, digits), q = int_poly({1, 1, 2, 1}, digits);
    return p * p * p + q * q;
  }
  if (which == 2) {
    const auto p = int_poly({-1, 1}, digits), q = int_poly({-3, 1}, digits);
    auto p3 = p * p * p, q3 = q * q * q;
    return q3 * q3 - p3 * p3;
  }
  throw error(errc::invalid_params, "Cardano model index must be 1 or 2");
}

/// Finite branch points of the model in the z-plane (Cardano kinds excluded:
/// use the discriminant).
inline std::vector<Scalar> model_branch_points(const ModelSpec& spec, int digits) {
  validate(spec);
  const Scalar one = Scalar::one(digits);
  std::vector<Scalar> out;
  switch (spec.kind) {
    case ModelKind::six_root:
    case ModelKind::sqrt_pair:
    case ModelKind::log_pair:
      for (const auto& p : spec.params)
        if (!p.is_zero()) out.push_back(one / Scalar(p.real(), p.imag(), digits));
      break;
    case ModelKind::cube2021:
      out = {one, -one, one / Scalar(spec.params[0].real(), spec.params[0].imag(), digits)};
      break;
    case ModelKind::zhukovsky_markov: {
      out = {one, -one};
      for (const auto& p : spec.params) {
        const Real x(p.real(), static_cast<unsigned>(digits));
        // a = (A + 1/A)/2 in the zeta-plane, reciprocal in z
        out.push_back(one / Scalar((x + 1 / x) / 2, make_real(0, digits), digits));
      }
      break;
    }
    default:
      break;
  }
  return out;
}

}  // namespace hpade

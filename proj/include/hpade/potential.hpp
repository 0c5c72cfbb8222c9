#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "hpade/hermite_pade.hpp"
#include "hpade/models.hpp"
#include "hpade/pade.hpp"

namespace hpade {

/// g(zeta) = log|zeta + (zeta^2 - 1)^{1/2}|, the Green function of
/// C \ [-1, 1] with pole at infinity.
inline Real green_segment(const Scalar& zeta) {
  if (on_unit_segment(zeta)) throw error(errc::on_set, "Green function evaluated on [-1, 1]");
  return log(abs(joukowski_inverse(zeta)));
}

/// Normalized counting measure of a point cloud, each point with weight 1/len.
struct EmpiricalMeasure {
  std::vector<std::complex<double>> points;
};

struct ArcsineReport {
  double distance = 1;
  /// Points within the clipping band that entered the CDF.
  int used = 0;
  /// Points farther than the band from [-1, 1].
  int excluded = 0;
};

inline constexpr double kClipBand = 0.1;

/// Distance from w to [-1, 1].
inline double segment_distance(std::complex<double> w) {
  const double x = std::clamp(w.real(), -1.0, 1.0);
  return std::abs(w - std::complex<double>(x, 0));
}

inline double arcsine_cdf(double x) {
  return 0.5 + std::asin(std::clamp(x, -1.0, 1.0)) / std::numbers::pi;
}

/// Kolmogorov distance between the real-part CDF of the points (clipped to
/// [-1, 1], points farther than kClipBand dropped) and the arcsine CDF.
inline ArcsineReport arcsine_distance(const EmpiricalMeasure& mu) {
  ArcsineReport r;
  std::vector<double> xs;
  for (const auto& w : mu.points) {
    if (segment_distance(w) > kClipBand) {
      ++r.excluded;
      continue;
    }
    xs.push_back(std::clamp(w.real(), -1.0, 1.0));
  }
  r.used = static_cast<int>(xs.size());
  if (xs.empty()) return r;
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double F = arcsine_cdf(xs[i]);
    // Left and right limits of the empirical CDF at xs[i].
    std::size_t lo = i;
    while (lo > 0 && xs[lo - 1] == xs[i]) --lo;
    std::size_t hi = i;
    while (hi + 1 < xs.size() && xs[hi + 1] == xs[i]) ++hi;
    d = std::max({d, std::abs(F - lo / n), std::abs((hi + 1) / n - F)});
  }
  r.distance = d;
  return r;
}

struct RateRow {
  /// n for Pade, m for Hermite-Pade.
  int order = 0;
  /// Number of series coefficients charged to the approximant.
  int budget = 0;
  Real error;
  /// error^{1/budget}
  double measured = 0;
  /// e^{-g(zeta)}
  double target = 0;
  double ratio = 0;
  bool trivial = false;
};

namespace detail {

inline RateRow finish_rate(int order, int budget, const Real& err, const Scalar& zeta) {
  RateRow row;
  row.order = order;
  row.budget = budget;
  row.error = err;
  row.measured = err.is_zero() ? 0.0 : exp(log(err) / budget).convert_to<double>();
  row.target = exp(-green_segment(zeta)).convert_to<double>();
  row.ratio = row.measured / row.target;
  return row;
}

inline Scalar reciprocal_point(const Scalar& zeta) {
  if (zeta.is_zero()) throw error(errc::point_at_origin, "zeta = 0 has no reciprocal");
  return Scalar::one(zeta.digits()) / zeta;
}

}  // namespace detail

/// |f_*(zeta) - [n/n](1/zeta)|^{1/(2n+1)} for the zhukovsky model against e^{-g}.
inline std::vector<RateRow> rate_probe_pade(const Real& A, const Real& B, const Scalar& zeta,
                                            const std::vector<int>& n_list) {
  const int d = zeta.digits();
  const Scalar truth = zhukovsky_values(A, B, zeta);
  const Scalar z = detail::reciprocal_point(zeta);
  int top = 0;
  for (int n : n_list) {
    if (n < 0) throw error(errc::invalid_params, "negative order in rate probe");
    top = std::max(top, n);
  }
  const auto f = zhukovsky_series(A, B, 2 * top + 1, d);
  std::vector<RateRow> out;
  for (int n : n_list) {
    const int N = 2 * n + 1;
    const auto pa = pade_diagonal(f.truncate(N), n);
    auto row = detail::finish_rate(n, N, abs(truth - pade_evaluate(pa, z)), zeta);
    row.trivial = n == 0;
    out.push_back(row);
  }
  return out;
}

/// Same for the type II pair: |f_*(zeta) - (P_{2m,1}/P_{2m,0})(1/zeta)|^{1/(3m+2)}.
/// m = 0 is reported as the constant approximant c_0 and flagged trivial.
inline std::vector<RateRow> rate_probe_hp(const Real& A, const Real& B, const Scalar& zeta,
                                          const std::vector<int>& m_list) {
  const int d = zeta.digits();
  const Scalar truth = zhukovsky_values(A, B, zeta);
  const Scalar z = detail::reciprocal_point(zeta);
  int top = 0;
  for (int m : m_list) {
    if (m < 0) throw error(errc::invalid_params, "negative order in rate probe");
    top = std::max(top, m);
  }
  const auto f = zhukovsky_series(A, B, 3 * top + 2, d);
  std::vector<RateRow> out;
  for (int m : m_list) {
    const int N = 3 * m + 2;
    Scalar approx = f[0];
    if (m > 0) {
      const auto t = hp_type2(f.truncate(N), m, 2);
      const Scalar q = t.P[0](z);
      if (detail::evaluates_to_zero(t.P[0], z))
        throw error(errc::pole_at_evaluation_point, "P_{2m,0} vanishes at the evaluation point");
      approx = t.P[1](z) / q;
    }
    auto row = detail::finish_rate(m, N, abs(truth - approx), zeta);
    row.trivial = m == 0;
    out.push_back(row);
  }
  return out;
}

}  // namespace hpade

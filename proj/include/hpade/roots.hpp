#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hpade/polynomial.hpp"
#include "hpade/scalar.hpp"

namespace hpade {

struct RootSet {
  std::vector<Scalar> roots;
  /// |p(root)| for each root, in the same order.
  std::vector<Real> residuals;
  /// Aberth sweeps performed.
  int iterations = 0;
  bool converged = true;
};

inline constexpr int kDefaultMaxSweeps = 200;

namespace detail {

/// p(z) and p'(z) in one Horner pass.
inline void horner2(const Polynomial<Scalar>& p, const Scalar& z, Scalar& v, Scalar& dv) {
  const auto& c = p.coeffs();
  v = c.back();
  dv = Scalar::zero(z.digits());
  for (int k = p.degree() - 1; k >= 0; --k) {
    dv = dv * z + v;
    v = v * z + c[static_cast<std::size_t>(k)];
  }
}

}  // namespace detail

/// All zeros of p by Aberth-Ehrlich simultaneous iteration followed by a
/// guarded Newton polish. Exact zero roots are split off first by trailing
/// coefficient deflation. A root stops moving once its correction is below
/// 10^-(digits-10) max(1, |z|) or |p(z)| reaches the Horner rounding level.
/// After `max_sweeps` sweeps the current approximations are returned with
/// `converged` cleared.
inline RootSet find_roots(const Polynomial<Scalar>& p, int max_sweeps = kDefaultMaxSweeps) {
  if (p.degree() < 1) throw error(errc::invalid_params, "root finding needs degree >= 1, got " + std::to_string(p.degree()));
  const int digits = p.digits();
  const Real tol = rounding_tolerance(digits);
  RootSet out;

  int zeros = 0;
  while (p.coeffs()[static_cast<std::size_t>(zeros)].is_zero()) ++zeros;
  Polynomial<Scalar> q(std::vector<Scalar>(p.coeffs().begin() + zeros, p.coeffs().end()), digits);
  const int d = q.degree();

  std::vector<Scalar> z;
  if (d == 1) {
    z.push_back(-q.coeffs()[0] / q.coeffs()[1]);
  } else if (d > 1) {
    const Real radius = pow(abs(q.coeffs().front()) / abs(q.leading()), make_real(1, digits) / d) * (1 + make_real(1, digits) / d);
    const Real offset = make_real(26, digits) / 100;
    const Real two_pi = 2 * real_pi(digits);
    for (int k = 0; k < d; ++k) z.push_back(polar(radius, two_pi * k / d + offset, digits));

    std::vector<Real> ac;
    for (const auto& c : q.coeffs()) ac.push_back(abs(c));
    auto scale_at = [&ac](const Real& r) {
      Real acc = ac.back();
      for (int k = static_cast<int>(ac.size()) - 2; k >= 0; --k) acc = acc * r + ac[static_cast<std::size_t>(k)];
      return acc;
    };
    std::vector<bool> frozen(static_cast<std::size_t>(d), false);
    int active = d;
    std::vector<Scalar> step(static_cast<std::size_t>(d), Scalar::zero(digits));
    Scalar v, dv;
    while (active > 0 && out.iterations < max_sweeps) {
      ++out.iterations;
      for (int i = 0; i < d; ++i) {
        if (frozen[static_cast<std::size_t>(i)]) continue;
        const Scalar& zi = z[static_cast<std::size_t>(i)];
        detail::horner2(q, zi, v, dv);
        if (v.is_zero() || abs(v) <= tol * scale_at(abs(zi))) {
          step[static_cast<std::size_t>(i)] = Scalar::zero(digits);
          frozen[static_cast<std::size_t>(i)] = true;
          --active;
          continue;
        }
        Scalar sum = Scalar::zero(digits);
        for (int j = 0; j < d; ++j) {
          if (j == i) continue;
          const Scalar diff = zi - z[static_cast<std::size_t>(j)];
          if (!diff.is_zero()) sum += Scalar::one(digits) / diff;
        }
        Scalar w;
        if (dv.is_zero()) {
          // Stationary point: nudge off it.
          w = Scalar(tol * max(make_real(1, digits), abs(zi)), tol, digits);
        } else {
          const Scalar newton = v / dv;
          const Scalar den = Scalar::one(digits) - newton * sum;
          w = den.is_zero() ? newton : newton / den;
        }
        step[static_cast<std::size_t>(i)] = w;
      }
      // Jacobi update: every correction above used the previous sweep's values.
      for (int i = 0; i < d; ++i) {
        if (frozen[static_cast<std::size_t>(i)] && step[static_cast<std::size_t>(i)].is_zero()) continue;
        Scalar& zi = z[static_cast<std::size_t>(i)];
        const Scalar w = step[static_cast<std::size_t>(i)];
        zi -= w;
        step[static_cast<std::size_t>(i)] = Scalar::zero(digits);
        if (!frozen[static_cast<std::size_t>(i)] && abs(w) <= tol * max(make_real(1, digits), abs(zi))) {
          frozen[static_cast<std::size_t>(i)] = true;
          --active;
        }
      }
    }
    out.converged = active == 0;

    for (auto& zi : z) {
      Scalar fz = q(zi);
      for (int it = 0; it < 3 && !fz.is_zero(); ++it) {
        Scalar f, df;
        detail::horner2(q, zi, f, df);
        if (df.is_zero()) break;
        const Scalar cand = zi - f / df;
        const Scalar fc = q(cand);
        if (abs(fc) >= abs(fz)) break;
        zi = cand;
        fz = fc;
      }
    }
  }

  for (int k = 0; k < zeros; ++k) out.roots.push_back(Scalar::zero(digits));
  for (auto& zi : z) out.roots.push_back(std::move(zi));
  for (const auto& r : out.roots) out.residuals.push_back(abs(p(r)));
  return out;
}

/// leading * prod (z - r).
inline Polynomial<Scalar> reconstruct(const RootSet& rs, const Scalar& leading) {
  return from_roots(rs.roots, leading);
}

}  // namespace hpade

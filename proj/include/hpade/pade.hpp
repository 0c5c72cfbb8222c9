#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hpade/linalg.hpp"
#include "hpade/polynomial.hpp"
#include "hpade/power_series.hpp"
#include "hpade/residual.hpp"

namespace hpade {

template <FieldScalar S>
struct PadePair {
  int n = 0;
  Polynomial<S> Q;
  Polynomial<S> P;
  /// Vanishing order of Q f - P over all supplied coefficients. Equal to the
  /// number of supplied coefficients when the residual vanishes throughout.
  int residual_order = 0;
  /// Nullspace of the defining system was one-dimensional.
  bool normal = true;
};

/// [n/n] of f. The linear solve sees exactly c_0..c_{2n}; further
/// coefficients of f, if any, only sharpen the reported residual order.
/// Q is normalized so that its highest nonzero coefficient is 1.
template <FieldScalar S>
PadePair<S> pade_diagonal(const PowerSeries<S>& f, int n) {
  if (n < 0) throw error(errc::invalid_params, "negative Pade order");
  if (f.order() < 2 * n + 1)
    throw error(errc::insufficient_data, "[" + std::to_string(n) + "/" + std::to_string(n) + "] needs " +
                                             std::to_string(2 * n + 1) + " coefficients, got " +
                                             std::to_string(f.order()));
  const int d = f.digits();
  const PowerSeries<S> c = f.truncate(2 * n + 1);

  Matrix<S> a;
  a.reserve(static_cast<std::size_t>(n));
  for (int k = n + 1; k <= 2 * n; ++k) {
    std::vector<S> row;
    row.reserve(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) row.push_back(c[k - j]);
    a.push_back(std::move(row));
  }
  NullVector<S> nv = null_vector(std::move(a), n + 1, d);

  PadePair<S> out;
  out.n = n;
  out.normal = nv.normal();
  Polynomial<S> q(std::move(nv.x), d);
  if (q.is_zero()) throw error(errc::all_zero_solution, "Pade denominator vanished");
  out.Q = monic(q);

  std::vector<S> p;
  p.reserve(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    S acc = S::from_int(0, d);
    for (int j = 0; j <= k && j <= out.Q.degree(); ++j) acc += out.Q.coeffs()[static_cast<std::size_t>(j)] * c[k - j];
    p.push_back(acc);
  }
  out.P = Polynomial<S>(std::move(p), d);

  Residual<S> r(f.order(), d);
  r.add_product(out.Q, f);
  r.add_polynomial(out.P, -1);
  out.residual_order = r.vanishing_order();
  return out;
}

namespace detail {

/// True when a floating evaluation is indistinguishable from zero at the
/// working precision.
template <FieldScalar S>
bool evaluates_to_zero(const Polynomial<S>& p, const S& z) {
  const S v = p(z);
  if constexpr (scalar_traits<S>::exact) {
    return v.is_zero();
  } else {
    return abs(v) <= rounding_tolerance(z.digits()) * abs_eval(p, abs(z));
  }
}

}  // namespace detail

template <FieldScalar S>
S pade_evaluate(const PadePair<S>& pa, const S& z) {
  if (detail::evaluates_to_zero(pa.Q, z))
    throw error(errc::pole_at_evaluation_point, "denominator vanishes at the evaluation point");
  return pa.P(z) / pa.Q(z);
}

}  // namespace hpade

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "hpade/linalg.hpp"
#include "hpade/polynomial.hpp"
#include "hpade/power_series.hpp"
#include "hpade/residual.hpp"

namespace hpade {

/// Degree bounds, one per member of the tuple [1, f, f^2] or [1, f, f^2, f^3].
using MultiIndex = std::vector<int>;

inline std::string to_string(const MultiIndex& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s;
}

/// Defining order sum(m_j + 1) - 1 of a type I system.
inline int type1_order(const MultiIndex& m) {
  return std::accumulate(m.begin(), m.end(), 0) + static_cast<int>(m.size()) - 1;
}

template <FieldScalar S>
struct TypeOneSystem {
  MultiIndex m;
  std::vector<Polynomial<S>> Q;
  /// Vanishing order of sum Q_j f^j over all supplied coefficients.
  int residual_order = 0;
  /// Order the system was solved for.
  int required_order = 0;
  bool normal = true;
};

template <FieldScalar S>
struct TypeTwoSystem {
  int n = 0;
  int tuple_size = 2;
  /// P[0] is the common denominator, P[j] the numerator for f^j.
  std::vector<Polynomial<S>> P;
  /// Vanishing order of P_0 f^j - P_j, j = 1..tuple_size.
  std::vector<int> residual_orders;
  int required_order = 0;
  bool normal = true;
};

template <FieldScalar S>
struct KomlovPair {
  Polynomial<S> H0;
  Polynomial<S> H1;
  bool normal = true;
};

namespace detail {

inline void check_multi_index(const MultiIndex& m) {
  if (m.size() != 3 && m.size() != 4)
    throw error(errc::dimension_mismatch, "multi-index must have 3 or 4 entries, got " + std::to_string(m.size()));
  for (int v : m)
    if (v < 0) throw error(errc::invalid_params, "negative degree in multi-index " + to_string(m));
}

template <FieldScalar S>
TypeOneSystem<S> solve_type1(const PowerTable<S>& pw, const MultiIndex& m) {
  const int k = static_cast<int>(m.size());
  const int sigma = type1_order(m);
  const int d = pw[0].digits();
  const int n_total = pw[1].order();

  // Unknowns: coefficients of Q_1..Q_{k-1}; Q_0 follows from the leading block.
  std::vector<int> offset(static_cast<std::size_t>(k), 0);
  int cols = 0;
  for (int j = 1; j < k; ++j) {
    offset[static_cast<std::size_t>(j)] = cols;
    cols += m[static_cast<std::size_t>(j)] + 1;
  }
  Matrix<S> a;
  for (int t = m[0] + 1; t < sigma; ++t) {
    std::vector<S> row(static_cast<std::size_t>(cols), S::from_int(0, d));
    for (int j = 1; j < k; ++j)
      for (int l = 0; l <= m[static_cast<std::size_t>(j)] && l <= t; ++l)
        row[static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + l)] = pw[j][t - l];
    a.push_back(std::move(row));
  }
  NullVector<S> nv = null_vector(std::move(a), cols, d);

  TypeOneSystem<S> out;
  out.m = m;
  out.required_order = sigma;
  out.normal = nv.normal();
  out.Q.assign(static_cast<std::size_t>(k), Polynomial<S>(d));
  for (int j = 1; j < k; ++j) {
    auto first = nv.x.begin() + offset[static_cast<std::size_t>(j)];
    out.Q[static_cast<std::size_t>(j)] =
        Polynomial<S>(std::vector<S>(first, first + m[static_cast<std::size_t>(j)] + 1), d);
  }
  std::vector<S> q0;
  for (int t = 0; t <= m[0]; ++t) {
    S acc = S::from_int(0, d);
    for (int j = 1; j < k; ++j) {
      const auto& qj = out.Q[static_cast<std::size_t>(j)];
      for (int l = 0; l <= qj.degree() && l <= t; ++l) acc += qj.coeffs()[static_cast<std::size_t>(l)] * pw[j][t - l];
    }
    q0.push_back(-acc);
  }
  out.Q[0] = Polynomial<S>(std::move(q0), d);

  int last = k - 1;
  while (last >= 0 && out.Q[static_cast<std::size_t>(last)].is_zero()) --last;
  if (last < 0) throw error(errc::all_zero_solution, "type I system for index " + to_string(m));
  const S lead = out.Q[static_cast<std::size_t>(last)].leading();
  for (auto& q : out.Q) q = q / lead;

  Residual<S> r(n_total, d);
  for (int j = 0; j < k; ++j) r.add_product(out.Q[static_cast<std::size_t>(j)], pw[j]);
  out.residual_order = r.vanishing_order();
  return out;
}

template <FieldScalar S>
Polynomial<S> det2(const Polynomial<S>& a, const Polynomial<S>& b, const Polynomial<S>& c, const Polynomial<S>& e) {
  return a * e - b * c;
}

}  // namespace detail

/// Type I Hermite-Pade polynomials: deg Q_j <= m_j and
/// sum_j Q_j f^j = O(z^{|m| + len(m) - 1}). The solve consumes exactly that
/// many coefficients. Normalized so that the last nonzero Q_j is monic.
template <FieldScalar S>
TypeOneSystem<S> hp_type1(const PowerSeries<S>& f, const MultiIndex& m) {
  detail::check_multi_index(m);
  const int sigma = type1_order(m);
  if (f.order() < sigma)
    throw error(errc::insufficient_data, "index " + to_string(m) + " needs " + std::to_string(sigma) +
                                             " coefficients, got " + std::to_string(f.order()));
  PowerTable<S> pw(f, static_cast<int>(m.size()) - 1);
  return detail::solve_type1(pw, m);
}

/// Type II Hermite-Pade polynomials for [f, f^2] (tuple_size 2) or
/// [f, f^2, f^3] (tuple_size 3): deg P_j <= tuple_size * n and
/// P_0 f^j - P_j = O(z^{(tuple_size + 1) n + 1}).
template <FieldScalar S>
TypeTwoSystem<S> hp_type2(const PowerSeries<S>& f, int n, int tuple_size) {
  if (tuple_size != 2 && tuple_size != 3)
    throw error(errc::dimension_mismatch, "type II tuple size must be 2 or 3, got " + std::to_string(tuple_size));
  if (n < 0) throw error(errc::invalid_params, "negative type II order");
  const int deg = tuple_size * n;
  const int sigma = (tuple_size + 1) * n + 1;
  if (f.order() < sigma)
    throw error(errc::insufficient_data, "type II order " + std::to_string(n) + " needs " + std::to_string(sigma) +
                                             " coefficients, got " + std::to_string(f.order()));
  const int d = f.digits();
  PowerTable<S> pw(f, tuple_size);

  Matrix<S> a;
  for (int j = 1; j <= tuple_size; ++j)
    for (int t = deg + 1; t < sigma; ++t) {
      std::vector<S> row;
      row.reserve(static_cast<std::size_t>(deg + 1));
      for (int l = 0; l <= deg; ++l) row.push_back(pw[j][t - l]);
      a.push_back(std::move(row));
    }
  NullVector<S> nv = null_vector(std::move(a), deg + 1, d);

  TypeTwoSystem<S> out;
  out.n = n;
  out.tuple_size = tuple_size;
  out.required_order = sigma;
  out.normal = nv.normal();
  Polynomial<S> p0(std::move(nv.x), d);
  if (p0.is_zero()) throw error(errc::all_zero_solution, "type II denominator vanished");
  p0 = monic(p0);
  out.P.push_back(p0);
  for (int j = 1; j <= tuple_size; ++j) {
    std::vector<S> pj;
    for (int t = 0; t <= deg; ++t) {
      S acc = S::from_int(0, d);
      for (int l = 0; l <= t && l <= p0.degree(); ++l) acc += p0.coeffs()[static_cast<std::size_t>(l)] * pw[j][t - l];
      pj.push_back(acc);
    }
    out.P.emplace_back(std::move(pj), d);
    Residual<S> r(f.order(), d);
    r.add_product(p0, pw[j]);
    r.add_polynomial(out.P.back(), -1);
    out.residual_orders.push_back(r.vanishing_order());
  }
  return out;
}

/// D = Q_1^2 - 4 Q_0 Q_2 of a system for [1, f, f^2].
template <FieldScalar S>
Polynomial<S> discriminant(const TypeOneSystem<S>& t) {
  if (t.Q.size() != 3)
    throw error(errc::dimension_mismatch, "discriminant needs a system for [1, f, f^2], got " +
                                              std::to_string(t.Q.size()) + " polynomials");
  const int d = t.Q[0].digits();
  return t.Q[1] * t.Q[1] - t.Q[0] * t.Q[2] * S::from_int(4, d);
}

/// H_0 = Q_{1,2} Q_{2,3} - Q_{1,3} Q_{2,2}, H_1 = Q_{1,1} Q_{2,3} - Q_{1,3} Q_{2,1}
/// for two systems of [1, f, f^2, f^3]; intended for the indices
/// (n, n, n-1, n-1) and (n, n-1, n, n-1).
template <FieldScalar S>
KomlovPair<S> komlov_pair(const TypeOneSystem<S>& t1, const TypeOneSystem<S>& t2) {
  if (t1.Q.size() != 4 || t2.Q.size() != 4)
    throw error(errc::dimension_mismatch, "Komlov polynomials need two systems for [1, f, f^2, f^3]");
  KomlovPair<S> out;
  out.H0 = detail::det2(t1.Q[2], t1.Q[3], t2.Q[2], t2.Q[3]);
  out.H1 = detail::det2(t1.Q[1], t1.Q[3], t2.Q[1], t2.Q[3]);
  out.normal = t1.normal && t2.normal;
  return out;
}

/// Builds both reduced-index systems from f and returns the Komlov pair.
template <FieldScalar S>
KomlovPair<S> komlov_from_series(const PowerSeries<S>& f, int n) {
  if (n < 1) throw error(errc::invalid_params, "Komlov polynomials need n >= 1");
  return komlov_pair(hp_type1(f, MultiIndex{n, n, n - 1, n - 1}), hp_type1(f, MultiIndex{n, n - 1, n, n - 1}));
}

template <FieldScalar S>
struct DetIdentityReport {
  int n = 0;
  int tuple_size = 2;
  Polynomial<S> direct;
  Polynomial<S> determinantal;
  /// max |a_k - b_k| / max |a_k| after both sides are made monic.
  Real deviation;
};

namespace detail {

template <FieldScalar S>
Real monic_deviation(const Polynomial<S>& a, const Polynomial<S>& b, int digits) {
  const int dg = std::max(a.degree(), b.degree());
  Polynomial<S> ma = a, mb = b;
  if constexpr (!scalar_traits<S>::exact) {
    // Cancelled leading terms leave rounding debris that monic() would amplify.
    ma = chop(a, rank_tolerance(digits));
    mb = chop(b, rank_tolerance(digits));
  }
  ma = monic(ma);
  mb = monic(mb);
  Real num = make_real(0, std::max(digits, kMinDigits));
  Real den = make_real(0, std::max(digits, kMinDigits));
  for (int k = 0; k <= dg; ++k) {
    Scalar x, y;
    if constexpr (scalar_traits<S>::exact) {
      x = to_floating(ma.coeff(k), kDefaultDigits);
      y = to_floating(mb.coeff(k), kDefaultDigits);
    } else {
      x = ma.coeff(k);
      y = mb.coeff(k);
    }
    num = max(num, abs(x - y));
    den = max(den, abs(x));
  }
  if (den.is_zero()) return num;
  return num / den;
}

}  // namespace detail

/// Compares P_{2n,0} of the pair [f, f^2] with the 2x2 determinant of the
/// type I systems for (n, n, n-1) and (n, n-1, n). Throws NonGenericCase when
/// any of the three solves was not normal.
template <FieldScalar S>
DetIdentityReport<S> det_identity_check(const PowerSeries<S>& f, int n) {
  if (n < 1) throw error(errc::invalid_params, "determinant identity needs n >= 1");
  const auto t1 = hp_type1(f, MultiIndex{n, n, n - 1});
  const auto t2 = hp_type1(f, MultiIndex{n, n - 1, n});
  const auto t2s = hp_type2(f, n, 2);
  if (!t1.normal || !t2.normal || !t2s.normal)
    throw error(errc::non_generic_case, "a defining system at n = " + std::to_string(n) + " is not normal");
  DetIdentityReport<S> out;
  out.n = n;
  out.tuple_size = 2;
  out.direct = t2s.P[0];
  out.determinantal = detail::det2(t1.Q[1], t1.Q[2], t2.Q[1], t2.Q[2]);
  if (out.determinantal.is_zero())
    throw error(errc::non_generic_case, "determinant of type I polynomials vanishes identically");
  out.deviation = detail::monic_deviation(out.direct, out.determinantal, f.digits());
  return out;
}

/// The 3x3 analogue for [f, f^2, f^3] with the indices (n,n,n-1,n-1),
/// (n,n-1,n,n-1), (n,n-1,n-1,n).
template <FieldScalar S>
DetIdentityReport<S> det_identity_check_triple(const PowerSeries<S>& f, int n) {
  if (n < 1) throw error(errc::invalid_params, "determinant identity needs n >= 1");
  const auto t1 = hp_type1(f, MultiIndex{n, n, n - 1, n - 1});
  const auto t2 = hp_type1(f, MultiIndex{n, n - 1, n, n - 1});
  const auto t3 = hp_type1(f, MultiIndex{n, n - 1, n - 1, n});
  const auto t2s = hp_type2(f, n, 3);
  if (!t1.normal || !t2.normal || !t3.normal || !t2s.normal)
    throw error(errc::non_generic_case, "a defining system at n = " + std::to_string(n) + " is not normal");
  const auto& a = t1.Q;
  const auto& b = t2.Q;
  const auto& c = t3.Q;
  DetIdentityReport<S> out;
  out.n = n;
  out.tuple_size = 3;
  out.direct = t2s.P[0];
  out.determinantal = a[1] * detail::det2(b[2], b[3], c[2], c[3]) - a[2] * detail::det2(b[1], b[3], c[1], c[3]) +
                      a[3] * detail::det2(b[1], b[2], c[1], c[2]);
  if (out.determinantal.is_zero())
    throw error(errc::non_generic_case, "determinant of type I polynomials vanishes identically");
  out.deviation = detail::monic_deviation(out.direct, out.determinantal, f.digits());
  return out;
}

}  // namespace hpade

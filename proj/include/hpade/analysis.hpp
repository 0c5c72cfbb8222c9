#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "hpade/hermite_pade.hpp"
#include "hpade/pade.hpp"
#include "hpade/roots.hpp"

namespace hpade {

enum class PointTag { zero, pole, hp2_zero, hp1_zero, disc_zero, komlov_zero };
enum class Plane { z, zeta };

inline const char* to_string(PointTag t) {
  switch (t) {
    case PointTag::zero: return "zero";
    case PointTag::pole: return "pole";
    case PointTag::hp2_zero: return "hp2_zero";
    case PointTag::hp1_zero: return "hp1_zero";
    case PointTag::disc_zero: return "disc_zero";
    case PointTag::komlov_zero: return "komlov_zero";
  }
  return "zero";
}

inline PointTag parse_point_tag(const std::string& s) {
  for (auto t : {PointTag::zero, PointTag::pole, PointTag::hp2_zero, PointTag::hp1_zero, PointTag::disc_zero,
                 PointTag::komlov_zero})
    if (s == to_string(t)) return t;
  throw error(errc::parse_error, "unknown point tag '" + s + "'");
}

inline const char* to_string(Plane p) { return p == Plane::z ? "z" : "zeta"; }

inline Plane parse_plane(const std::string& s) {
  if (s == "z") return Plane::z;
  if (s == "zeta") return Plane::zeta;
  throw error(errc::parse_error, "unknown plane '" + s + "'");
}

struct CloudPoint {
  Scalar w;
  PointTag tag = PointTag::zero;
};

struct PointCloud {
  std::vector<CloudPoint> points;
  std::string source;
  int order = 0;
  Plane plane = Plane::z;

  void add(const std::vector<Scalar>& ws, PointTag tag) {
    for (const auto& w : ws) points.push_back({w, tag});
  }
};

/// z -> 1/z for every point; the plane flag flips.
inline PointCloud invert_plane(const PointCloud& cloud) {
  PointCloud out = cloud;
  out.plane = cloud.plane == Plane::z ? Plane::zeta : Plane::z;
  for (auto& p : out.points) {
    if (p.w.is_zero()) throw error(errc::point_at_origin, "cannot invert a point at the origin");
    p.w = Scalar::one(p.w.digits()) / p.w;
  }
  return out;
}

struct StableZero {
  Scalar location;
  int stabilized_digits = 0;
  /// Orders of the two root sets compared; zero when the caller did not say.
  int prev_order = 0;
  int curr_order = 0;
};

struct StableZeroReport {
  std::vector<StableZero> candidates;
  /// Matched pairs that missed the digit threshold.
  std::vector<StableZero> unstable;
};

namespace detail {

inline int digit_cap(int digits) { return digits - 10; }

inline int digits_from_rel(const Real& rel, int digits) {
  if (rel.is_zero()) return digit_cap(digits);
  const int k = static_cast<int>(floor(-log10(rel)).convert_to<long>());
  return std::clamp(k, 0, digit_cap(digits));
}

}  // namespace detail

/// Greedy nearest-neighbour matching of two zero sets. A matched pair is a
/// candidate when |z_prev - z_curr| < 10^-digits_required max(1, |z_curr|);
/// the reported location is z_curr.
inline StableZeroReport stable_zeros(const RootSet& d_prev, const RootSet& d_curr, int digits_required,
                                     int prev_order = 0, int curr_order = 0) {
  StableZeroReport out;
  if (d_prev.roots.empty() || d_curr.roots.empty()) return out;
  const int digits = d_curr.roots.front().digits();
  struct Pair {
    Real rel;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t j = 0; j < d_curr.roots.size(); ++j) {
    const Real scale = max(make_real(1, digits), abs(d_curr.roots[j]));
    for (std::size_t i = 0; i < d_prev.roots.size(); ++i)
      pairs.push_back({abs(d_prev.roots[i] - d_curr.roots[j]) / scale, i, j});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.rel < b.rel; });
  std::vector<bool> used_prev(d_prev.roots.size(), false), used_curr(d_curr.roots.size(), false);
  const Real threshold = ten_pow_neg(digits_required, digits);
  for (const auto& p : pairs) {
    if (used_prev[p.i] || used_curr[p.j]) continue;
    used_prev[p.i] = used_curr[p.j] = true;
    StableZero s{d_curr.roots[p.j], detail::digits_from_rel(p.rel, digits), prev_order, curr_order};
    (p.rel < threshold ? out.candidates : out.unstable).push_back(s);
  }
  return out;
}

struct BudgetPlan {
  int N = 0;
  int n = -1, m = -1, ell = -1;
  bool pade = false, hp2 = false, hp3 = false;
};

/// N = 2n + 1 = 3m + 2 = 4 ell + 3; each construction is flagged admissible
/// when its divisibility holds.
inline BudgetPlan budget_plan(int N) {
  if (N < 5) throw error(errc::invalid_params, "budget must be at least 5, got " + std::to_string(N));
  BudgetPlan b;
  b.N = N;
  if ((N - 1) % 2 == 0) {
    b.n = (N - 1) / 2;
    b.pade = true;
  }
  if ((N - 2) % 3 == 0) {
    b.m = (N - 2) / 3;
    b.hp2 = true;
  }
  if ((N - 3) % 4 == 0) {
    b.ell = (N - 3) / 4;
    b.hp3 = true;
  }
  return b;
}

struct Cluster {
  Scalar center;
  int count = 0;
  /// Largest distance between two members.
  double diameter = 0;
};

inline constexpr double kClusterRadius = 0.02;

/// Single-linkage grouping: points closer than `radius` share a cluster.
inline std::vector<Cluster> cluster_points(const std::vector<Scalar>& pts, double radius = kClusterRadius) {
  const std::size_t n = pts.size();
  std::vector<std::complex<double>> c;
  for (const auto& p : pts) c.push_back(p.to_complex());
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(c[i] - c[j]) < radius) parent[find(i)] = find(j);
  std::vector<Cluster> out;
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  for (const auto& g : groups) {
    Cluster cl;
    const int d = pts[g.front()].digits();
    Scalar sum = Scalar::zero(d);
    for (std::size_t i : g) sum += pts[i];
    cl.center = sum / Scalar(static_cast<long>(g.size()), d);
    cl.count = static_cast<int>(g.size());
    for (std::size_t i : g)
      for (std::size_t j : g) cl.diameter = std::max(cl.diameter, std::abs(c[i] - c[j]));
    out.push_back(cl);
  }
  return out;
}

inline bool in_unit_square(const Scalar& w) {
  const auto c = w.to_complex();
  return std::abs(c.real()) <= 1 && std::abs(c.imag()) <= 1;
}

inline bool in_closed_unit_disk(const Scalar& w) { return abs(w) <= 1; }

struct KatzOptions {
  /// Relative distance below which candidates of the two functions coincide.
  double tol = 1e-8;
  /// Digits two consecutive discriminants must share.
  int digits_required = 8;
  double cluster_radius = kClusterRadius;
};

/// Output of the two-step workflow for one function.
struct KatzSide {
  PadePair<Scalar> pade;
  std::vector<Scalar> pade_zeros, pade_poles;
  std::vector<Cluster> clusters;
  std::vector<Scalar> hp2_zeros;
  RootSet disc_prev, disc_curr;
  StableZeroReport stable;
  /// Stable candidates in the closed unit disk.
  std::vector<StableZero> katz;
  /// Stable candidates outside it.
  std::vector<StableZero> outside;
};

struct SharedPoint {
  Scalar a, b;
  int digits = 0;
};

struct Disagreement {
  Scalar point;
  /// 'A' or 'B': which function reported it.
  char side = 'A';
  /// Distance to the nearest Katz candidate of the other function.
  double nearest = 0;
};

struct KatzReport {
  BudgetPlan plan;
  KatzSide a, b;
  std::vector<SharedPoint> shared;
  std::vector<Disagreement> disagreements;
};

namespace detail {

inline std::vector<Scalar> roots_or_empty(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) return {};
  return find_roots(p).roots;
}

inline KatzSide katz_side(const PowerSeries<Scalar>& f, const BudgetPlan& plan, const KatzOptions& opt) {
  KatzSide s;
  const int n = plan.n, m = plan.m;
  s.pade = pade_diagonal(f.truncate(2 * n + 1), n);
  s.pade_zeros = roots_or_empty(s.pade.P);
  s.pade_poles = roots_or_empty(s.pade.Q);
  std::vector<Scalar> square;
  for (const auto* v : {&s.pade_zeros, &s.pade_poles})
    for (const auto& w : *v)
      if (in_unit_square(w)) square.push_back(w);
  s.clusters = cluster_points(square, opt.cluster_radius);

  s.hp2_zeros = roots_or_empty(hp_type2(f.truncate(3 * m + 1), m, 2).P[0]);
  const auto dp = discriminant(hp_type1(f.truncate(3 * (m - 1) + 2), MultiIndex{m - 1, m - 1, m - 1}));
  const auto dc = discriminant(hp_type1(f.truncate(3 * m + 2), MultiIndex{m, m, m}));
  if (dp.degree() >= 1) s.disc_prev = find_roots(dp);
  if (dc.degree() >= 1) s.disc_curr = find_roots(dc);
  s.stable = stable_zeros(s.disc_prev, s.disc_curr, opt.digits_required, m - 1, m);
  for (const auto& c : s.stable.candidates) (in_closed_unit_disk(c.location) ? s.katz : s.outside).push_back(c);
  return s;
}

inline double nearest_distance(const Scalar& w, const std::vector<StableZero>& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : set) best = std::min(best, abs(w - s.location).convert_to<double>());
  return best;
}

}  // namespace detail

/// Two-step resonance search on two series with a common budget
/// N = 2n + 1 = 3m + 2. Step 1 builds [n/n] zero and pole clouds and clusters
/// them inside the unit square; step 2 tracks discriminant zeros from D_{m-1}
/// to D_m and intersects the stable ones of both functions.
inline KatzReport katz_workflow(const PowerSeries<Scalar>& fA, const PowerSeries<Scalar>& fB, int N,
                                const KatzOptions& opt = {}) {
  if (N < 5 || N % 2 == 0 || N % 3 != 2)
    throw error(errc::inadmissible_budget, "budget " + std::to_string(N) + " is not of the form 2n+1 = 3m+2");
  KatzReport r;
  r.plan = budget_plan(N);
  if (r.plan.m < 2) throw error(errc::inadmissible_budget, "budget too small for two discriminant orders");
  if (fA.order() < N || fB.order() < N)
    throw error(errc::insufficient_data, "katz workflow needs " + std::to_string(N) + " coefficients of each series");
  r.a = detail::katz_side(fA, r.plan, opt);
  r.b = detail::katz_side(fB, r.plan, opt);

  std::vector<bool> used_b(r.b.katz.size(), false);
  for (const auto& ca : r.a.katz) {
    const int digits = ca.location.digits();
    const Real scale = max(make_real(1, digits), abs(ca.location));
    long best = -1;
    Real best_rel;
    for (std::size_t j = 0; j < r.b.katz.size(); ++j) {
      if (used_b[j]) continue;
      const Real rel = abs(ca.location - r.b.katz[j].location) / scale;
      if (best < 0 || rel < best_rel) {
        best = static_cast<long>(j);
        best_rel = rel;
      }
    }
    if (best >= 0 && best_rel <= opt.tol) {
      const auto& cb = r.b.katz[static_cast<std::size_t>(best)];
      used_b[static_cast<std::size_t>(best)] = true;
      r.shared.push_back({ca.location, cb.location, std::min(ca.stabilized_digits, cb.stabilized_digits)});
    } else {
      r.disagreements.push_back({ca.location, 'A', detail::nearest_distance(ca.location, r.b.katz)});
    }
  }
  for (std::size_t j = 0; j < r.b.katz.size(); ++j)
    if (!used_b[j])
      r.disagreements.push_back({r.b.katz[j].location, 'B', detail::nearest_distance(r.b.katz[j].location, r.a.katz)});
  return r;
}

}  // namespace hpade

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hpade/hpade.hpp"

using namespace hpade;

namespace {

constexpr int kD = 120;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double dist(const Scalar& a, const Scalar& b) { return abs(a - b).convert_to<double>(); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Scalar rat(const char* re, const char* im = "0") {
  return Scalar::from_parts(parse_rational(re), parse_rational(im), kD);
}

// Largest coefficient of sum_j Q_j f^j below `order`, relative to the
// largest coefficient of any single term. Plain series products, no reuse of
// the solver's tables.
double type1_defect(const TypeOneSystem<Scalar>& t, const PowerSeries<Scalar>& f, int order) {
  auto acc = PowerSeries<Scalar>::constant(Scalar::zero(kD), order);
  auto fj = PowerSeries<Scalar>::constant(Scalar::one(kD), order);
  Real scale = make_real(0, kD), worst = make_real(0, kD);
  for (const auto& q : t.Q) {
    auto term = series_mul(q, fj);
    acc = series_add(acc, term);
    for (const auto& c : term.coeffs()) scale = max(scale, abs(c));
    fj = series_mul(fj, f.truncate(order));
  }
  for (const auto& c : acc.coeffs()) worst = max(worst, abs(c));
  return scale.is_zero() ? 0.0 : (worst / scale).convert_to<double>();
}

double type2_defect(const TypeTwoSystem<Scalar>& t, const PowerSeries<Scalar>& f, int order) {
  auto fj = f.truncate(order);
  double worst = 0;
  for (int j = 1; j <= t.tuple_size; ++j) {
    auto lhs = series_mul(t.P[0], fj);
    auto r = series_sub(lhs, PowerSeries<Scalar>::from_polynomial(t.P[static_cast<std::size_t>(j)], order));
    Real scale = make_real(0, kD);
    for (const auto& c : lhs.coeffs()) scale = max(scale, abs(c));
    if (scale.is_zero()) continue;
    for (const auto& c : r.coeffs()) worst = std::max(worst, (abs(c) / scale).convert_to<double>());
    fj = series_mul(fj, f.truncate(order));
  }
  return worst;
}

double pade_defect(const PadePair<Scalar>& pa, const PowerSeries<Scalar>& f, int order) {
  auto lhs = series_mul(pa.Q, f.truncate(order));
  auto r = series_sub(lhs, PowerSeries<Scalar>::from_polynomial(pa.P, order));
  Real scale = make_real(0, kD), worst = make_real(0, kD);
  for (const auto& c : lhs.coeffs()) scale = max(scale, abs(c));
  for (const auto& c : r.coeffs()) worst = max(worst, abs(c));
  return scale.is_zero() ? 0.0 : (worst / scale).convert_to<double>();
}

Outcome c1_vdp_coefficients() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = vdp_expand(10);
  const double secs = seconds_since(t0);
  const char* want[] = {"-1/16", "17/3072", "35/884736", "-678899/5096079360", "28160413/2293235712000"};
  int bad = 0;
  for (int k = 1; k <= 5; ++k)
    if (e.nu[static_cast<std::size_t>(k)] != parse_rational(want[k - 1])) ++bad;
  return {bad == 0 && secs < 60, std::to_string(5 - bad) + "/5 exact, " + fmt("%.2f s", secs)};
}

struct OrderTally {
  int checks = 0, failures = 0;
  double worst = 0;
  std::string first;
};

OrderTally residual_orders(const std::vector<ModelKind>& kinds) {
  // Relative defect allowed below the claimed order.
  const double tol = 1e-90;
  OrderTally out;
  auto& [checks, failures, worst, first] = out;
  for (auto kind : kinds) {
    const auto spec = default_model(kind, kD);
    const auto f = model_series(spec, 4 * 20 + 2, kD);
    for (int n : {5, 10, 20}) {
      auto record = [&](const char* what, int got, int need, double defect) {
        ++checks;
        worst = std::max(worst, defect);
        if (got < need || defect > tol) {
          ++failures;
          if (first.empty())
            first = std::string(to_string(kind)) + " n=" + std::to_string(n) + " " + what + " order " +
                    std::to_string(got) + " defect " + fmt("%.1e", defect);
        }
      };
      const auto pa = pade_diagonal(f.truncate(2 * n + 1), n);
      record("pade", pa.residual_order, 2 * n + 1, pade_defect(pa, f, 2 * n + 1));
      const auto t1 = hp_type1(f.truncate(3 * n + 2), MultiIndex{n, n, n});
      record("type1", t1.residual_order, 3 * n + 2, type1_defect(t1, f, 3 * n + 2));
      const auto t2 = hp_type2(f.truncate(3 * n + 1), n, 2);
      record("type2 pair", *std::min_element(t2.residual_orders.begin(), t2.residual_orders.end()), 3 * n + 1,
             type2_defect(t2, f, 3 * n + 1));
      const auto t3 = hp_type2(f.truncate(4 * n + 1), n, 3);
      record("type2 triple", *std::min_element(t3.residual_orders.begin(), t3.residual_orders.end()), 4 * n + 1,
             type2_defect(t3, f, 4 * n + 1));
    }
  }
  return out;
}

// The Markov example is not one of the model functions; its systems lose
// normality at 120 digits from conditioning alone, so it is reported only.
Outcome c2_residual_orders() {
  const auto t = residual_orders({ModelKind::six_root, ModelKind::sqrt_pair, ModelKind::log_pair, ModelKind::cube2021,
                                  ModelKind::cardano_2016_1, ModelKind::cardano_2016_2});
  std::string d = std::to_string(t.checks - t.failures) + "/" + std::to_string(t.checks) + " checks, worst defect " +
                  fmt("%.1e", t.worst);
  if (!t.first.empty()) d += ", first failure: " + t.first;
  const auto z = residual_orders({ModelKind::zhukovsky_markov});
  d += "; zhukovsky (not scored) " + std::to_string(z.checks - z.failures) + "/" + std::to_string(z.checks);
  return {t.failures == 0, d};
}

Outcome c3_det_identity() {
  int ok = 0, permitted = 0, bad = 0;
  double worst = 0;
  for (auto kind : {ModelKind::cube2021, ModelKind::cardano_2016_1, ModelKind::cardano_2016_2}) {
    const auto f = model_series(default_model(kind, kD), 3 * 10 + 2, kD);
    for (int n : {3, 6, 10}) {
      const auto g = f.truncate(3 * n + 1);
      try {
        const auto r = det_identity_check(g, n);
        const double dev = r.deviation.convert_to<double>();
        worst = std::max(worst, dev);
        dev <= 1e-60 ? ++ok : ++bad;
      } catch (const error& e) {
        if (e.code() != errc::non_generic_case) throw;
        const bool flagged = !hp_type1(g, MultiIndex{n, n, n - 1}).normal || !hp_type1(g, MultiIndex{n, n - 1, n}).normal ||
                             !hp_type2(g, n, 2).normal;
        flagged ? ++permitted : ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(ok) + " agree, " + std::to_string(permitted) + " non-generic, worst deviation " +
                        fmt("%.1e", worst)};
}

Outcome c4_stahl_clustering() {
  const auto f = zhukovsky_series(make_real(2, kD), make_real(3, kD), 121, kD);
  const auto pa = pade_diagonal(f, 60);
  EmpiricalMeasure mu;
  int far = 0;
  for (const auto& r : find_roots(pa.Q).roots) {
    const auto zeta = (Scalar::one(kD) / r).to_complex();
    mu.points.push_back(zeta);
    if (segment_distance(zeta) > 0.05) ++far;
  }
  const auto rep = arcsine_distance(mu);
  return {far <= 4 && rep.distance <= 0.12,
          std::to_string(far) + " of " + std::to_string(mu.points.size()) + " poles farther than 0.05, arcsine distance " +
              fmt("%.4f", rep.distance)};
}

Outcome c5_rate() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = rate_probe_pade(make_real(2, kD), make_real(3, kD), Scalar(make_real(0, kD), make_real(2, kD), kD), {40, 50, 60});
  const double secs = seconds_since(t0);
  bool pass = secs < 600;
  std::string d;
  for (const auto& r : rows) {
    pass = pass && std::abs(r.ratio - 1) <= 0.1;
    d += "n=" + std::to_string(r.order) + " ratio " + fmt("%.4f", r.ratio) + ", ";
  }
  return {pass, d + fmt("%.1f s", secs)};
}

Outcome c6_hp_advantage() {
  const Real A = make_real(2, kD), B = make_real(3, kD);
  int wins = 0, total = 0;
  double worst = 0;
  for (const Scalar& zeta : {rat("0", "2"), rat("2"), rat("-3/2", "1/2")}) {
    const auto p = rate_probe_pade(A, B, zeta, {17, 32, 47});
    const auto h = rate_probe_hp(A, B, zeta, {11, 21, 31});
    for (std::size_t i = 0; i < p.size(); ++i) {
      ++total;
      if (p[i].budget == h[i].budget && h[i].error < p[i].error) ++wins;
      worst = std::max(worst, (h[i].error / p[i].error).convert_to<double>());
    }
  }
  return {wins == total, std::to_string(wins) + "/" + std::to_string(total) + " cases, largest hp/pade error ratio " + fmt("%.2e", worst)};
}

Outcome c7_branch_marking() {
  const auto spec = default_model(ModelKind::sqrt_pair, kD);
  const auto f = model_series(spec, 3 * 25 + 2, kD);
  const auto bps = model_branch_points(spec, kD);
  std::vector<std::vector<double>> dists(bps.size());
  for (int m : {15, 20, 25}) {
    const auto rs = find_roots(discriminant(hp_type1(f.truncate(3 * m + 2), MultiIndex{m, m, m})));
    for (std::size_t j = 0; j < bps.size(); ++j) {
      double best = 1e300;
      for (const auto& r : rs.roots) best = std::min(best, dist(r, bps[j]));
      dists[j].push_back(best);
    }
  }
  bool pass = !bps.empty();
  double final_worst = 0;
  for (const auto& d : dists) {
    pass = pass && d[0] > d[1] && d[1] > d[2] && d[2] <= 1e-3;
    final_worst = std::max(final_worst, d[2]);
  }
  return {pass, std::to_string(bps.size()) + " branch points, largest final distance " + fmt("%.1e", final_worst)};
}

Outcome c8_root_round_trip() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0;
  int unclosed = 0, unconverged = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const bool real_coeffs = trial % 2 == 0;
    std::vector<Scalar> c;
    for (int k = 0; k <= 100; ++k) {
      const Real re(u(rng), static_cast<unsigned>(kD));
      const Real im = real_coeffs ? make_real(0, kD) : Real(u(rng), static_cast<unsigned>(kD));
      c.emplace_back(re, im, kD);
    }
    if (c.back().is_zero()) c.back() = Scalar::one(kD);
    const Polynomial<Scalar> p(c, kD);
    const auto rs = find_roots(p);
    if (!rs.converged) ++unconverged;
    const auto q = reconstruct(rs, p.leading());
    Real num = make_real(0, kD), den = make_real(0, kD);
    for (int k = 0; k <= 100; ++k) {
      num = max(num, abs(q.coeff(k) - p.coeff(k)));
      den = max(den, abs(p.coeff(k)));
    }
    worst = std::max(worst, (num / den).convert_to<double>());
    if (real_coeffs) {
      for (const auto& r : rs.roots) {
        double best = 1e300;
        for (const auto& s : rs.roots) best = std::min(best, dist(s, conj(r)));
        if (best > 1e-60 * std::max(1.0, abs(r).convert_to<double>())) ++unclosed;
      }
    }
  }
  return {worst <= 1e-60 && unclosed == 0 && unconverged == 0,
          "max relative coefficient error " + fmt("%.1e", worst) + ", " + std::to_string(unclosed) + " roots without conjugate, " +
              std::to_string(unconverged) + " unconverged"};
}

Outcome c9_katz() {
  const auto plan = budget_plan(287);
  const bool plan_ok = plan.n == 143 && plan.m == 95 && plan.ell == 71;
  const auto fx = fixtures::katz_fixture(59, kD);
  const auto r = katz_workflow(fx.fA, fx.fB, 59);
  auto near_pair = [](const Scalar& w, const Scalar& target, double tol) {
    return std::min(dist(w, target), dist(w, conj(target))) < tol;
  };
  bool shared_ok = r.shared.size() == 2 && r.plan.m == 19;
  for (const auto& s : r.shared) shared_ok = shared_ok && near_pair(s.a, fx.shared, 1e-8) && s.digits >= 8;
  int a_hits = 0, b_hits = 0, other = 0;
  for (const auto& d : r.disagreements) {
    if (d.side == 'A' && near_pair(d.point, fx.a_only, 1e-6)) ++a_hits;
    else if (d.side == 'B' && near_pair(d.point, fx.b_only, 1e-6)) ++b_hits;
    else ++other;
  }
  const bool dis_ok = a_hits == 2 && b_hits == 2 && other == 0;
  return {plan_ok && shared_ok && dis_ok,
          "budget_plan(287) = (" + std::to_string(plan.n) + ", " + std::to_string(plan.m) + ", " + std::to_string(plan.ell) +
              "), shared " + std::to_string(r.shared.size()) + ", disagreements " + std::to_string(a_hits) + "A+" +
              std::to_string(b_hits) + "B+" + std::to_string(other) + " other"};
}

Outcome c10_vdp_singularity() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto plan = budget_plan(65);
  const auto f = vdp_nu_series(64, kD);
  if (f.order() != 65) return {false, "series has " + std::to_string(f.order()) + " coefficients"};
  const auto pa = pade_diagonal(f, plan.n);
  const auto poles = find_roots(pa.Q).roots;
  const auto t1 = hp_type1(f.truncate(3 * plan.m + 2), MultiIndex{plan.m, plan.m, plan.m});
  const auto t2 = hp_type2(f.truncate(3 * plan.m + 1), plan.m, 2);
  const auto dz = find_roots(discriminant(t1)).roots;
  const auto hz = find_roots(t2.P[0]).roots;

  // Nearest non-real pole and its conjugate partner.
  const Scalar* p = nullptr;
  for (const auto& z : poles)
    if (abs(z.imag()) > abs(z) / 1000 && (!p || abs(z) < abs(*p))) p = &z;
  if (!p) return {false, "no non-real Pade pole"};
  auto nearest = [](const std::vector<Scalar>& set, const Scalar& w) {
    double best = 1e300;
    for (const auto& s : set) best = std::min(best, dist(s, w));
    return best;
  };
  const double pabs = abs(*p).convert_to<double>();
  const bool pole_pair = nearest(poles, conj(*p)) <= 1e-2 * pabs;
  const Scalar* d = nullptr;
  for (const auto& z : dz)
    if (!d || dist(z, *p) < dist(*d, *p)) d = &z;
  const double rel = dist(*d, *p) / pabs;
  const double dabs = abs(*d).convert_to<double>();
  const bool d_pair = abs(d->imag()) > abs(*d) / 1000 && nearest(dz, conj(*d)) <= 1e-6 * dabs;
  std::ostringstream s;
  s << "pole " << p->to_complex() << ", D zero " << d->to_complex() << ", relative distance " << fmt("%.1e", rel)
    << ", nearest type II zero at relative distance " << fmt("%.1e", nearest(hz, *p) / pabs)
    << (pole_pair ? "" : ", pole has no conjugate") << (d_pair ? "" : ", D zero has no conjugate") << ", "
    << fmt("%.1f s", seconds_since(t0));
  return {pole_pair && d_pair && rel <= 1e-2, s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"vdp coefficients nu_1..nu_5 exact", c1_vdp_coefficients},
      {"residual orders on the model functions, n = 5, 10, 20", c2_residual_orders},
      {"determinant identity within 1e-60", c3_det_identity},
      {"zhukovsky poles cluster on [-1, 1]", c4_stahl_clustering},
      {"pade rate at 2i within 10%", c5_rate},
      {"type II beats pade at matched budgets", c6_hp_advantage},
      {"discriminant zeros approach sq branch points", c7_branch_marking},
      {"root finder round trip", c8_root_round_trip},
      {"katz workflow on synthetic fixture", c9_katz},
      {"vdp nearest singularity from pade and discriminant", c10_vdp_singularity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu: %s  %s  [%s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include <cmath>

#include "test_util.hpp"

using namespace hpade;
using namespace hpade::testing;

namespace {

// Generalized binomial coefficients of (1 - a z)^p, multiplied out by hand.
std::vector<Scalar> binomial_series(const Scalar& a, const Rational& p, int n) {
  std::vector<Scalar> c;
  Scalar term = sc(1);
  const Scalar pp = Scalar::from_rational(p, kDigits);
  for (int k = 0; k < n; ++k) {
    c.push_back(term);
    term = term * (pp - sc(k)) / sc(k + 1) * (-a);
  }
  return c;
}

std::vector<Scalar> cauchy(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out(a.size(), sc(0));
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) out[k] += a[j] * b[k - j];
  return out;
}

Scalar sum_series(const PowerSeries<Scalar>& f, const Scalar& z) {
  Scalar acc = sc(0), zk = sc(1);
  for (const auto& c : f.coeffs()) {
    acc += c * zk;
    zk = zk * z;
  }
  return acc;
}

}  // namespace

TEST(Models, ParseNames) {
  EXPECT_EQ(parse_model_kind("six_root"), ModelKind::six_root);
  EXPECT_EQ(parse_model_kind("sq"), ModelKind::sqrt_pair);
  EXPECT_EQ(parse_model_kind("zhukovsky"), ModelKind::zhukovsky_markov);
  EXPECT_THROW(parse_model_kind("nope"), error);
  EXPECT_EQ(param_count(ModelKind::six_root), 6);
  EXPECT_EQ(param_count(ModelKind::cardano_2016_1), 0);
}

TEST(Models, Cube2021LeadingCoefficient) {
  auto f = model_series(default_model(ModelKind::cube2021, kDigits), 10, kDigits);
  EXPECT_EQ(f[0], sc(1));
  // (1 - z^2)^{1/3} (1 - a z)^{-2/3}: c1 = 2a/3
  EXPECT_CLOSE(f[1], sc(2) * default_params(ModelKind::cube2021, kDigits)[0] / sc(3), -110);
}

TEST(Models, SqrtPairWithZeroParameters) {
  ModelSpec spec{ModelKind::sqrt_pair, {sc(0), sc(0), sc(0), sc(0)}};
  auto f = model_series(spec, 6, kDigits);
  EXPECT_EQ(f[0], sc(2));
  for (int k = 1; k < 6; ++k) EXPECT_TRUE(f[k].is_zero());
}

TEST(Models, SixRootAgainstBinomialProduct) {
  const auto spec = default_model(ModelKind::six_root, kDigits);
  const int n = 25;
  std::vector<Scalar> acc(n, sc(0));
  acc[0] = sc(1);
  for (const auto& a : spec.params) acc = cauchy(acc, binomial_series(a, Rational(1, 6), n));
  auto f = model_series(spec, n, kDigits);
  for (int k = 0; k < n; ++k) EXPECT_CLOSE(f[k], acc[static_cast<std::size_t>(k)], -105) << k;
}

TEST(Models, SqrtPairAgainstBinomialProduct) {
  const auto spec = default_model(ModelKind::sqrt_pair, kDigits);
  const int n = 20;
  auto t1 = cauchy(binomial_series(spec.params[0], Rational(1, 2), n), binomial_series(spec.params[1], Rational(-1, 2), n));
  auto t2 = cauchy(binomial_series(spec.params[2], Rational(1, 2), n), binomial_series(spec.params[3], Rational(-1, 2), n));
  auto f = model_series(spec, n, kDigits);
  for (int k = 0; k < n; ++k) EXPECT_CLOSE(f[k], t1[static_cast<std::size_t>(k)] + t2[static_cast<std::size_t>(k)], -105) << k;
}

TEST(Models, LogPairCoefficients) {
  // log((1 - a z)/(1 - b z)) = sum (b^k - a^k) z^k / k
  const auto spec = default_model(ModelKind::log_pair, kDigits);
  auto f = model_series(spec, 15, kDigits);
  EXPECT_TRUE(f[0].is_zero());
  for (int k = 1; k < 15; ++k) {
    Scalar want = sc(0);
    for (int j = 0; j < 4; j += 2) {
      Scalar ak = sc(1), bk = sc(1);
      for (int i = 0; i < k; ++i) {
        ak = ak * spec.params[static_cast<std::size_t>(j)];
        bk = bk * spec.params[static_cast<std::size_t>(j + 1)];
      }
      want += (bk - ak) / sc(k);
    }
    EXPECT_CLOSE(f[k], want, -105) << k;
  }
}

TEST(Models, CardanoSeriesSatisfyCubics) {
  for (int which : {1, 2}) {
    auto w = cardano_series(which, 40, kDigits);
    auto r = cardano_residual(which, w);
    EXPECT_EQ(r.vanishing_order(), 40) << which;
  }
  EXPECT_NEAR(detail::cardano_seed(1, kDigits).to_complex().real(), -0.1332, 1e-3);
  EXPECT_NEAR(detail::cardano_seed(2, kDigits).to_complex().real(), 4.04, 1e-2);
  auto w1 = cardano_series(1, 1, kDigits);
  EXPECT_CLOSE(w1[0], detail::cardano_seed(1, kDigits), -105);
}

TEST(Models, CardanoSeedSolvesConstantTerm) {
  for (int which : {1, 2}) {
    auto [p, q] = detail::cardano_cubic(which, kDigits);
    const Scalar w = detail::cardano_seed(which, kDigits);
    // w^3 + p(0) w + q(0) = 0
    EXPECT_LT(abs(w * w * w + p.coeff(0) * w + q.coeff(0)), ten_pow_neg(100, kDigits)) << which;
  }
}

TEST(Models, CardanoDiscriminantInventory) {
  auto d1 = find_roots(cardano_discriminant(1, kDigits));
  EXPECT_EQ(d1.roots.size(), 6u);
  for (const auto& r : d1.roots) {
    EXPECT_GT(std::abs(r.to_complex().imag()), 1e-6);
    double best = 1e9;
    for (const auto& s : d1.roots) best = std::min(best, dist(s, conj(r)));
    EXPECT_LT(best, 1e-60);
    for (const auto& s : d1.roots)
      if (&s != &r) EXPECT_GT(dist(s, r), 1e-6);
  }
  auto d2 = find_roots(cardano_discriminant(2, kDigits));
  EXPECT_EQ(d2.roots.size(), 5u);
  double best = 1e9;
  for (const auto& r : d2.roots) best = std::min(best, dist(r, sc(2)));
  EXPECT_LT(best, 1e-30);
}

TEST(Models, ZhukovskyValues) {
  const Real A = make_real(2, kDigits), B = make_real(3, kDigits);
  // Large zeta: 1/phi -> 0 so the value tends to (AB)^{-1/2}.
  const Scalar limit = sc(1) / sqrt(sc(6));
  EXPECT_LT(dist(zhukovsky_values(A, B, sq("1000000000000")), limit), 1e-10);
  EXPECT_CLOSE(zhukovsky_series(A, B, 3, kDigits)[0], limit, -110);
  // z = 1/zeta, so zeta = 10 matches the series summed at 0.1.
  auto f = zhukovsky_series(A, B, 200, kDigits);
  EXPECT_CLOSE(zhukovsky_values(A, B, sc(10)), sum_series(f, sq("1/10")), -100);
  for (const Scalar& zeta : {sq("3/2", "1/2"), sq("-2", "1/3"), sq("1/5", "7/5")}) {
    EXPECT_CLOSE(zhukovsky_values(A, B, conj(zeta)), conj(zhukovsky_values(A, B, zeta)), -100);
    EXPECT_CLOSE(zhukovsky_values(A, B, zeta), sum_series(f, sc(1) / zeta), -30);
  }
  try {
    zhukovsky_values(A, B, sq("1/2"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::on_branch_cut);
  }
  EXPECT_THROW(zhukovsky_series(A, A, 5, kDigits), error);
}

TEST(Models, ZhukovskyDerivativesMatchDifferences) {
  const Real A = make_real(2, kDigits), B = make_real(3, kDigits);
  auto f = zhukovsky_series(A, B, 5, kDigits);
  // c1 and c2 from symmetric differences of the closed form in z = 1/zeta.
  const Scalar h = sq("1/1000000000000000000000000");
  auto g = [&](const Scalar& z) { return zhukovsky_values(A, B, sc(1) / z); };
  const Scalar gp = g(h), gm = g(-h);
  const Scalar c1 = (gp - gm) / (h + h);
  const Scalar c2 = (gp + gm - f[0] - f[0]) / (h * h * sc(2));
  EXPECT_CLOSE(c1, f[1], -40);
  EXPECT_CLOSE(c2, f[2], -40);
}

TEST(Models, ValidateRejectsBadParams) {
  EXPECT_THROW(validate(ModelSpec{ModelKind::six_root, {sc(1)}}), error);
  EXPECT_THROW(validate(ModelSpec{ModelKind::zhukovsky_markov, {sc(2), sc(2)}}), error);
  EXPECT_THROW(validate(ModelSpec{ModelKind::zhukovsky_markov, {sq("1/2"), sc(3)}}), error);
}

TEST(Models, BranchPoints) {
  auto bp = model_branch_points(default_model(ModelKind::zhukovsky_markov, kDigits), kDigits);
  ASSERT_EQ(bp.size(), 4u);
  EXPECT_CLOSE(bp[2], sq("4/5"), -110);
  EXPECT_CLOSE(bp[3], sq("3/5"), -110);
}

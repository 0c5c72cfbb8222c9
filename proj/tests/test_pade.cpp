#include <random>

#include "test_util.hpp"

using namespace hpade;
using namespace hpade::testing;

namespace {

PowerSeries<Scalar> geometric(long a, int n) {
  std::vector<Rational> c;
  Rational t = 1;
  for (int k = 0; k < n; ++k, t *= a) c.push_back(t);
  return series_of(c);
}

PowerSeries<Scalar> exp_series(int n) {
  std::vector<Rational> c;
  Rational f = 1;
  for (int k = 0; k < n; ++k) {
    c.push_back(1 / f);
    f *= k + 1;
  }
  return series_of(c);
}

// Reference value of e from its own partial sum at the working precision.
Scalar euler_number() {
  Real s = make_real(0, kDigits), t = make_real(1, kDigits);
  for (int k = 1; k < 120; ++k) {
    s += t;
    t /= k;
  }
  return Scalar(s, make_real(0, kDigits), kDigits);
}

}  // namespace

TEST(PadeDiagonal, GeometricReproducedExactly) {
  auto f = geometric(2, 20);
  auto pa = pade_diagonal(f, 1);
  // Q is normalized with unit leading coefficient: Q = z - 1/2 = -(1 - 2z)/2.
  EXPECT_EQ(pa.Q, poly_of({sq("-1/2"), sc(1)}));
  EXPECT_EQ(pa.P, poly_of({sq("-1/2")}));
  EXPECT_EQ(pa.residual_order, 20);
  EXPECT_TRUE(pa.normal);
}

TEST(PadeDiagonal, ExponentialOrderOne) {
  auto pa = pade_diagonal(exp_series(3), 1);
  // Hand solution of c_2 + q_1 c_1 = 0 with q_0 = 1: q_1 = -1/2, p = 1 + z/2.
  for (long x : {-3, 1, 5}) {
    Scalar z = sq(std::to_string(x) + "/7");
    Scalar want = (sc(1) + z / sc(2)) / (sc(1) - z / sc(2));
    EXPECT_CLOSE(pade_evaluate(pa, z), want, -115);
  }
  EXPECT_EQ(pa.residual_order, 3);
}

TEST(PadeDiagonal, ConstantSeries) {
  for (int n : {0, 1, 4}) {
    std::vector<Rational> c(static_cast<std::size_t>(2 * n + 1), Rational(0));
    c[0] = 1;
    auto pa = pade_diagonal(series_of(c), n);
    EXPECT_EQ(pa.Q, poly_of({sc(1)}));
    EXPECT_EQ(pa.P, poly_of({sc(1)}));
  }
}

TEST(PadeDiagonal, InsufficientData) {
  try {
    pade_diagonal(exp_series(6), 3);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::insufficient_data);
  }
  EXPECT_NO_THROW(pade_diagonal(exp_series(7), 3));
}

TEST(PadeDiagonal, NonNormalIndexReturnsMinimalDenominator) {
  auto pa = pade_diagonal(geometric(2, 7), 3);
  EXPECT_FALSE(pa.normal);
  EXPECT_EQ(pa.Q, poly_of({sq("-1/2"), sc(1)}));
  EXPECT_EQ(pa.residual_order, 7);
}

TEST(PadeEvaluate, Examples) {
  EXPECT_CLOSE(pade_evaluate(pade_diagonal(exp_series(3), 1), sc(0)), sc(1), -118);
  EXPECT_CLOSE(pade_evaluate(pade_diagonal(geometric(2, 3), 1), sq("1/4")), sc(2), -118);
  auto pa5 = pade_diagonal(exp_series(11), 5);
  EXPECT_LT(dist(pade_evaluate(pa5, sc(1)), euler_number()), 1e-7);
}

TEST(PadeEvaluate, PoleThrows) {
  auto pa = pade_diagonal(geometric(2, 3), 1);
  try {
    pade_evaluate(pa, sq("1/2"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::pole_at_evaluation_point);
  }
}

TEST(PadeDiagonal, ExactModeMatchesFloating) {
  std::vector<Rational> c;
  Rational f = 1;
  for (int k = 0; k < 11; ++k) {
    c.push_back(1 / f);
    f *= k + 1;
  }
  auto pe = pade_diagonal(exact_series_of(c), 5);
  auto pf = pade_diagonal(series_of(c), 5);
  EXPECT_EQ(pe.residual_order, 11);
  ASSERT_EQ(pe.Q.degree(), pf.Q.degree());
  auto qe = to_floating(pe.Q, kDigits);
  for (int k = 0; k <= pf.Q.degree(); ++k) EXPECT_CLOSE(pf.Q.coeff(k), qe.coeff(k), -100);
}

// Invariants

TEST(PadeProperties, ResidualVanishesThroughTwoNPlusOne) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-20, 20);
  for (int n = 1; n <= 12; ++n) {
    std::vector<Scalar> c;
    for (int k = 0; k < 2 * n + 6; ++k) c.push_back(sq(std::to_string(num(rng)) + "/" + std::to_string(k + 1), std::to_string(num(rng)) + "/3"));
    PowerSeries<Scalar> f(c, kDigits);
    auto pa = pade_diagonal(f, n);
    EXPECT_GE(pa.residual_order, 2 * n + 1) << "n = " << n;
    EXPECT_LE(pa.Q.degree(), n);
    EXPECT_LE(pa.P.degree(), n);
    EXPECT_EQ(pa.Q.leading(), sc(1));
    // Brute-force oracle on the residual coefficients n+1..2n.
    for (int k = n + 1; k <= 2 * n; ++k) {
      Scalar r = sc(0);
      Real scale = make_real(0, kDigits);
      for (int j = 0; j <= pa.Q.degree(); ++j) {
        r += pa.Q.coeff(j) * f[k - j];
        scale += abs(pa.Q.coeff(j)) * abs(f[k - j]);
      }
      EXPECT_LE(abs(r), ten_pow_neg(kDigits - 10, kDigits) * scale);
    }
  }
}

TEST(PadeProperties, RationalFunctionsReproduced) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int n = 1; n <= 8; ++n) {
    std::vector<Scalar> a, b;
    for (int k = 0; k <= n; ++k) {
      a.push_back(sc(num(rng), num(rng)));
      b.push_back(sc(num(rng), num(rng)));
    }
    b[0] = sc(1);
    auto num_p = poly_of(a), den_p = poly_of(b);
    const int N = 2 * n + 5;
    auto f = series_div(PowerSeries<Scalar>::from_polynomial(num_p, N), PowerSeries<Scalar>::from_polynomial(den_p, N));
    auto pa = pade_diagonal(f, n);
    EXPECT_EQ(pa.residual_order, N);
    for (const Scalar& z : {sq("1/3", "1/5"), sq("-2/7"), sq("0", "1/9")})
      EXPECT_CLOSE(pade_evaluate(pa, z), num_p(z) / den_p(z), -80);
  }
}

#pragma once

#include <vector>

#include "hpade/hpade.hpp"

namespace hpade::fixtures {

/// e^{z/2} prod_j (1 - z/p_j)^{1/2}: square-root branch points at p_j and
/// nothing else in the finite plane.
inline PowerSeries<Scalar> sqrt_product_exp(const std::vector<Scalar>& pts, int N, int digits) {
  const Scalar one = Scalar::one(digits);
  auto prod = PowerSeries<Scalar>::constant(one, N);
  for (const auto& p : pts) {
    std::vector<Scalar> c(static_cast<std::size_t>(N), Scalar::zero(digits));
    c[0] = one;
    if (N > 1) c[1] = -(one / p);
    prod = series_mul(prod, PowerSeries<Scalar>(c, digits));
  }
  std::vector<Scalar> e;
  Scalar t = one;
  for (int k = 0; k < N; ++k) {
    e.push_back(t);
    t = t / Scalar(2 * (k + 1), digits);
  }
  return series_mul(series_pow_rational(prod, Rational(1, 2)), PowerSeries<Scalar>(e, digits));
}

/// Two functions sharing the conjugate pair b, conj(b) inside the unit disk.
/// Each has its own conjugate pair inside the disk (c and c + 3e-3) and one
/// real point outside it.
struct KatzFixture {
  Scalar shared, a_only, b_only, a_outside, b_outside;
  PowerSeries<Scalar> fA, fB;
};

inline KatzFixture katz_fixture(int N, int digits) {
  KatzFixture k;
  k.shared = Scalar::parse("-0.67", "0.075", digits);
  k.a_only = Scalar::parse("0.3", "0.5", digits);
  k.b_only = Scalar::parse("0.303", "0.5", digits);
  k.a_outside = Scalar::parse("1.6", "0", digits);
  k.b_outside = Scalar::parse("-1.8", "0", digits);
  k.fA = sqrt_product_exp({k.shared, conj(k.shared), k.a_only, conj(k.a_only), k.a_outside}, N, digits);
  k.fB = sqrt_product_exp({k.shared, conj(k.shared), k.b_only, conj(k.b_only), k.b_outside}, N, digits);
  return k;
}

}  // namespace hpade::fixtures

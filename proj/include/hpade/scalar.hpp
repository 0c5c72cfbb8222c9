#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <concepts>
#include <ostream>
#include <string>
#include <utility>

#include "hpade/error.hpp"

namespace hpade {

namespace mp = boost::multiprecision;

/// Variable-precision MPFR real. Results of arithmetic carry the precision of
/// their operands, so every value built through `Scalar` stays at the
/// computation's working precision.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

inline constexpr int kMinDigits = 16;
inline constexpr int kDefaultDigits = 120;
/// Precision tag carried by exact-rational values.
inline constexpr int kExactDigits = 0;

inline void require_digits(int digits) {
  if (digits < kMinDigits)
    throw error(errc::invalid_params,
                "working precision must be at least " + std::to_string(kMinDigits) +
                    " digits, got " + std::to_string(digits));
}

/// Sets the thread-default MPFR precision for the lifetime of the scope.
/// Needed wherever Boost creates temporaries from literals or strings.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return b < a ? b : a; }

inline Real make_real(long v, int digits) { return Real(v, static_cast<unsigned>(digits)); }
inline Real make_real(const Rational& q, int digits) {
  // The two-argument constructor rounds through a low-precision temporary.
  Real r;
  r.precision(static_cast<unsigned>(digits));
  r = q;
  return r;
}

inline Real parse_real(const std::string& text, int digits) {
  try {
    return Real(text, static_cast<unsigned>(digits));
  } catch (const std::exception&) {
    throw error(errc::parse_error, "not a decimal number: '" + text + "'");
  }
}

/// Shortest scientific form that reads back to the identical value at the
/// same precision.
inline std::string to_decimal(const Real& x) { return x.str(0, std::ios_base::scientific); }

inline Real real_pi(int digits) { return acos(make_real(-1, digits)); }

/// 10^-k at the given precision.
inline Real ten_pow_neg(int k, int digits) { return pow(make_real(10, digits), -k); }

/// Parses "p/q" or "p" into a rational.
inline Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw error(errc::parse_error, "not a rational: '" + text + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Complex number at a fixed decimal precision. Mixing two precisions in one
/// operation throws PrecisionMismatch.
class Scalar {
 public:
  Scalar() : Scalar(0L, kDefaultDigits) {}
  Scalar(long v, int digits) : re_(make_real(v, digits)), im_(make_real(0, digits)), digits_(digits) {}
  Scalar(Real re, Real im, int digits) : re_(std::move(re)), im_(std::move(im)), digits_(digits) {
    const auto d = static_cast<unsigned>(digits);
    if (re_.precision() != d) re_ = Real(re_, d);
    if (im_.precision() != d) im_ = Real(im_, d);
  }

  static Scalar from_int(long v, int digits) { return Scalar(v, digits); }
  static Scalar from_rational(const Rational& q, int digits) {
    return Scalar(make_real(q, digits), make_real(0, digits), digits);
  }
  static Scalar from_parts(const Rational& re, const Rational& im, int digits) {
    return Scalar(make_real(re, digits), make_real(im, digits), digits);
  }
  static Scalar parse(const std::string& re, const std::string& im, int digits) {
    return Scalar(parse_real(re, digits), parse_real(im, digits), digits);
  }
  static Scalar zero(int digits) { return Scalar(0L, digits); }
  static Scalar one(int digits) { return Scalar(1L, digits); }
  static Scalar i(int digits) { return Scalar(make_real(0, digits), make_real(1, digits), digits); }

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  int digits() const { return digits_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  std::complex<double> to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
  }

  Scalar operator-() const { return Scalar(-re_, -im_, digits_); }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    check(o);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    check(o);
    Real re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    check(o);
    if (o.is_zero()) throw error(errc::division_by_zero, "complex division by zero");
    Real den = o.re_ * o.re_ + o.im_ * o.im_;
    Real re = (re_ * o.re_ + im_ * o.im_) / den;
    im_ = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    return *this;
  }
  Scalar& operator*=(long k) {
    re_ *= k;
    im_ *= k;
    return *this;
  }
  Scalar& operator/=(long k) {
    if (k == 0) throw error(errc::division_by_zero, "division by integer zero");
    re_ /= k;
    im_ /= k;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, long k) { return a *= k; }
  friend Scalar operator*(long k, Scalar a) { return a *= k; }
  friend Scalar operator/(Scalar a, long k) { return a /= k; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.digits_ == b.digits_ && a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << '(' << to_decimal(s.re_) << ", " << to_decimal(s.im_) << ')';
  }

 private:
  void check(const Scalar& o) const {
    if (o.digits_ != digits_)
      throw error(errc::precision_mismatch, "operands at " + std::to_string(digits_) + " and " +
                                                std::to_string(o.digits_) + " digits");
  }

  Real re_;
  Real im_;
  int digits_;
};

inline Scalar conj(const Scalar& z) { return Scalar(z.real(), -z.imag(), z.digits()); }
inline Real norm(const Scalar& z) { return z.real() * z.real() + z.imag() * z.imag(); }
inline Real abs(const Scalar& z) { return hypot(z.real(), z.imag()); }
inline Real arg(const Scalar& z) { return atan2(z.imag(), z.real()); }

inline Scalar polar(const Real& r, const Real& theta, int digits) {
  return Scalar(r * cos(theta), r * sin(theta), digits);
}

/// Principal square root (cut along the negative real axis).
inline Scalar sqrt(const Scalar& z) {
  const int d = z.digits();
  if (z.is_zero()) return Scalar::zero(d);
  Real r = abs(z);
  Real t = sqrt((r + abs(z.real())) / 2);
  if (z.real() >= 0) return Scalar(t, z.imag() / (2 * t), d);
  Real im = z.imag() < 0 ? Real(-t) : t;
  return Scalar(abs(z.imag()) / (2 * t), im, d);
}

/// Principal logarithm.
inline Scalar log(const Scalar& z) {
  if (z.is_zero()) throw error(errc::division_by_zero, "logarithm of zero");
  return Scalar(log(abs(z)), arg(z), z.digits());
}

inline Scalar exp(const Scalar& z) { return polar(exp(z.real()), z.imag(), z.digits()); }

/// Principal power z^p = exp(p log z) for rational p.
inline Scalar pow(const Scalar& z, const Rational& p) {
  const int d = z.digits();
  if (z.is_zero()) {
    if (p > 0) return Scalar::zero(d);
    throw error(errc::division_by_zero, "non-positive power of zero");
  }
  if (p == 0) return Scalar::one(d);
  if (mp::denominator(p) == 1 && abs(mp::numerator(p)) <= 64) {
    long k = mp::numerator(p).convert_to<long>();
    Scalar base = k > 0 ? z : Scalar::one(d) / z;
    Scalar out = Scalar::one(d);
    for (long e = k > 0 ? k : -k; e > 0; e >>= 1) {
      if (e & 1) out *= base;
      base *= base;
    }
    return out;
  }
  Real pr = make_real(p, d);
  return polar(exp(pr * log(abs(z))), pr * arg(z), d);
}

/// Exact complex rational. Carries no precision; `digits()` reports
/// kExactDigits so generic code can pass it through unchanged.
class ExactScalar {
 public:
  ExactScalar() = default;
  explicit ExactScalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar from_int(long v, int /*digits*/ = kExactDigits) { return ExactScalar(Rational(v)); }
  static ExactScalar from_rational(const Rational& q, int /*digits*/ = kExactDigits) {
    return ExactScalar(q);
  }
  static ExactScalar from_parts(const Rational& re, const Rational& im, int /*digits*/ = kExactDigits) {
    return ExactScalar(re, im);
  }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  int digits() const { return kExactDigits; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  ExactScalar operator-() const { return ExactScalar(-re_, -im_); }
  ExactScalar& operator+=(const ExactScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    if (o.im_ == 0 && im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  ExactScalar& operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw error(errc::division_by_zero, "exact division by zero");
    if (o.im_ == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    Rational den = o.re_ * o.re_ + o.im_ * o.im_;
    Rational re = (re_ * o.re_ + im_ * o.im_) / den;
    im_ = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    return *this;
  }
  ExactScalar& operator*=(long k) {
    re_ *= k;
    im_ *= k;
    return *this;
  }
  ExactScalar& operator/=(long k) {
    if (k == 0) throw error(errc::division_by_zero, "division by integer zero");
    re_ /= k;
    im_ /= k;
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend ExactScalar operator*(ExactScalar a, long k) { return a *= k; }
  friend ExactScalar operator*(long k, ExactScalar a) { return a *= k; }
  friend ExactScalar operator/(ExactScalar a, long k) { return a /= k; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
    return os << '(' << s.re_ << ", " << s.im_ << ')';
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline Scalar to_floating(const ExactScalar& z, int digits) {
  return Scalar::from_parts(z.real(), z.imag(), digits);
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Scalar> {
  static constexpr bool exact = false;
};

template <>
struct scalar_traits<ExactScalar> {
  static constexpr bool exact = true;
};

/// Element type of every series, polynomial and linear system in the library.
template <class S>
concept FieldScalar = requires(const S a, const S b, long v, int d, const Rational& q) {
  { S::from_int(v, d) } -> std::same_as<S>;
  { S::from_rational(q, d) } -> std::same_as<S>;
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a * v } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.digits() } -> std::convertible_to<int>;
  { scalar_traits<S>::exact } -> std::convertible_to<bool>;
};

/// Rounding-level threshold 10^-(digits-10) used to decide that a computed
/// quantity vanishes in floating mode.
inline Real rounding_tolerance(int digits) { return ten_pow_neg(digits - 10, digits); }

/// Rank threshold 10^-(digits/2) of the elimination kernels.
inline Real rank_tolerance(int digits) { return ten_pow_neg(digits / 2, digits); }

}  // namespace hpade

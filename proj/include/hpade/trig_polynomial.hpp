#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hpade/scalar.hpp"

namespace hpade {

/// sum_j c_j cos(j x) + s_j sin(j x) with dense harmonic storage. s_0 is
/// always zero. T is Rational for exact work or Real for the floating path
/// (in which case the caller holds a PrecisionScope).
template <class T>
class TrigPolynomial {
 public:
  TrigPolynomial() = default;

  static TrigPolynomial cos_term(int j, const T& c) {
    TrigPolynomial t;
    t.cos_at(j) = c;
    return t;
  }
  static TrigPolynomial sin_term(int j, const T& s) {
    TrigPolynomial t;
    if (j > 0) t.sin_at(j) = s;
    return t;
  }

  int harmonics() const { return static_cast<int>(c_.size()); }
  T cos_coeff(int j) const { return j < harmonics() ? c_[static_cast<std::size_t>(j)] : T(0); }
  T sin_coeff(int j) const { return j < harmonics() ? s_[static_cast<std::size_t>(j)] : T(0); }

  T& cos_at(int j) {
    grow(j);
    return c_[static_cast<std::size_t>(j)];
  }
  T& sin_at(int j) {
    grow(j);
    return s_[static_cast<std::size_t>(j)];
  }

  bool is_zero() const {
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (!c_[j].is_zero() || !s_[j].is_zero()) return false;
    return true;
  }

  /// d/dx
  TrigPolynomial derivative() const {
    TrigPolynomial d;
    for (int j = 1; j < harmonics(); ++j) {
      const auto u = static_cast<std::size_t>(j);
      if (!s_[u].is_zero()) d.cos_at(j) = s_[u] * j;
      if (!c_[u].is_zero()) d.sin_at(j) = -c_[u] * j;
    }
    return d;
  }

  /// Value at x = 0.
  T at_zero() const {
    T v(0);
    for (const auto& c : c_) v += c;
    return v;
  }

  /// Value at x = 0 of the derivative.
  T derivative_at_zero() const {
    T v(0);
    for (int j = 1; j < harmonics(); ++j) v += s_[static_cast<std::size_t>(j)] * j;
    return v;
  }

  TrigPolynomial& operator+=(const TrigPolynomial& o) {
    if (o.harmonics() > harmonics()) grow(o.harmonics() - 1);
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      c_[j] += o.c_[j];
      s_[j] += o.s_[j];
    }
    return *this;
  }
  TrigPolynomial& operator-=(const TrigPolynomial& o) { return *this += o * T(-1); }
  friend TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) { return a += b; }
  friend TrigPolynomial operator-(TrigPolynomial a, const TrigPolynomial& b) { return a -= b; }

  friend TrigPolynomial operator*(TrigPolynomial a, const T& k) {
    for (std::size_t j = 0; j < a.c_.size(); ++j) {
      a.c_[j] *= k;
      a.s_[j] *= k;
    }
    return a;
  }

  /// Exact product through the product-to-sum identities.
  friend TrigPolynomial operator*(const TrigPolynomial& a, const TrigPolynomial& b) {
    TrigPolynomial out;
    if (a.harmonics() == 0 || b.harmonics() == 0) return out;
    out.grow(a.harmonics() + b.harmonics() - 2);
    auto add_cos = [&out](int j, const T& v) { out.c_[static_cast<std::size_t>(j < 0 ? -j : j)] += v; };
    auto add_sin = [&out](int j, const T& v) {
      if (j > 0) out.s_[static_cast<std::size_t>(j)] += v;
      else if (j < 0) out.s_[static_cast<std::size_t>(-j)] -= v;
    };
    T half(1);
    half /= 2;
    T t;
    for (int i = 0; i < a.harmonics(); ++i) {
      const T& ac = a.c_[static_cast<std::size_t>(i)];
      const T& as = a.s_[static_cast<std::size_t>(i)];
      if (ac.is_zero() && as.is_zero()) continue;
      for (int j = 0; j < b.harmonics(); ++j) {
        const T& bc = b.c_[static_cast<std::size_t>(j)];
        const T& bs = b.s_[static_cast<std::size_t>(j)];
        if (!ac.is_zero()) {
          if (!bc.is_zero()) {
            // cos i cos j = (cos(i-j) + cos(i+j)) / 2
            t = ac * bc * half;
            add_cos(i - j, t);
            add_cos(i + j, t);
          }
          if (!bs.is_zero()) {
            // cos i sin j = (sin(i+j) - sin(i-j)) / 2
            t = ac * bs * half;
            add_sin(i + j, t);
            add_sin(i - j, -t);
          }
        }
        if (!as.is_zero()) {
          if (!bc.is_zero()) {
            // sin i cos j = (sin(i+j) + sin(i-j)) / 2
            t = as * bc * half;
            add_sin(i + j, t);
            add_sin(i - j, t);
          }
          if (!bs.is_zero()) {
            // sin i sin j = (cos(i-j) - cos(i+j)) / 2
            t = as * bs * half;
            add_cos(i - j, t);
            add_cos(i + j, -t);
          }
        }
      }
    }
    out.trim();
    return out;
  }

  friend bool operator==(const TrigPolynomial& a, const TrigPolynomial& b) {
    const int h = std::max(a.harmonics(), b.harmonics());
    for (int j = 0; j < h; ++j)
      if (a.cos_coeff(j) != b.cos_coeff(j) || a.sin_coeff(j) != b.sin_coeff(j)) return false;
    return true;
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero() && s_.back().is_zero()) {
      c_.pop_back();
      s_.pop_back();
    }
  }

 private:
  void grow(int j) {
    if (j < harmonics()) return;
    c_.resize(static_cast<std::size_t>(j) + 1, T(0));
    s_.resize(static_cast<std::size_t>(j) + 1, T(0));
  }

  std::vector<T> c_, s_;
};

}  // namespace hpade

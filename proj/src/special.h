// Copyright 2026 The Holoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLOQ_SPECIAL_H_
#define HOLOQ_SPECIAL_H_

#include <cmath>
#include <complex>

namespace holoq::special {

// Below this argument the closed forms switch to four-term Taylor series.
inline constexpr double kSeriesThreshold = 1e-4;
// Quotients that cancel to second order switch earlier.
inline constexpr double kCancellationThreshold = 5e-2;

inline double sinc(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    double x2 = x * x;
    return 1 - x2 / 6 + x2 * x2 / 120 - x2 * x2 * x2 / 5040;
  }
  return std::sin(x) / x;
}

inline double sinhc(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    double x2 = x * x;
    return 1 + x2 / 6 + x2 * x2 / 120 + x2 * x2 * x2 / 5040;
  }
  return std::sinh(x) / x;
}

// tan(k)/k and tanh(k)/k as even functions of k^2, so a negative k^2 simply
// swaps the two.
inline double tanhc_sq(double k2) {
  if (std::abs(k2) < kSeriesThreshold * kSeriesThreshold) return 1 - k2 / 3 + 2 * k2 * k2 / 15 - 17 * k2 * k2 * k2 / 315;
  if (k2 > 0) {
    double k = std::sqrt(k2);
    return std::tanh(k) / k;
  }
  double k = std::sqrt(-k2);
  return std::tan(k) / k;
}

inline double tanc_sq(double l2) { return tanhc_sq(-l2); }

// (cosh 2x - 1) / (2x^2)
inline double cosh_q(double x) {
  double x2 = x * x;
  if (std::abs(x) < kCancellationThreshold) return 1 + x2 / 3 + 2 * x2 * x2 / 45 + x2 * x2 * x2 / 315;
  return (std::cosh(2 * x) - 1) / (2 * x2);
}

// (1 - cos 2x) / (2x^2)
inline double cos_q(double x) {
  double x2 = x * x;
  if (std::abs(x) < kCancellationThreshold) return 1 - x2 / 3 + 2 * x2 * x2 / 45 - x2 * x2 * x2 / 315;
  return (1 - std::cos(2 * x)) / (2 * x2);
}

// (sinh 2x / 2x - 1) / (2x^2)
inline double sinh_r(double x) {
  double x2 = x * x;
  if (std::abs(x) < kCancellationThreshold) return 1.0 / 3 + x2 / 15 + 2 * x2 * x2 / 315 + x2 * x2 * x2 / 2835;
  return (std::sinh(2 * x) / (2 * x) - 1) / (2 * x2);
}

// (sin 2x / 2x - 1) / (2x^2)
inline double sin_r(double x) {
  double x2 = x * x;
  if (std::abs(x) < kCancellationThreshold) return -1.0 / 3 + x2 / 15 - 2 * x2 * x2 / 315 + x2 * x2 * x2 / 2835;
  return (std::sin(2 * x) / (2 * x) - 1) / (2 * x2);
}

// f(s) = (e^{is} - 1) / (is)
inline std::complex<double> ext_f(double s) {
  const std::complex<double> i(0, 1);
  if (std::abs(s) < kSeriesThreshold) return 1.0 + i * s / 2.0 - s * s / 6.0 - i * s * s * s / 24.0;
  return (std::exp(i * s) - 1.0) / (i * s);
}

// g(s) = (e^{is} - (1 + is)) / s^2
inline std::complex<double> ext_g(double s) {
  const std::complex<double> i(0, 1);
  if (std::abs(s) < kCancellationThreshold) {
    // sum_{k>=2} (is)^k / (k! s^2)
    std::complex<double> term = -0.5, sum = term;
    for (int k = 3; k <= 10; ++k) {
      term *= i * s / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return (std::exp(i * s) - (1.0 + i * s)) / (s * s);
}

}  // namespace holoq::special

#endif  // HOLOQ_SPECIAL_H_

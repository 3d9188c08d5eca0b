// Copyright 2026 The ifra Authors
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

#include "ifra/exact_null.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ifra/normal.hpp"

namespace ifra {
namespace {

namespace mp = boost::multiprecision;
using Float50 = mp::number<mp::cpp_bin_float<50>, mp::et_off>;
using Float160 = mp::number<mp::cpp_bin_float<160>, mp::et_off>;

// Up to this n the largest term of the alternating sum stays below ~1e5,
// so double evaluation keeps roughly 1e-11 absolute accuracy.
constexpr std::size_t kDoubleMaxN = 10;
constexpr std::size_t kFloat50MaxN = 60;

void require_order(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("exact null needs n >= 2, got " +
                                std::to_string(n));
  }
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// The coefficients are equally spaced, c_i - c_j = (i - j)/(n - 1), so each
// product collapses to
//
//   prod_{j != i} (c_i - x)/(c_i - c_j)
//     = (-1)^{n-i} C(n-1, i-1) y_i^{n-1} / (n-1)!,  y_i = (n - 1)(c_i - x),
//
// and the upper-tail mass costs O(n) per evaluation.

// Double evaluation with compensated summation of the signed terms.
double upper_mass_double(std::size_t n, double x) {
  const double nm1 = static_cast<double>(n - 1);
  const double log_fact = std::lgamma(nm1 + 1.0);
  CompensatedSum acc;
  for (std::size_t i = 1; i <= n; ++i) {
    const double y = static_cast<double>(n + i - 2) - nm1 * x;
    if (!(y > 0.0)) continue;
    const double log_binom = log_fact -
                             std::lgamma(static_cast<double>(i)) -
                             std::lgamma(static_cast<double>(n - i + 1));
    const double term = std::exp(log_binom + nm1 * std::log(y) - log_fact);
    acc.add((n - i) % 2 == 0 ? term : -term);
  }
  return acc.value();
}

// Same sum in wide software floating point. y_i is formed in Real from the
// exact binary value of x, so the cancellation is absorbed by the extra
// digits rather than by rounding in the terms.
template <class Real>
double upper_mass_wide(std::size_t n, double x) {
  const unsigned nm1 = static_cast<unsigned>(n - 1);
  const Real xr = x;
  Real total = 0;
  Real binom = 1;  // C(n-1, i-1)
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1) {
      binom *= static_cast<unsigned>(n - i + 1);
      binom /= static_cast<unsigned>(i - 1);
    }
    const Real y = Real(static_cast<unsigned>(n + i - 2)) - Real(nm1) * xr;
    if (!(y > 0)) continue;
    const Real term = binom * mp::pow(y, static_cast<int>(nm1));
    if ((n - i) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  Real factorial = 1;
  for (unsigned k = 2; k <= nm1; ++k) factorial *= k;
  return static_cast<double>(total / factorial);
}

double upper_mass(std::size_t n, double x) {
  if (n <= kDoubleMaxN) return upper_mass_double(n, x);
  if (n <= kFloat50MaxN) return upper_mass_wide<Float50>(n, x);
  return upper_mass_wide<Float160>(n, x);
}

}  // namespace

std::vector<double> star_coefficients(std::size_t n) {
  require_order(n);
  std::vector<double> c(n);
  for (std::size_t i = 1; i <= n; ++i) {
    // The sum is an integer, so the single division below is the correctly
    // rounded value of the rational coefficient.
    unsigned long long twice_sum = 0;
    for (std::size_t j = i; j <= n; ++j) twice_sum += 2 * (j - 1);
    const auto denom = static_cast<unsigned long long>(n - 1) * (n - i + 1);
    c[i - 1] = static_cast<double>(twice_sum) / static_cast<double>(denom);
  }
  return c;
}

ExactNull::ExactNull(std::size_t n) : n_(n), coeffs_(star_coefficients(n)) {}

double ExactNull::cdf(double x) const {
  if (std::isnan(x)) throw std::invalid_argument("null cdf at NaN");
  if (x <= 1.0) return 0.0;
  if (x >= 2.0) return 1.0;
  if (!exact()) {
    return normal_cdf(std::sqrt(12.0 * static_cast<double>(n_)) * (x - 1.5));
  }
  // The law is symmetric about 3/2. Below the centre the lower mass equals
  // the upper mass at 3 - x (exact in double), which keeps relative accuracy
  // in the lower tail.
  if (x < 1.5) return std::clamp(upper_mass(n_, 3.0 - x), 0.0, 1.0);
  return std::clamp(1.0 - upper_mass(n_, x), 0.0, 1.0);
}

double ExactNull::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("quantile probability must lie in (0, 1)");
  }
  if (!exact()) {
    return 1.5 + normal_quantile(p) / std::sqrt(12.0 * static_cast<double>(n_));
  }
  double lo = 1.0;
  double hi = 2.0;
  double f_lo = -p;
  double f_hi = 1.0 - p;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = cdf(mid) - p;
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  if (f_hi == f_lo) return 0.5 * (lo + hi);
  const double secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
  return std::clamp(secant, lo, hi);
}

double ExactNull::critical_value(double alpha, Tail tail) const {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::invalid_argument("alpha must lie in (0, 0.5)");
  }
  const double p = tail == Tail::lower ? alpha : 1.0 - alpha;
  return std::sqrt(12.0 * static_cast<double>(n_)) * (quantile(p) - 1.5);
}

double null_cdf(std::size_t n, double x) { return ExactNull(n).cdf(x); }

double null_quantile(std::size_t n, double p) {
  return ExactNull(n).quantile(p);
}

double critical_value(std::size_t n, double alpha, Tail tail) {
  return ExactNull(n).critical_value(alpha, tail);
}

CriticalTable critical_table(std::size_t n_max,
                             std::span<const double> alphas) {
  if (n_max < 2 || n_max > 200) {
    throw std::invalid_argument("n_max must lie in [2, 200], got " +
                                std::to_string(n_max));
  }
  CriticalTable table;
  table.alphas.assign(alphas.begin(), alphas.end());
  std::sort(table.alphas.begin(), table.alphas.end());
  for (double a : table.alphas) {
    if (!(a > 0.0 && a < 0.5)) {
      throw std::invalid_argument("alpha must lie in (0, 0.5)");
    }
  }
  for (std::size_t n = 2; n <= n_max; ++n) {
    const ExactNull law(n);
    CriticalRow row;
    row.n = n;
    for (double a : table.alphas) {
      row.lower.push_back(law.critical_value(a, Tail::lower));
      row.upper.push_back(law.critical_value(a, Tail::upper));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace ifra

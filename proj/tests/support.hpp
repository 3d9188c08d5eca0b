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

// Independent oracles and helpers shared by the unit and acceptance tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "ifra/families.hpp"
#include "ifra/rng.hpp"
#include "ifra/sample.hpp"

namespace ifra::testsupport {

// CDF of the sum of m i.i.d. U(0,1) at s, from the convolution recursion
// F_m(s) = [s F_{m-1}(s) + (m - s) F_{m-1}(s - 1)] / m.
inline double irwin_hall_cdf(std::size_t m, double s) {
  std::vector<double> f(m);
  for (std::size_t j = 0; j < m; ++j) {
    f[j] = std::clamp(s - static_cast<double>(j), 0.0, 1.0);
  }
  for (std::size_t k = 2; k <= m; ++k) {
    for (std::size_t j = 0; j + k <= m; ++j) {
      const double t = s - static_cast<double>(j);
      f[j] = (t * f[j] + (static_cast<double>(k) - t) * f[j + 1]) /
             static_cast<double>(k);
    }
  }
  return f[0];
}

// Under exponentiality the star ratio equals 1 + (mean of n - 1 uniforms).
inline double star_ratio_null_cdf_oracle(std::size_t n, double x) {
  const double m = static_cast<double>(n - 1);
  return irwin_hall_cdf(n - 1, m * (x - 1.0));
}

// Brute-force star ratio over ordered pairs.
inline double star_ratio_brute(const std::vector<double>& x) {
  double num = 0.0;
  double sum = 0.0;
  for (double v : x) sum += v;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i != j) num += std::max(x[i], x[j]);
    }
  }
  const double n = static_cast<double>(x.size());
  return num / (n * (n - 1.0) * (sum / n));
}

// sup_x |F_n(x) - F(x)| for the empirical CDF of `values`.
inline double ks_distance(std::vector<double> values,
                          const std::function<double(double)>& cdf) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    d = std::max({d, std::abs(static_cast<double>(i + 1) / n - f),
                  std::abs(f - static_cast<double>(i) / n)});
  }
  return d;
}

inline std::vector<double> draws(const Family& family, std::size_t count,
                                 std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> out(count);
  draw_into(family, rng, out.data(), count);
  return out;
}

}  // namespace ifra::testsupport

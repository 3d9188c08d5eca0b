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

// The star-ratio U-statistic
//
//   delta_hat = sum_{i != j} max(X_i, X_j) / (n (n - 1) mean),
//
// an estimate of E max(X_1, X_2) / E X, together with its plug-in
// influence values and variance estimators for one and two samples.

#pragma once

#include <cstddef>
#include <vector>

#include "ifra/sample.hpp"

namespace ifra {

struct StarEstimate {
  double delta_hat = 0.0;  // dimensionless, in [1, 2)
  std::size_t n = 0;
  double mean = 0.0;
};

struct VarianceEstimate {
  double sigma2_hat = 0.0;
  std::vector<double> influence_values;  // in sample order
};

// Samples up to this size use direct pair enumeration; larger ones the
// sorted O(n log n) form.
inline constexpr std::size_t kPairwiseMaxN = 64;

StarEstimate delta_hat(const Sample& sample);

/// Direct enumeration of all unordered pairs.
StarEstimate delta_hat_pairwise(const Sample& sample);

/// 2 sum_i (i - 1) X_(i) / (n (n - 1) mean) over the order statistics.
StarEstimate delta_hat_sorted(const Sample& sample);

/// sum_i c_{i:n} D_i / sum_i D_i with normalized spacings
/// D_i = (n - i + 1)(X_(i) - X_(i-1)).
StarEstimate delta_hat_spacings(const Sample& sample);

// phi_i = 1/(n-1) sum_{j != i} [max(X_i, X_j) - (delta_hat/2)(X_i + X_j)],
// with the sample's own delta_hat plugged in.
std::vector<double> influence_values(const Sample& sample);

// 4 sum_i phi_i^2 / (n mean^2). Divides by n, not n - 1.
VarianceEstimate sigma2_hat(const Sample& sample);

// delta_hat(x) - delta_hat(y).
double two_sample_delta(const Sample& x, const Sample& y);

// N/n sigma2_hat(x) + N/m sigma2_hat(y), N = n + m.
double sigma2_pooled(const Sample& x, const Sample& y);

}  // namespace ifra

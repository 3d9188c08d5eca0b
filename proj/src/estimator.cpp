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

#include "ifra/estimator.hpp"

#include <algorithm>
#include <numeric>

#include "ifra/exact_null.hpp"

namespace ifra {
namespace {

double finish(double twice_pair_max_sum, const Sample& s) {
  const double n = static_cast<double>(s.size());
  const double value = twice_pair_max_sum / ((n - 1.0) * s.sum());
  // Only rounding can push a constant sample below the bound.
  return std::max(value, 1.0);
}

StarEstimate make(double delta, const Sample& s) {
  return {delta, s.size(), s.mean()};
}

}  // namespace

StarEstimate delta_hat(const Sample& sample) {
  return sample.size() <= kPairwiseMaxN ? delta_hat_pairwise(sample)
                                        : delta_hat_sorted(sample);
}

StarEstimate delta_hat_pairwise(const Sample& sample) {
  const auto x = sample.values();
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      acc += std::max(x[i], x[j]);
    }
  }
  return make(finish(2.0 * acc, sample), sample);
}

StarEstimate delta_hat_sorted(const Sample& sample) {
  const auto x = sample.sorted();
  double acc = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    acc += static_cast<double>(i) * x[i];
  }
  return make(finish(2.0 * acc, sample), sample);
}

StarEstimate delta_hat_spacings(const Sample& sample) {
  const auto x = sample.sorted();
  const std::size_t n = x.size();
  const std::vector<double> c = star_coefficients(n);
  double num = 0.0;
  double den = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = static_cast<double>(n - i) * (x[i] - prev);
    num += c[i] * d;
    den += d;
    prev = x[i];
  }
  return make(std::max(num / den, 1.0), sample);
}

std::vector<double> influence_values(const Sample& sample) {
  const auto x = sample.values();
  const std::size_t n = x.size();
  const double half_delta = 0.5 * delta_hat(sample).delta_hat;
  const double total = sample.sum();
  std::vector<double> phi(n);

  if (n <= kPairwiseMaxN) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        acc += std::max(x[i], x[j]) - half_delta * (x[i] + x[j]);
      }
      phi[i] = acc / static_cast<double>(n - 1);
    }
    return phi;
  }

  // Sorted form: sum_{j != i} max = (r - 1) X_(r) + sum_{k > r} X_(k) for an
  // observation of rank r; ties give the same value whichever rank is used.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  double suffix = 0.0;
  for (std::size_t r = n; r-- > 0;) {
    const std::size_t idx = order[r];
    const double max_sum = static_cast<double>(r) * x[idx] + suffix;
    const double pair_sum = static_cast<double>(n - 2) * x[idx] + total;
    phi[idx] = (max_sum - half_delta * pair_sum) / static_cast<double>(n - 1);
    suffix += x[idx];
  }
  return phi;
}

VarianceEstimate sigma2_hat(const Sample& sample) {
  VarianceEstimate out;
  out.influence_values = influence_values(sample);
  double ss = 0.0;
  for (double p : out.influence_values) ss += p * p;
  const double n = static_cast<double>(sample.size());
  const double mean = sample.mean();
  out.sigma2_hat = 4.0 * ss / (n * mean * mean);
  return out;
}

double two_sample_delta(const Sample& x, const Sample& y) {
  return delta_hat(x).delta_hat - delta_hat(y).delta_hat;
}

double sigma2_pooled(const Sample& x, const Sample& y) {
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  const double big_n = n + m;
  return big_n / n * sigma2_hat(x).sigma2_hat +
         big_n / m * sigma2_hat(y).sigma2_hat;
}

}  // namespace ifra

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

// Monte Carlo size and power studies.
//
// Replication r draws all of its uniforms from RandomStream::derive(seed, r)
// and its outcome is stored by index before a serial reduction, so a report
// is a pure function of its configuration whatever the thread count.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ifra/families.hpp"
#include "ifra/rival_tests.hpp"

namespace ifra {

enum class DecisionRule { asymptotic, exact, mc_calibrated };

std::string_view to_string(DecisionRule rule);
DecisionRule parse_rule(std::string_view text);

struct SimConfig {
  RivalSpec test;
  Family f = Family::exponential();  // null, alternative, or F (two-sample)
  std::optional<Family> g;           // G, two-sample only
  std::size_t n = 0;
  std::size_t m = 0;
  double alpha = 0.05;
  std::size_t reps = 10000;
  std::uint64_t seed = 0;
  DecisionRule rule = DecisionRule::asymptotic;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::size_t calibration_reps = 1'000'000;

  bool two_sample() const noexcept { return g.has_value(); }
};

struct SimReport {
  double rejection_rate = 0.0;
  std::size_t rejections = 0;
  std::size_t reps = 0;
  double mc_standard_error = 0.0;  // sqrt(p (1 - p) / reps)
  std::uint64_t seed = 0;
  double critical_value = 0.0;     // standardized units
  SimConfig config;
};

struct Calibration {
  double critical_value = 0.0;  // empirical level-quantile, standardized units
  double mc_standard_error = 0.0;
  std::size_t reps = 0;
};

class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Standardized statistic of every replication, in replication order. The
// decision rule plays no part here.
std::vector<double> simulate_statistics(const SimConfig& config);

// Empirical level-quantile of the standardized statistic under i.i.d.
// unit-exponential samples (both samples for two-sample tests). The
// standard error uses a difference-quotient sparsity estimate.
Calibration mc_calibrate_null(const RivalSpec& test, std::size_t n,
                              std::size_t m, double level, std::size_t reps,
                              std::uint64_t seed, std::size_t threads = 0);

// Rejection proportion under an exponential null.
SimReport simulate_size(const SimConfig& config);
// Rejection proportion under a one-sample alternative.
SimReport simulate_power(const SimConfig& config);
// Rejection proportion for samples from F and G.
SimReport simulate_power_two_sample(const SimConfig& config);

// Critical value in standardized units for the configured rule.
double critical_value_for(const SimConfig& config);

// Runs body(begin, end) over [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace ifra

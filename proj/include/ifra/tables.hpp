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

// Published simulation grids (sizes, one-sample power, two-sample power)
// and runners that regenerate them with the Monte Carlo harness.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifra/families.hpp"
#include "ifra/montecarlo.hpp"
#include "ifra/rival_tests.hpp"

namespace ifra {

struct StudyOptions {
  std::size_t reps = 10000;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  std::size_t calibration_reps = 1'000'000;
};

// One regenerated cell next to its published value.
struct StudyCell {
  RivalKind test = RivalKind::delta;
  std::string column;  // "alpha=0.05", "weibull:2", "gamma:3,1 vs gamma:1.5,1"
  std::size_t n = 0;
  std::optional<double> published;
  SimReport sim;
};

// The five one-sample tests in published row order.
std::span<const RivalKind> one_sample_tests();

// --- sizes under exponentiality, asymptotic critical regions -------------
std::span<const std::size_t> size_study_ns();       // 40, 45, 50, 55, 60, 70
std::span<const double> size_study_alphas();        // 0.01, 0.05, 0.10
std::optional<double> published_size(RivalKind test, std::size_t n, double alpha);
std::vector<StudyCell> run_size_study(const StudyOptions& opts,
                                      std::span<const RivalKind> tests,
                                      std::span<const std::size_t> ns,
                                      std::span<const double> alphas);

// --- one-sample power at alpha = 0.05 ------------------------------------
std::span<const std::size_t> power_study_ns();      // 5, 7, ..., 15
std::span<const Family> power_study_columns();      // W 1.2/2/3, LFR, Makeham
std::optional<double> published_power(RivalKind test, std::size_t n,
                                      const Family& alternative);
// delta uses exact critical values, the rivals Monte Carlo calibrated ones
// (one calibration per test and n, shared across columns).
std::vector<StudyCell> run_power_study(const StudyOptions& opts,
                                       std::span<const RivalKind> tests,
                                       std::span<const std::size_t> ns,
                                       std::span<const Family> columns);

// --- two-sample power, n = m, alpha = 0.05 -------------------------------
struct FamilyPair {
  Family f;
  Family g;
  std::string label() const;
};
std::span<const FamilyPair> two_sample_study_pairs();
std::span<const std::size_t> two_sample_study_ns();  // 20, 30, 40, 50, 100
std::optional<double> published_two_sample_power(RivalKind test, std::size_t n,
                                                 const FamilyPair& pair);
// delta: asymptotic rule; ik: Monte Carlo calibrated under exponential
// samples of the same sizes.
std::vector<StudyCell> run_two_sample_study(const StudyOptions& opts,
                                            std::span<const RivalKind> tests,
                                            std::span<const std::size_t> ns,
                                            std::span<const FamilyPair> pairs);

}  // namespace ifra

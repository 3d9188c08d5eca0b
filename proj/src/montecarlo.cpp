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

#include "ifra/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "ifra/estimator.hpp"
#include "ifra/exact_null.hpp"
#include "ifra/normal.hpp"
#include "ifra/testing.hpp"

namespace ifra {
namespace {

constexpr std::size_t kChunk = 256;
// Calibration streams are keyed off a different seed so they never reuse
// the draws of the study they calibrate.
constexpr std::uint64_t kCalibrationTag = 0x63616c6962726174ULL;

std::size_t resolve_threads(std::size_t threads) {
  if (threads != 0) return threads;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

double two_sample_delta_standardized(const Sample& x, const Sample& y) {
  const double big_n = static_cast<double>(x.size() + y.size());
  const double pooled = sigma2_pooled(x, y);
  const double diff = two_sample_delta(x, y);
  if (!(pooled > 0.0)) {
    // Both samples constant: no evidence either way.
    return 0.0;
  }
  return std::sqrt(big_n) * diff / std::sqrt(pooled);
}

// The star-ratio statistics reject for small values, every rival for large.
Tail reject_tail(const RivalSpec& test) {
  return test.kind == RivalKind::delta ? Tail::lower : Tail::upper;
}

double one_statistic(const SimConfig& c, RandomStream& rng,
                     std::vector<double>& xbuf, std::vector<double>& ybuf) {
  draw_into(c.f, rng, xbuf.data(), c.n);
  Sample x(xbuf, "x");
  if (!c.two_sample()) return evaluate(c.test, x).standardized;
  draw_into(*c.g, rng, ybuf.data(), c.m);
  Sample y(ybuf, "y");
  if (c.test.kind == RivalKind::delta) return two_sample_delta_standardized(x, y);
  return evaluate(c.test, x, y).standardized;
}

// Checks what sampling needs; the decision rule is checked separately.
void validate_sampling(const SimConfig& c) {
  if (c.reps < 1) throw InvalidConfig("reps must be >= 1");
  if (c.n < 2) throw InvalidConfig("n must be >= 2");
  if (!(c.alpha > 0.0 && c.alpha < 0.5)) {
    throw InvalidConfig("alpha must lie in (0, 0.5)");
  }
  try {
    c.test.validate();
  } catch (const std::invalid_argument& e) {
    throw InvalidConfig(e.what());
  }
  if (c.two_sample()) {
    if (c.m < 2) throw InvalidConfig("m must be >= 2 for a two-sample study");
    if (c.test.kind != RivalKind::delta && c.test.kind != RivalKind::ik) {
      throw InvalidConfig("test '" + std::string(to_string(c.test.kind)) +
                          "' is not a two-sample test");
    }
  } else if (c.test.two_sample()) {
    throw InvalidConfig("test 'ik' needs a second family (two-sample study)");
  }
}

void validate(const SimConfig& c) {
  validate_sampling(c);
  if (c.rule == DecisionRule::exact) {
    if (c.test.kind != RivalKind::delta || c.two_sample()) {
      throw InvalidConfig("the exact rule exists only for the one-sample delta test");
    }
    if (c.n > kMaxExactN) {
      throw InvalidConfig("the exact rule supports n <= " +
                          std::to_string(kMaxExactN));
    }
  }
  if (c.rule == DecisionRule::asymptotic && c.test.kind == RivalKind::ik) {
    throw InvalidConfig("the ik test has no asymptotic critical region; use mc");
  }
}

double empirical_quantile(std::vector<double>& values, double level) {
  // Inverse of the empirical CDF.
  const auto count = values.size();
  auto k = static_cast<std::size_t>(std::ceil(level * static_cast<double>(count)));
  k = std::clamp<std::size_t>(k, 1, count) - 1;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k),
                   values.end());
  return values[k];
}

SimReport run(const SimConfig& c) {
  const double crit = critical_value_for(c);
  const Tail tail = reject_tail(c.test);
  const std::vector<double> stats = simulate_statistics(c);
  std::size_t hits = 0;
  for (double s : stats) {
    hits += tail == Tail::lower ? (s < crit) : (s > crit);
  }
  SimReport r;
  r.rejections = hits;
  r.reps = c.reps;
  r.rejection_rate = static_cast<double>(hits) / static_cast<double>(c.reps);
  r.mc_standard_error = std::sqrt(r.rejection_rate * (1.0 - r.rejection_rate) /
                                  static_cast<double>(c.reps));
  r.seed = c.seed;
  r.critical_value = crit;
  r.config = c;
  return r;
}

}  // namespace

std::string_view to_string(DecisionRule rule) {
  switch (rule) {
    case DecisionRule::asymptotic: return "asymptotic";
    case DecisionRule::exact: return "exact";
    case DecisionRule::mc_calibrated: return "mc";
  }
  return "?";
}

DecisionRule parse_rule(std::string_view text) {
  if (text == "asymptotic") return DecisionRule::asymptotic;
  if (text == "exact") return DecisionRule::exact;
  if (text == "mc" || text == "mc_calibrated") return DecisionRule::mc_calibrated;
  throw std::invalid_argument("unknown decision rule '" + std::string(text) + "'");
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  const std::size_t workers =
      std::min(resolve_threads(threads), (count + kChunk - 1) / kChunk);
  if (workers <= 1) {
    body(0, count);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= count) return;
      body(begin, std::min(begin + kChunk, count));
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
}

std::vector<double> simulate_statistics(const SimConfig& config) {
  validate_sampling(config);
  std::vector<double> out(config.reps);
  parallel_for(config.reps, config.threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> xbuf(config.n);
    std::vector<double> ybuf(config.m);
    for (std::size_t r = begin; r < end; ++r) {
      RandomStream rng = RandomStream::derive(config.seed, r);
      out[r] = one_statistic(config, rng, xbuf, ybuf);
    }
  });
  return out;
}

Calibration mc_calibrate_null(const RivalSpec& test, std::size_t n,
                              std::size_t m, double level, std::size_t reps,
                              std::uint64_t seed, std::size_t threads) {
  if (!(level > 0.0 && level < 1.0)) {
    throw InvalidConfig("calibration level must lie in (0, 1)");
  }
  if (reps < 2) throw InvalidConfig("calibration needs reps >= 2");
  SimConfig c;
  c.test = test;
  c.f = Family::exponential();
  if (test.two_sample() || m > 0) {
    c.g = Family::exponential();
    c.m = m;
  }
  c.n = n;
  c.reps = reps;
  c.seed = seed ^ kCalibrationTag;
  c.threads = threads;
  std::vector<double> stats = simulate_statistics(c);

  Calibration out;
  out.reps = reps;
  out.critical_value = empirical_quantile(stats, level);
  const double rn = static_cast<double>(reps);
  const double h = std::min({0.5 * std::cbrt(1.0 / rn), 0.5 * level,
                             0.5 * (1.0 - level)});
  const double q_hi = empirical_quantile(stats, level + h);
  const double q_lo = empirical_quantile(stats, level - h);
  out.mc_standard_error =
      std::sqrt(level * (1.0 - level) / rn) * (q_hi - q_lo) / (2.0 * h);
  return out;
}

double critical_value_for(const SimConfig& c) {
  validate(c);
  const Tail tail = reject_tail(c.test);
  switch (c.rule) {
    case DecisionRule::asymptotic:
      return tail == Tail::lower ? normal_quantile(c.alpha)
                                 : normal_quantile(1.0 - c.alpha);
    case DecisionRule::exact:
      return ExactNull(c.n).critical_value(c.alpha, Tail::lower);
    case DecisionRule::mc_calibrated: {
      const double level = tail == Tail::lower ? c.alpha : 1.0 - c.alpha;
      return mc_calibrate_null(c.test, c.n, c.two_sample() ? c.m : 0, level,
                               c.calibration_reps, c.seed, c.threads)
          .critical_value;
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

SimReport simulate_size(const SimConfig& config) {
  if (config.two_sample() || config.f.kind() != FamilyKind::exponential) {
    throw InvalidConfig("size studies sample a one-sample exponential null");
  }
  return run(config);
}

SimReport simulate_power(const SimConfig& config) {
  if (config.two_sample()) {
    throw InvalidConfig("one-sample power study given a second family");
  }
  return run(config);
}

SimReport simulate_power_two_sample(const SimConfig& config) {
  if (!config.two_sample()) {
    throw InvalidConfig("two-sample power study needs families F and G");
  }
  return run(config);
}

}  // namespace ifra

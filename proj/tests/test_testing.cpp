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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "ifra/estimator.hpp"
#include "ifra/exact_null.hpp"
#include "ifra/normal.hpp"
#include "ifra/testing.hpp"
#include "support.hpp"

namespace ifra {
namespace {

using testsupport::draws;
using testsupport::ks_distance;

TEST(Normal, CdfAndQuantile) {
  EXPECT_NEAR(normal_cdf(0.0), 0.5, 1e-16);
  EXPECT_NEAR(normal_cdf(-1.959963984540054), 0.025, 1e-15);
  EXPECT_NEAR(normal_cdf(-8.0), 6.22096057427178e-16, 1e-27);
  EXPECT_NEAR(normal_quantile(0.05), -1.6448536269514722, 1e-14);
  EXPECT_NEAR(normal_quantile(0.01), -2.3263478740408408, 1e-14);
}

TEST(ReferenceMoments, Exponential) {
  for (double rate : {0.3, 1.0, 4.0}) {
    const ReferenceMoments r = reference_moments(Family::exponential(rate));
    EXPECT_DOUBLE_EQ(r.delta_ref, 1.5);
    EXPECT_DOUBLE_EQ(r.sigma2_ref, 1.0 / 12.0);
    EXPECT_TRUE(r.exponential);
  }
}

TEST(ReferenceMoments, QuadraturePath) {
  const ReferenceMoments e = reference_moments_quadrature(Family::exponential());
  EXPECT_NEAR(e.delta_ref, 1.5, 1e-8);
  EXPECT_NEAR(e.sigma2_ref, 1.0 / 12.0, 1e-8);
  const ReferenceMoments w1 = reference_moments(Family::weibull(1.0));
  EXPECT_NEAR(w1.delta_ref, 1.5, 1e-8);
  EXPECT_NEAR(w1.sigma2_ref, 1.0 / 12.0, 1e-8);
  const ReferenceMoments w2 = reference_moments(Family::weibull(2.0));
  EXPECT_NEAR(w2.delta_ref, 2.0 - 1.0 / std::sqrt(2.0), 1e-8);
  EXPECT_FALSE(w2.exponential);
}

TEST(ReferenceMoments, VarianceMatchesSimulatedEstimator) {
  // sigma2_hat is consistent for the reference variance.
  const Family ref = Family::weibull(2.0);
  const ReferenceMoments r = reference_moments(ref);
  const double est = sigma2_hat(Sample(draws(ref, 200000, 3))).sigma2_hat;
  EXPECT_NEAR(est, r.sigma2_ref, 0.03 * r.sigma2_ref);
}

TEST(OneSample, ConstantSampleRejects) {
  const Sample s(std::vector<double>(10, 3.0));
  const TestReport r =
      one_sample_test(s, reference_moments(Family::exponential()), 0.01);
  EXPECT_EQ(r.method, Method::exact);
  EXPECT_DOUBLE_EQ(r.delta_hat, 1.0);
  EXPECT_NEAR(r.standardized, std::sqrt(120.0) * -0.5, 1e-12);
  EXPECT_LT(r.standardized, critical_value(10, 0.01, Tail::lower));
  EXPECT_TRUE(r.reject);
}

TEST(OneSample, CentredSampleDoesNotReject) {
  const Sample s({1.0, 3.0});  // delta_hat = 1.5
  const TestReport r = one_sample_test(
      s, reference_moments(Family::exponential()), 0.05, Method::asymptotic);
  EXPECT_DOUBLE_EQ(r.standardized, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 0.5);
  EXPECT_FALSE(r.reject);
}

TEST(OneSample, ExactDecisionMatchesCriticalValue) {
  const ReferenceMoments ref = reference_moments(Family::exponential());
  const double crit = critical_value(10, 0.05, Tail::lower);
  EXPECT_NEAR(crit, -1.736865, 1e-4);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Sample s(draws(Family::weibull(1.6), 10, seed));
    const TestReport r = one_sample_test(s, ref, 0.05, Method::exact);
    const double z = std::sqrt(120.0) * (delta_hat(s).delta_hat - 1.5);
    if (std::abs(z - crit) > 1e-9) {
      EXPECT_EQ(r.reject, z < crit);
    }
    EXPECT_EQ(r.reject, r.p_value < r.alpha);
  }
}

TEST(OneSample, MethodSelectionAndErrors) {
  const ReferenceMoments expo = reference_moments(Family::exponential());
  const ReferenceMoments w2 = reference_moments(Family::weibull(2.0));
  const Sample small(draws(Family::exponential(), 40, 1));
  const Sample large(draws(Family::exponential(), 41, 1));
  EXPECT_EQ(one_sample_test(small, expo, 0.05).method, Method::exact);
  EXPECT_EQ(one_sample_test(large, expo, 0.05).method, Method::asymptotic);
  EXPECT_EQ(one_sample_test(small, w2, 0.05).method, Method::asymptotic);
  EXPECT_THROW(one_sample_test(small, w2, 0.05, Method::exact),
               IncompatibleMethod);
  EXPECT_THROW(one_sample_test(small, expo, 0.0), std::invalid_argument);
  EXPECT_THROW(one_sample_test(small, expo, 0.5), std::invalid_argument);
  EXPECT_EQ(parse_method("auto"), Method::automatic);
  EXPECT_THROW(parse_method("bootstrap"), std::invalid_argument);
}

TEST(OneSample, NonExponentialReferenceStandardization) {
  const Family ref = Family::weibull(2.0);
  const ReferenceMoments m = reference_moments(ref);
  const Sample s(draws(Family::weibull(3.0), 60, 8));
  const TestReport r = one_sample_test(s, m, 0.05);
  EXPECT_NEAR(r.statistic, delta_hat(s).delta_hat - m.delta_ref, 1e-15);
  EXPECT_NEAR(r.standardized,
              std::sqrt(60.0) * r.statistic / std::sqrt(m.sigma2_ref), 1e-12);
  EXPECT_NEAR(r.p_value, normal_cdf(r.standardized), 1e-15);
}

TEST(OneSample, ScaleInvariantReport) {
  const ReferenceMoments ref = reference_moments(Family::exponential());
  const Sample s(draws(Family::lfr(1.0), 25, 4));
  for (Method m : {Method::exact, Method::asymptotic}) {
    const TestReport a = one_sample_test(s, ref, 0.05, m);
    const TestReport b = one_sample_test(s.scaled(1e3), ref, 0.05, m);
    EXPECT_NEAR(a.statistic, b.statistic, 1e-12);
    EXPECT_NEAR(a.p_value, b.p_value, 1e-12);
    EXPECT_EQ(a.reject, b.reject);
  }
}

TEST(OneSample, ExactPValuesUniformUnderNull) {
  const ReferenceMoments ref = reference_moments(Family::exponential());
  std::vector<double> p;
  p.reserve(100000);
  RandomStream rng(77);
  std::vector<double> buf(10);
  for (int r = 0; r < 100000; ++r) {
    draw_into(Family::exponential(), rng, buf.data(), buf.size());
    p.push_back(one_sample_test(Sample(buf), ref, 0.05, Method::exact).p_value);
  }
  EXPECT_LE(ks_distance(p, [](double u) { return u; }), 0.01);
}

TEST(OneSample, ExactAndAsymptoticAgreeAtForty) {
  const ReferenceMoments ref = reference_moments(Family::exponential());
  RandomStream rng(5);
  std::vector<double> buf(40);
  int agree = 0;
  for (int r = 0; r < 10000; ++r) {
    draw_into(Family::exponential(), rng, buf.data(), buf.size());
    const Sample s(buf);
    agree += one_sample_test(s, ref, 0.05, Method::exact).reject ==
             one_sample_test(s, ref, 0.05, Method::asymptotic).reject;
  }
  EXPECT_GT(agree, 9500);
}

TEST(TwoSample, IdenticalAndSwapped) {
  const Sample x(draws(Family::gamma(2.0), 30, 1));
  const TestReport same = two_sample_test(x, x, 0.05);
  EXPECT_DOUBLE_EQ(same.standardized, 0.0);
  EXPECT_DOUBLE_EQ(same.p_value, 0.5);
  EXPECT_FALSE(same.reject);

  const Sample y(draws(Family::gamma(1.2), 45, 2));
  const TestReport a = two_sample_test(x, y, 0.05);
  const TestReport b = two_sample_test(y, x, 0.05);
  EXPECT_NEAR(a.standardized, -b.standardized, 1e-12);
  EXPECT_NEAR(a.p_value, 1.0 - b.p_value, 1e-12);
  ASSERT_TRUE(a.parts);
  EXPECT_NEAR(a.parts->sigma2_pooled,
              75.0 / 30.0 * a.parts->sigma2_f + 75.0 / 45.0 * a.parts->sigma2_g,
              1e-12);
  EXPECT_NEAR(a.standardized,
              std::sqrt(75.0) * (a.parts->delta_f - a.parts->delta_g) /
                  std::sqrt(a.parts->sigma2_pooled),
              1e-12);
  EXPECT_EQ(a.m, 45u);
}

TEST(TwoSample, DegenerateVariance) {
  EXPECT_THROW(two_sample_test(Sample({2, 2, 2}), Sample({5, 5}), 0.05),
               DegenerateVariance);
}

TEST(TwoSample, LargeStarOrderedSamplesReject) {
  int rejections = 0;
  for (std::uint64_t r = 0; r < 20; ++r) {
    const Sample x(draws(Family::weibull(3.0), 10000, 2 * r + 1));
    const Sample y(draws(Family::weibull(1.5), 10000, 2 * r + 2));
    rejections += two_sample_test(x, y, 0.01).reject;
  }
  EXPECT_EQ(rejections, 20);
}

}  // namespace
}  // namespace ifra

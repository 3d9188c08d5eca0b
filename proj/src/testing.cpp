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

#include "ifra/testing.hpp"

#include <cmath>
#include <stdexcept>

#include "ifra/estimator.hpp"
#include "ifra/exact_null.hpp"
#include "ifra/normal.hpp"
#include "ifra/quadrature.hpp"

namespace ifra {
namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::invalid_argument("alpha must lie in (0, 0.5)");
  }
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::exact: return "exact";
    case Method::asymptotic: return "asymptotic";
  }
  return "?";
}

std::string_view to_string(Hypothesis h) {
  return h == Hypothesis::one_sample ? "one-sample" : "two-sample";
}

Method parse_method(std::string_view text) {
  if (text == "auto") return Method::automatic;
  if (text == "exact") return Method::exact;
  if (text == "asymptotic") return Method::asymptotic;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

ReferenceMoments reference_moments(const Family& reference) {
  if (reference.kind() == FamilyKind::exponential) {
    return {1.5, 1.0 / 12.0, reference.to_string(), true};
  }
  return reference_moments_quadrature(reference);
}

ReferenceMoments reference_moments_quadrature(const Family& reference,
                                              double tol) {
  const double upper = reference.support_upper();
  const double mu = family_mean(reference, tol);
  const double delta = star_ratio_delta(reference, tol);

  // With T(x) = int_x^U S(t) dt, the projection simplifies to
  // x F(x) + [x S(x) + T(x)] - (delta/2) x = (1 - delta/2) x + T(x).
  auto tail = [&](double x) {
    return integrate([&](double t) { return reference.survival(t); }, x, upper,
                     tol)
        .value;
  };
  auto projection = [&](double x) { return (1.0 - 0.5 * delta) * x + tail(x); };
  const double m1 = integrate(
                        [&](double x) {
                          return projection(x) * reference.density(x);
                        },
                        0.0, upper, tol)
                        .value;
  const double m2 = integrate(
                        [&](double x) {
                          const double h = projection(x);
                          return h * h * reference.density(x);
                        },
                        0.0, upper, tol)
                        .value;
  const double var = std::max(m2 - m1 * m1, 0.0);
  const bool expo = reference.kind() == FamilyKind::exponential;
  return {delta, 4.0 * var / (mu * mu), reference.to_string(), expo};
}

TestReport one_sample_test(const Sample& sample, const ReferenceMoments& ref,
                           double alpha, Method method) {
  require_alpha(alpha);
  if (!(ref.sigma2_ref > 0.0)) {
    throw DegenerateVariance("reference variance is zero");
  }
  const std::size_t n = sample.size();
  if (method == Method::automatic) {
    method = ref.exponential && n <= kAutoExactMaxN ? Method::exact
                                                    : Method::asymptotic;
  }
  if (method == Method::exact && !ref.exponential) {
    throw IncompatibleMethod(
        "the exact null law is only available for an exponential reference, "
        "got '" + ref.label + "'");
  }

  TestReport r;
  r.hypothesis = Hypothesis::one_sample;
  r.method = method;
  r.alpha = alpha;
  r.n = n;
  r.reference = ref.label;
  r.delta_hat = delta_hat(sample).delta_hat;
  r.statistic = r.delta_hat - ref.delta_ref;
  r.standardized =
      std::sqrt(static_cast<double>(n)) * r.statistic / std::sqrt(ref.sigma2_ref);
  r.p_value = method == Method::exact ? ExactNull(n).cdf(r.delta_hat)
                                      : normal_cdf(r.standardized);
  r.reject = r.p_value < alpha;
  return r;
}

TestReport two_sample_test(const Sample& x, const Sample& y, double alpha) {
  require_alpha(alpha);
  TwoSampleParts p;
  p.delta_f = delta_hat(x).delta_hat;
  p.delta_g = delta_hat(y).delta_hat;
  p.sigma2_f = sigma2_hat(x).sigma2_hat;
  p.sigma2_g = sigma2_hat(y).sigma2_hat;
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  const double big_n = n + m;
  p.sigma2_pooled = big_n / n * p.sigma2_f + big_n / m * p.sigma2_g;
  if (!(p.sigma2_pooled > 0.0)) {
    throw DegenerateVariance(
        "pooled variance estimate is zero (both samples constant); the "
        "two-sample statistic cannot be standardized");
  }

  TestReport r;
  r.hypothesis = Hypothesis::two_sample;
  r.method = Method::asymptotic;
  r.alpha = alpha;
  r.n = x.size();
  r.m = y.size();
  r.delta_hat = p.delta_f;
  r.statistic = p.delta_f - p.delta_g;
  r.standardized = std::sqrt(big_n) * r.statistic / std::sqrt(p.sigma2_pooled);
  r.p_value = normal_cdf(r.standardized);
  r.reject = r.p_value < alpha;
  r.parts = p;
  return r;
}

}  // namespace ifra

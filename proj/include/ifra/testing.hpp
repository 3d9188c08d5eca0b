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

// Decision procedures for H0: F =* G against the one-sided alternative
// "F is more IFRA than G". Small values of the star-ratio difference are
// significant, so every decision here is lower tail.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ifra/families.hpp"
#include "ifra/sample.hpp"

namespace ifra {

// delta and asymptotic variance of the star-ratio statistic for a known
// reference distribution G0.
struct ReferenceMoments {
  double delta_ref = 1.5;
  double sigma2_ref = 1.0 / 12.0;
  std::string label = "exp";
  bool exponential = true;  // enables the exact small-sample law
};

// Exponential references short-circuit to (3/2, 1/12); everything else goes
// through reference_moments_quadrature.
ReferenceMoments reference_moments(const Family& reference);

// delta_ref = int (1 - F^2) / int (1 - F) and
// sigma2_ref = 4 / mu^2 Var(X F(X) + int_X^inf t dF(t) - (delta/2) X),
// all by adaptive quadrature. Throws QuadratureError on non-convergence.
ReferenceMoments reference_moments_quadrature(const Family& reference,
                                              double tol = 1e-10);

enum class Method { automatic, exact, asymptotic };
enum class Hypothesis { one_sample, two_sample };

std::string_view to_string(Method m);
std::string_view to_string(Hypothesis h);
Method parse_method(std::string_view text);

// Exact method chosen by Method::automatic up to this n.
inline constexpr std::size_t kAutoExactMaxN = 40;

// The exact method was requested for a reference it does not apply to.
class IncompatibleMethod : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TwoSampleParts {
  double delta_f = 0.0;
  double delta_g = 0.0;
  double sigma2_f = 0.0;
  double sigma2_g = 0.0;
  double sigma2_pooled = 0.0;
};

struct TestReport {
  double statistic = 0.0;     // delta_hat - delta_ref, or delta_F - delta_G
  double standardized = 0.0;  // sqrt(n) statistic / sigma, sqrt(N) for two
  double p_value = 0.0;
  double alpha = 0.0;
  bool reject = false;        // p_value < alpha
  Method method = Method::asymptotic;  // exact or asymptotic, never automatic
  Hypothesis hypothesis = Hypothesis::one_sample;
  std::size_t n = 0;
  std::size_t m = 0;          // 0 for one-sample tests
  double delta_hat = 0.0;     // delta_hat of the (first) sample
  std::string reference;      // one-sample reference label
  std::optional<TwoSampleParts> parts;
};

TestReport one_sample_test(const Sample& sample, const ReferenceMoments& ref,
                           double alpha, Method method = Method::automatic);

// Throws DegenerateVariance when the pooled variance estimate is zero.
TestReport two_sample_test(const Sample& x, const Sample& y, double alpha);

}  // namespace ifra

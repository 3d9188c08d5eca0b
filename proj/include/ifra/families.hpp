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

// Lifetime families used as alternatives and references: exponential,
// Weibull, linear failure rate (hazard 1 + theta x), Makeham
// (hazard 1 + theta (1 - e^{-x})), gamma and beta.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ifra/rng.hpp"
#include "ifra/sample.hpp"

namespace ifra {

enum class FamilyKind { exponential, weibull, lfr, makeham, gamma, beta };

std::string_view to_string(FamilyKind kind);

struct FamilyPoint {
  double density = 0.0;
  double cdf = 0.0;
};

class Family {
 public:
  static Family exponential(double rate = 1.0);
  static Family weibull(double shape, double scale = 1.0);  // shape >= 1
  static Family lfr(double theta);                          // theta >= 0
  static Family makeham(double theta);                      // theta >= 0
  static Family gamma(double shape, double scale = 1.0);
  static Family beta(double a, double b);

  // "exp:1", "weibull:3", "weibull:3,1", "lfr:0.2", "makeham:1",
  // "gamma:3,1", "beta:1.5,5". Throws std::invalid_argument.
  static Family parse(std::string_view spec);

  FamilyKind kind() const noexcept { return kind_; }
  // Shape parameter (rate for the exponential, a for beta).
  double theta() const noexcept { return theta_; }
  // Second parameter: scale for Weibull/gamma, b for beta, unused otherwise.
  double aux() const noexcept { return aux_; }

  std::string to_string() const;

  FamilyPoint eval(double x) const;
  double density(double x) const { return eval(x).density; }
  double cdf(double x) const { return eval(x).cdf; }
  // 1 - cdf(x), computed without cancellation where a closed form exists.
  double survival(double x) const;
  double quantile(double u) const;
  // Right end of the support (+infinity except for beta).
  double support_upper() const noexcept;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Family(FamilyKind kind, double theta, double aux)
      : kind_(kind), theta_(theta), aux_(aux) {}

  FamilyKind kind_;
  double theta_;
  double aux_;
};

// count i.i.d. draws by inverse transform, one uniform per draw.
Sample draw(const Family& family, std::size_t count, RandomStream& rng,
            std::string_view name = "sample");

// Same draws into a caller-owned buffer (no validation).
void draw_into(const Family& family, RandomStream& rng, double* out,
               std::size_t count);

// E max(X1, X2) / E X = int (1 - F^2) / int (1 - F), by adaptive quadrature.
double star_ratio_delta(const Family& family, double tol = 1e-10);

// int_0^inf (1 - F(x)) dx.
double family_mean(const Family& family, double tol = 1e-10);

}  // namespace ifra

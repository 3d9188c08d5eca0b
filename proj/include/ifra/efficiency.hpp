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

// Pitman asymptotic efficiency of the star-ratio test against local
// alternatives F_theta, theta_n = theta0 + k n^{-1/2}, with F_theta0
// exponential:
//
//   PAE = (d delta_theta / d theta at theta0)^2 / sigma^2_null,
//
// where delta_theta = E max(X1, X2) / E X under F_theta and
// sigma^2_null = 1/12.

#pragma once

#include <span>
#include <string_view>

#include "ifra/families.hpp"
#include "ifra/rival_tests.hpp"

namespace ifra {

struct PaeResult {
  FamilyKind family = FamilyKind::weibull;
  double theta0 = 0.0;
  double pae = 0.0;           // derivative^2 / null_variance
  double derivative = 0.0;
  double null_variance = 1.0 / 12.0;
  double derivative_error = 0.0;  // |Richardson correction|
};

// Weibull (theta0 = 1), LFR (theta0 = 0) or Makeham (theta0 = 0).
PaeResult pae_delta(FamilyKind family);

// The family member at parameter theta used for the local alternatives.
Family alternative_at(FamilyKind family, double theta);

// Null parameter of a local-alternative family.
double null_parameter(FamilyKind family);

// d/dtheta star_ratio_delta at theta0 from the one-sided second-order
// stencil (-3 f(0) + 4 f(h) - f(2h)) / (2h), extrapolated once in h.
struct Derivative {
  double value = 0.0;
  double error = 0.0;
};
Derivative star_ratio_derivative(FamilyKind family, double step = 1e-3);

// First-order forward difference (f(h) - f(0)) / h, for cross-checks.
double star_ratio_forward_difference(FamilyKind family, double step);

// PAE(a) / PAE(b); pae_b must be positive.
double pare(double pae_a, double pae_b);

// Published PAE constants of the competing tests (J_0.9, T_n, Gamma,
// Delta_F) under the three local-alternative families, plus the star-ratio
// test's own row as published.
struct PaeRow {
  RivalKind test;
  std::string_view label;
  double weibull;
  double lfr;
  double makeham;

  double at(FamilyKind family) const;
};

std::span<const PaeRow> rival_pae_constants();
// Row for the star-ratio test as published (1.4414, 0.75, 0.0833).
const PaeRow& published_delta_pae();
double rival_pae(RivalKind test, FamilyKind family);

}  // namespace ifra

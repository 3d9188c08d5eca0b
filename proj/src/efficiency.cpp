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

#include "ifra/efficiency.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ifra {
namespace {

constexpr double kNullVariance = 1.0 / 12.0;
// Quadrature tolerance for the differentiated functional; the difference
// quotient divides the quadrature error by the step.
constexpr double kTightTol = 1e-10;

constexpr std::array<PaeRow, 4> kRivalRows{{
    {RivalKind::deshpande, "J_0.9", 1.35, 0.3369, 0.0666},
    {RivalKind::kochar, "T_n", 1.247, 0.8933, 0.0784},
    {RivalKind::link, "Gamma", 1.3867, 0.2681, 0.0563},
    {RivalKind::ahmad, "Delta_F", 1.35, 0.3375, 0.0667},
}};

constexpr PaeRow kDeltaRow{RivalKind::delta, "delta", 1.4414, 0.75, 0.0833};

double ratio_at(FamilyKind family, double theta) {
  return star_ratio_delta(alternative_at(family, theta), kTightTol);
}

double stencil(FamilyKind family, double theta0, double f0, double h) {
  const double f1 = ratio_at(family, theta0 + h);
  const double f2 = ratio_at(family, theta0 + 2.0 * h);
  return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

}  // namespace

double null_parameter(FamilyKind family) {
  switch (family) {
    case FamilyKind::weibull: return 1.0;
    case FamilyKind::lfr:
    case FamilyKind::makeham: return 0.0;
    default: break;
  }
  throw std::invalid_argument("PAE is defined for weibull, lfr and makeham, not " +
                              std::string(to_string(family)));
}

Family alternative_at(FamilyKind family, double theta) {
  switch (family) {
    case FamilyKind::weibull: return Family::weibull(theta);
    case FamilyKind::lfr: return Family::lfr(theta);
    case FamilyKind::makeham: return Family::makeham(theta);
    default: break;
  }
  throw std::invalid_argument("no local-alternative family for " +
                              std::string(to_string(family)));
}

Derivative star_ratio_derivative(FamilyKind family, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  const double theta0 = null_parameter(family);
  const double f0 = ratio_at(family, theta0);
  const double coarse = stencil(family, theta0, f0, step);
  const double fine = stencil(family, theta0, f0, 0.5 * step);
  // The stencil error is O(h^2).
  const double extrapolated = (4.0 * fine - coarse) / 3.0;
  return {extrapolated, std::abs(extrapolated - fine)};
}

double star_ratio_forward_difference(FamilyKind family, double step) {
  const double theta0 = null_parameter(family);
  return (ratio_at(family, theta0 + step) - ratio_at(family, theta0)) / step;
}

PaeResult pae_delta(FamilyKind family) {
  PaeResult r;
  r.family = family;
  r.theta0 = null_parameter(family);
  const Derivative d = star_ratio_derivative(family);
  r.derivative = d.value;
  r.derivative_error = d.error;
  r.null_variance = kNullVariance;
  r.pae = r.derivative * r.derivative / r.null_variance;
  return r;
}

double pare(double pae_a, double pae_b) {
  if (!(pae_b > 0.0)) {
    throw std::invalid_argument("PARE needs a positive denominator");
  }
  return pae_a / pae_b;
}

double PaeRow::at(FamilyKind family) const {
  switch (family) {
    case FamilyKind::weibull: return weibull;
    case FamilyKind::lfr: return lfr;
    case FamilyKind::makeham: return makeham;
    default: break;
  }
  throw std::invalid_argument("no PAE constant for " +
                              std::string(to_string(family)));
}

std::span<const PaeRow> rival_pae_constants() { return kRivalRows; }

const PaeRow& published_delta_pae() { return kDeltaRow; }

double rival_pae(RivalKind test, FamilyKind family) {
  for (const PaeRow& row : kRivalRows) {
    if (row.test == test) return row.at(family);
  }
  throw std::invalid_argument("no published PAE for test '" +
                              std::string(to_string(test)) + "'");
}

}  // namespace ifra

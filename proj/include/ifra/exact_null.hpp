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

// Exact null distribution of the star-ratio statistic under exponentiality.
//
// Writing the statistic as sum_i c_i D_i / sum_i D_i over normalized
// spacings D_i, the law under an exponential parent is a linear combination
// of Dirichlet(1, ..., 1) weights. Its CDF is the alternating
// Lagrange-type sum
//
//   P(delta <= x) = 1 - sum_{i : x < c_i} prod_{j != i} (c_i - x) / (c_i - c_j)
//
// whose terms grow combinatorially with n while the result stays in [0, 1].
// Small n is evaluated in double (log-magnitude/sign form with compensated
// summation); larger n in software floating point wide enough to absorb the
// cancellation. Beyond kMaxExactN the normal approximation is used.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ifra {

enum class Tail { lower, upper };

// Largest n for which the exact CDF is evaluated; above it the asymptotic
// N(3/2, 1/(12 n)) law is substituted and ExactNull::exact() is false.
inline constexpr std::size_t kMaxExactN = 200;

// c_{i:n} = 2 sum_{j=i}^{n} (j - 1) / ((n - 1)(n - i + 1)), i = 1..n.
std::vector<double> star_coefficients(std::size_t n);

class ExactNull {
 public:
  explicit ExactNull(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  bool exact() const noexcept { return n_ <= kMaxExactN; }

  // P(delta_hat <= x) under exponentiality; 0 for x <= 1, 1 for x >= 2.
  double cdf(double x) const;

  // x in (1, 2) with cdf(x) = p, by bisection to width 1e-12 followed by a
  // single secant step inside the final bracket.
  double quantile(double p) const;

  // sqrt(12 n) (quantile(alpha or 1 - alpha) - 3/2).
  double critical_value(double alpha, Tail tail) const;

 private:
  std::size_t n_;
  std::vector<double> coeffs_;
};

double null_cdf(std::size_t n, double x);
double null_quantile(std::size_t n, double p);
double critical_value(std::size_t n, double alpha, Tail tail);

struct CriticalRow {
  std::size_t n = 0;
  std::vector<double> lower;  // one entry per alpha, in CriticalTable order
  std::vector<double> upper;
};

struct CriticalTable {
  std::vector<double> alphas;  // ascending
  std::vector<CriticalRow> rows;
};

// Rows n = 2..n_max, 2 <= n_max <= 200.
CriticalTable critical_table(std::size_t n_max, std::span<const double> alphas);

}  // namespace ifra

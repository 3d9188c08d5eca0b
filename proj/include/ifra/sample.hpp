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

// Validated lifetime samples and the error types shared across the library.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ifra {

// Raised when a collection of lifetimes violates the sample invariants
// (n >= 2, every value finite and strictly positive).
class InvalidSample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A variance estimate or reference variance is zero, so no standardized
// statistic (and therefore no decision) exists.
class DegenerateVariance : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An i.i.d. sample of positive lifetimes in a common time unit.
//
// The sorted copy is kept alongside the original order because most
// statistics in this library are functions of the order statistics.
class Sample {
 public:
  explicit Sample(std::vector<double> values, std::string_view name = "sample");

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> sorted() const noexcept { return sorted_; }
  std::size_t size() const noexcept { return values_.size(); }
  double sum() const noexcept { return sum_; }
  double mean() const noexcept { return sum_ / static_cast<double>(size()); }
  const std::string& name() const noexcept { return name_; }

  // Every value multiplied by c > 0.
  Sample scaled(double c) const;

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
  double sum_ = 0.0;
  std::string name_;
};

}  // namespace ifra

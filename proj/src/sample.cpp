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

#include "ifra/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ifra {

Sample::Sample(std::vector<double> values, std::string_view name)
    : values_(std::move(values)), name_(name) {
  if (values_.size() < 2) {
    std::ostringstream msg;
    msg << name_ << ": need at least 2 observations, got " << values_.size();
    throw InvalidSample(msg.str());
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v <= 0.0) {
      std::ostringstream msg;
      msg << name_ << ": value #" << (i + 1) << " (" << v
          << ") is not a finite positive lifetime";
      throw InvalidSample(msg.str());
    }
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
  sum_ = std::accumulate(values_.begin(), values_.end(), 0.0);
}

Sample Sample::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("scale factor must be finite and positive");
  }
  std::vector<double> out(values_);
  for (double& v : out) v *= c;
  return Sample(std::move(out), name_);
}

}  // namespace ifra

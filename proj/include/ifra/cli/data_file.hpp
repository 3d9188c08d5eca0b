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

// Lifetime data files: one value per line, or comma/whitespace separated
// values; lines whose first non-blank character is '#' are comments.

#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifra/sample.hpp"

namespace ifra::cli {

// Message is "<source>:<line>: <reason>"; line is 0 for whole-file errors.
class DataFileError : public std::runtime_error {
 public:
  DataFileError(const std::string& source, std::size_t line,
                const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Values of a data stream, each checked to be finite and positive.
std::vector<double> parse_values(std::istream& in, const std::string& source);

// Reads and validates a file as a Sample named after its path.
Sample read_sample(const std::string& path);

}  // namespace ifra::cli

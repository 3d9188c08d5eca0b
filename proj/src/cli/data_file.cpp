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

#include "ifra/cli/data_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>

namespace ifra::cli {
namespace {

std::string location(const std::string& source, std::size_t line) {
  return line == 0 ? source : source + ":" + std::to_string(line);
}

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == ';';
}

}  // namespace

DataFileError::DataFileError(const std::string& source, std::size_t line,
                             const std::string& reason)
    : std::runtime_error(location(source, line) + ": " + reason), line_(line) {}

std::vector<double> parse_values(std::istream& in, const std::string& source) {
  std::vector<double> values;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const std::string_view line(text);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::size_t pos = first;
    while (pos < line.size()) {
      while (pos < line.size() && is_separator(line[pos])) ++pos;
      if (pos == line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !is_separator(line[end])) ++end;
      const std::string_view token = line.substr(pos, end - pos);

      double v = 0.0;
      const char* tb = token.data();
      const char* te = tb + token.size();
      if (*tb == '+') ++tb;  // from_chars rejects a leading plus
      const auto [ptr, ec] = std::from_chars(tb, te, v);
      if (ec != std::errc() || ptr != te) {
        throw DataFileError(source, line_no,
                            "cannot parse '" + std::string(token) +
                                "' as a number");
      }
      if (!std::isfinite(v) || !(v > 0.0)) {
        throw DataFileError(source, line_no,
                            "lifetimes must be finite and positive, got '" +
                                std::string(token) + "'");
      }
      values.push_back(v);
      pos = end;
    }
  }
  if (values.size() < 2) {
    throw DataFileError(source, 0,
                        "need at least 2 values, found " +
                            std::to_string(values.size()));
  }
  return values;
}

Sample read_sample(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataFileError(path, 0, "cannot open file");
  return Sample(parse_values(in, path), path);
}

}  // namespace ifra::cli

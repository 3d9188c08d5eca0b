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

// Rendering of reports as JSON, CSV and aligned text. Numbers are printed
// with a fixed number of decimals (6 unless --precision says otherwise).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ifra/efficiency.hpp"
#include "ifra/exact_null.hpp"
#include "ifra/montecarlo.hpp"
#include "ifra/tables.hpp"
#include "ifra/testing.hpp"
#include "json.hpp"

namespace ifra::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kDefaultPrecision = 6;

// v rounded to `precision` decimals; precision >= 17 leaves v unchanged.
double rounded(double v, int precision);
// v in fixed notation with `precision` decimals.
std::string fixed(double v, int precision);
// RFC 4180 field: quoted when it contains a comma, quote or line break.
std::string csv_field(std::string_view text);

Json to_json(const TestReport& report, int precision);
std::string to_text(const TestReport& report, int precision);

std::string critical_table_csv(const CriticalTable& table, int precision);
std::string critical_table_text(const CriticalTable& table, int precision);

// kind is "size", "power" or "power2".
std::string sim_csv_header();
std::string sim_csv_row(std::string_view kind, const SimReport& report,
                        int precision);

std::string study_csv(const std::vector<StudyCell>& cells, int precision);

struct PareEntry {
  std::string_view label;  // rival test
  double rival_pae = 0.0;
  double pare = 0.0;            // computed PAE / rival PAE
  double pare_published = 0.0;  // published PAE / rival PAE
};

struct PaeReport {
  PaeResult result;
  double published_pae = 0.0;
  std::vector<PareEntry> pare;
};

PaeReport make_pae_report(FamilyKind family);
Json to_json(const PaeReport& report, int precision);
std::string to_text(const PaeReport& report, int precision);

}  // namespace ifra::cli

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

#include "ifra/cli/format.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace ifra::cli {
namespace {

std::string alpha_label(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", alpha);
  return buf;
}

}  // namespace

double rounded(double v, int precision) {
  if (precision >= 17 || !std::isfinite(v)) return v;
  const double scale = std::pow(10.0, precision);
  const double r = std::round(v * scale) / scale;
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

std::string fixed(double v, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << rounded(v, precision);
  return os.str();
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Json to_json(const TestReport& r, int precision) {
  Json j;
  j["hypothesis"] = to_string(r.hypothesis);
  j["method"] = to_string(r.method);
  if (r.hypothesis == Hypothesis::one_sample) j["reference"] = r.reference;
  j["n"] = r.n;
  if (r.hypothesis == Hypothesis::two_sample) j["m"] = r.m;
  j["alpha"] = rounded(r.alpha, precision);
  j["delta_hat"] = rounded(r.delta_hat, precision);
  j["statistic"] = rounded(r.statistic, precision);
  j["standardized"] = rounded(r.standardized, precision);
  j["p_value"] = rounded(r.p_value, precision);
  j["reject"] = r.reject;
  if (r.parts) {
    Json p;
    p["delta_f"] = rounded(r.parts->delta_f, precision);
    p["delta_g"] = rounded(r.parts->delta_g, precision);
    p["sigma2_f"] = rounded(r.parts->sigma2_f, precision);
    p["sigma2_g"] = rounded(r.parts->sigma2_g, precision);
    p["sigma2_pooled"] = rounded(r.parts->sigma2_pooled, precision);
    j["parts"] = std::move(p);
  }
  return j;
}

std::string to_text(const TestReport& r, int precision) {
  std::ostringstream os;
  const auto line = [&](std::string_view key, const std::string& value) {
    os << std::left << std::setw(15) << key << value << '\n';
  };
  line("hypothesis", std::string(to_string(r.hypothesis)));
  line("method", std::string(to_string(r.method)));
  if (r.hypothesis == Hypothesis::one_sample) {
    line("reference", r.reference);
    line("n", std::to_string(r.n));
  } else {
    line("n, m", std::to_string(r.n) + ", " + std::to_string(r.m));
  }
  line("delta_hat", fixed(r.delta_hat, precision));
  if (r.parts) {
    line("delta_g", fixed(r.parts->delta_g, precision));
    line("sigma2_f", fixed(r.parts->sigma2_f, precision));
    line("sigma2_g", fixed(r.parts->sigma2_g, precision));
    line("sigma2_pooled", fixed(r.parts->sigma2_pooled, precision));
  }
  line("statistic", fixed(r.statistic, precision));
  line("standardized", fixed(r.standardized, precision));
  line("p_value", fixed(r.p_value, precision));
  line("alpha", fixed(r.alpha, precision));
  line("decision", r.reject ? std::string("reject H0") : std::string("do not reject H0"));
  return os.str();
}

std::string critical_table_csv(const CriticalTable& t, int precision) {
  std::ostringstream os;
  os << 'n';
  for (double a : t.alphas) os << ",lower_" << alpha_label(a);
  for (auto a = t.alphas.rbegin(); a != t.alphas.rend(); ++a) {
    os << ",upper_" << alpha_label(*a);
  }
  os << '\n';
  for (const CriticalRow& row : t.rows) {
    os << row.n;
    for (double v : row.lower) os << ',' << fixed(v, precision);
    for (auto v = row.upper.rbegin(); v != row.upper.rend(); ++v) {
      os << ',' << fixed(*v, precision);
    }
    os << '\n';
  }
  return os.str();
}

std::string critical_table_text(const CriticalTable& t, int precision) {
  const int width = precision + 5;
  std::ostringstream os;
  os << std::right << std::setw(4) << 'n';
  for (double a : t.alphas) {
    os << std::setw(width) << ("L" + alpha_label(a));
  }
  for (auto a = t.alphas.rbegin(); a != t.alphas.rend(); ++a) {
    os << std::setw(width) << ("U" + alpha_label(*a));
  }
  os << '\n';
  for (const CriticalRow& row : t.rows) {
    os << std::setw(4) << row.n;
    for (double v : row.lower) os << std::setw(width) << fixed(v, precision);
    for (auto v = row.upper.rbegin(); v != row.upper.rend(); ++v) {
      os << std::setw(width) << fixed(*v, precision);
    }
    os << '\n';
  }
  return os.str();
}

std::string sim_csv_header() {
  return "kind,test,f,g,n,m,alpha,rule,reps,seed,rejections,rejection_rate,"
         "mc_standard_error,critical_value\n";
}

std::string sim_csv_row(std::string_view kind, const SimReport& r,
                        int precision) {
  const SimConfig& c = r.config;
  std::ostringstream os;
  os << kind << ',' << to_string(c.test.kind) << ','
     << csv_field(c.f.to_string()) << ','
     << (c.g ? csv_field(c.g->to_string()) : std::string()) << ',' << c.n
     << ',' << (c.g ? std::to_string(c.m) : std::string()) << ','
     << fixed(c.alpha, precision) << ',' << to_string(c.rule) << ',' << r.reps
     << ',' << r.seed << ',' << r.rejections << ','
     << fixed(r.rejection_rate, precision) << ','
     << fixed(r.mc_standard_error, precision) << ','
     << fixed(r.critical_value, precision) << '\n';
  return os.str();
}

std::string study_csv(const std::vector<StudyCell>& cells, int precision) {
  std::ostringstream os;
  os << "test,column,n,rule,reps,rejection_rate,mc_standard_error,"
        "critical_value,published,difference\n";
  for (const StudyCell& cell : cells) {
    os << to_string(cell.test) << ',' << csv_field(cell.column) << ','
       << cell.n << ',' << to_string(cell.sim.config.rule) << ','
       << cell.sim.reps << ',' << fixed(cell.sim.rejection_rate, precision)
       << ',' << fixed(cell.sim.mc_standard_error, precision) << ','
       << fixed(cell.sim.critical_value, precision) << ',';
    if (cell.published) {
      os << fixed(*cell.published, precision) << ','
         << fixed(cell.sim.rejection_rate - *cell.published, precision);
    } else {
      os << ',';
    }
    os << '\n';
  }
  return os.str();
}

PaeReport make_pae_report(FamilyKind family) {
  PaeReport report;
  report.result = pae_delta(family);
  report.published_pae = published_delta_pae().at(family);
  for (const PaeRow& row : rival_pae_constants()) {
    const double rival = row.at(family);
    report.pare.push_back({row.label, rival, pare(report.result.pae, rival),
                           pare(report.published_pae, rival)});
  }
  return report;
}

Json to_json(const PaeReport& r, int precision) {
  Json j;
  j["family"] = to_string(r.result.family);
  j["theta0"] = rounded(r.result.theta0, precision);
  j["derivative"] = rounded(r.result.derivative, precision);
  j["null_variance"] = rounded(r.result.null_variance, precision);
  j["pae"] = rounded(r.result.pae, precision);
  j["published_pae"] = rounded(r.published_pae, precision);
  Json rows = Json::array();
  for (const PareEntry& e : r.pare) {
    Json row;
    row["test"] = e.label;
    row["rival_pae"] = rounded(e.rival_pae, precision);
    row["pare"] = rounded(e.pare, precision);
    row["pare_published"] = rounded(e.pare_published, precision);
    rows.push_back(std::move(row));
  }
  j["pare"] = std::move(rows);
  return j;
}

std::string to_text(const PaeReport& r, int precision) {
  const int width = precision + 8;
  std::ostringstream os;
  os << "family " << to_string(r.result.family) << " (theta0 = "
     << fixed(r.result.theta0, 1) << ")\n";
  os << "d delta / d theta  " << fixed(r.result.derivative, precision) << '\n';
  os << "PAE(delta)         " << fixed(r.result.pae, precision)
     << "  (published " << fixed(r.published_pae, 4) << ")\n\n";
  os << std::left << std::setw(10) << "rival" << std::right
     << std::setw(width) << "PAE" << std::setw(width) << "PARE"
     << std::setw(width) << "PARE(pub)" << '\n';
  for (const PareEntry& e : r.pare) {
    os << std::left << std::setw(10) << e.label << std::right
       << std::setw(width) << fixed(e.rival_pae, 4) << std::setw(width)
       << fixed(e.pare, precision) << std::setw(width)
       << fixed(e.pare_published, precision) << '\n';
  }
  return os.str();
}

}  // namespace ifra::cli

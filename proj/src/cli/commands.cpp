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

#include "ifra/cli/commands.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "CLI11.hpp"
#include "ifra/cli/data_file.hpp"
#include "ifra/cli/format.hpp"
#include "ifra/exact_null.hpp"
#include "ifra/rival_tests.hpp"

namespace ifra::cli {
namespace {

constexpr std::string_view kSeedHint =
    "error: --seed is required; simulations have no default seed "
    "(e.g. --seed 1)\n";

struct Common {
  int precision = kDefaultPrecision;
  bool pretty = false;
};

void add_common(CLI::App* cmd, Common& common, bool with_pretty) {
  cmd->add_option("--precision", common.precision,
                  "decimals in numeric output")
      ->check(CLI::Range(0, 17));
  if (with_pretty) {
    cmd->add_flag("--pretty", common.pretty, "human-readable text, not JSON");
  }
}

// --- one-sample / two-sample ---------------------------------------------

struct OneSampleFlags {
  std::string data;
  std::string ref = "exp:1";
  double alpha = 0.05;
  std::string method = "auto";
};

int one_sample(const OneSampleFlags& f, const Common& c, std::ostream& out) {
  const Sample sample = read_sample(f.data);
  const Family reference = Family::parse(f.ref);
  const Method method = parse_method(f.method);
  const TestReport report =
      one_sample_test(sample, reference_moments(reference), f.alpha, method);
  if (c.pretty) {
    out << to_text(report, c.precision);
  } else {
    out << to_json(report, c.precision).dump(2) << '\n';
  }
  return kOk;
}

struct TwoSampleFlags {
  std::string x;
  std::string y;
  double alpha = 0.05;
};

int two_sample(const TwoSampleFlags& f, const Common& c, std::ostream& out) {
  const Sample x = read_sample(f.x);
  const Sample y = read_sample(f.y);
  const TestReport report = two_sample_test(x, y, f.alpha);
  if (c.pretty) {
    out << to_text(report, c.precision);
  } else {
    out << to_json(report, c.precision).dump(2) << '\n';
  }
  return kOk;
}

// --- critical-table ------------------------------------------------------

struct TableFlags {
  std::size_t n_max = 40;
  std::vector<double> alphas{0.01, 0.05, 0.10};
  std::string format = "csv";
};

int critical_table_cmd(const TableFlags& f, const Common& c,
                       std::ostream& out) {
  const CriticalTable table = critical_table(f.n_max, f.alphas);
  out << (f.format == "csv" ? critical_table_csv(table, c.precision)
                            : critical_table_text(table, c.precision));
  return kOk;
}

// --- statistic -----------------------------------------------------------

struct StatisticFlags {
  std::string data;
  std::vector<std::string> tests;
};

int statistic_cmd(const StatisticFlags& f, const Common& c,
                  std::ostream& out) {
  const Sample sample = read_sample(f.data);
  std::vector<RivalKind> kinds;
  if (f.tests.empty()) {
    kinds.assign(one_sample_tests().begin(), one_sample_tests().end());
    kinds.push_back(RivalKind::el_bassiouny);
  } else {
    for (const std::string& t : f.tests) kinds.push_back(parse_rival(t));
  }
  Json rows = Json::array();
  for (RivalKind kind : kinds) {
    const RivalValue v = evaluate(RivalSpec::of(kind), sample);
    Json row;
    row["test"] = to_string(kind);
    row["value"] = rounded(v.value, c.precision);
    row["standardized"] = rounded(v.standardized, c.precision);
    row["reject_tail"] = v.reject_tail == Tail::lower ? "lower" : "upper";
    rows.push_back(std::move(row));
  }
  Json j;
  j["n"] = sample.size();
  j["statistics"] = std::move(rows);
  out << j.dump(2) << '\n';
  return kOk;
}

// --- simulate ------------------------------------------------------------

struct SimFlags {
  std::string test = "delta";
  std::string family;
  std::string f;
  std::string g;
  std::size_t n = 0;
  std::size_t m = 0;
  double alpha = 0.05;
  std::size_t reps = 10000;
  std::optional<std::uint64_t> seed;
  std::string rule = "auto";
  std::size_t calibration_reps = SimConfig{}.calibration_reps;
  std::optional<double> b;
  std::optional<double> bandwidth;
};

void add_sim_options(CLI::App* cmd, SimFlags& s) {
  cmd->add_option("--test", s.test, "statistic (delta, deshpande, kochar, "
                                    "link, ahmad, ik)");
  cmd->add_option("--n", s.n, "sample size")->required();
  cmd->add_option("--alpha", s.alpha, "nominal level");
  cmd->add_option("--reps", s.reps, "replications");
  cmd->add_option("--seed", s.seed, "master seed (required)");
  cmd->add_option("--rule", s.rule, "auto, asymptotic, exact or mc");
  cmd->add_option("--calibration-reps", s.calibration_reps,
                  "null draws for the mc rule");
  cmd->add_option("--b", s.b, "Deshpande's b in (0, 1)");
  cmd->add_option("--bandwidth", s.bandwidth, "fixed kernel bandwidth");
}

// auto: sizes use the asymptotic region; one-sample power uses the exact
// law for delta and calibrated points for the rivals; two-sample power is
// asymptotic for delta and calibrated for ik.
DecisionRule resolve_rule(std::string_view kind, const SimFlags& s,
                          RivalKind test) {
  if (s.rule != "auto") return parse_rule(s.rule);
  if (kind == "size") return DecisionRule::asymptotic;
  if (test == RivalKind::ik) return DecisionRule::mc_calibrated;
  if (kind == "power2") return DecisionRule::asymptotic;
  if (test == RivalKind::delta) {
    return s.n <= kMaxExactN ? DecisionRule::exact : DecisionRule::asymptotic;
  }
  return DecisionRule::mc_calibrated;
}

int simulate_cmd(std::string_view kind, const SimFlags& s, std::size_t threads,
                 const Common& c, std::ostream& out, std::ostream& err) {
  if (!s.seed) {
    err << kSeedHint;
    return kUsage;
  }
  SimConfig config;
  config.test = RivalSpec::of(parse_rival(s.test));
  if (s.b) config.test.b = *s.b;
  if (s.bandwidth) config.test.bandwidth = *s.bandwidth;
  config.test.validate();
  config.n = s.n;
  config.alpha = s.alpha;
  config.reps = s.reps;
  config.seed = *s.seed;
  config.threads = threads;
  config.calibration_reps = s.calibration_reps;
  config.rule = resolve_rule(kind, s, config.test.kind);

  SimReport report;
  if (kind == "size") {
    report = simulate_size(config);
  } else if (kind == "power") {
    config.f = Family::parse(s.family);
    report = simulate_power(config);
  } else {
    config.f = Family::parse(s.f);
    config.g = Family::parse(s.g);
    config.m = s.m == 0 ? s.n : s.m;
    report = simulate_power_two_sample(config);
  }
  out << sim_csv_header() << sim_csv_row(kind, report, c.precision);
  return kOk;
}

// --- study ---------------------------------------------------------------

struct StudyFlags {
  std::size_t reps = 10000;
  std::optional<std::uint64_t> seed;
  std::size_t calibration_reps = 100000;
  std::vector<std::size_t> ns;
  std::vector<std::string> tests;
};

int study_cmd(std::string_view kind, const StudyFlags& s, std::size_t threads,
              const Common& c, std::ostream& out, std::ostream& err) {
  if (!s.seed) {
    err << kSeedHint;
    return kUsage;
  }
  StudyOptions opts;
  opts.reps = s.reps;
  opts.seed = *s.seed;
  opts.threads = threads;
  opts.calibration_reps = s.calibration_reps;

  std::vector<RivalKind> tests;
  for (const std::string& t : s.tests) tests.push_back(parse_rival(t));

  std::vector<StudyCell> cells;
  if (kind == "size") {
    if (tests.empty()) tests.assign(one_sample_tests().begin(), one_sample_tests().end());
    const auto ns = s.ns.empty() ? std::vector<std::size_t>(size_study_ns().begin(), size_study_ns().end()) : s.ns;
    cells = run_size_study(opts, tests, ns, size_study_alphas());
  } else if (kind == "power") {
    if (tests.empty()) tests.assign(one_sample_tests().begin(), one_sample_tests().end());
    const auto ns = s.ns.empty() ? std::vector<std::size_t>(power_study_ns().begin(), power_study_ns().end()) : s.ns;
    cells = run_power_study(opts, tests, ns, power_study_columns());
  } else {
    if (tests.empty()) tests = {RivalKind::delta, RivalKind::ik};
    const auto ns = s.ns.empty() ? std::vector<std::size_t>(two_sample_study_ns().begin(), two_sample_study_ns().end()) : s.ns;
    cells = run_two_sample_study(opts, tests, ns, two_sample_study_pairs());
  }
  out << study_csv(cells, c.precision);
  return kOk;
}

// --- pae -----------------------------------------------------------------

int pae_cmd(const std::string& family, const Common& c, std::ostream& out) {
  FamilyKind kind = FamilyKind::weibull;
  if (family == "lfr") kind = FamilyKind::lfr;
  if (family == "makeham") kind = FamilyKind::makeham;
  const PaeReport report = make_pae_report(kind);
  if (c.pretty) {
    out << to_text(report, c.precision);
  } else {
    out << to_json(report, c.precision).dump(2) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Tests of exponentiality against IFRA alternatives and "
               "star-order comparisons"};
  app.name("ifra");
  app.require_subcommand(1);
  std::size_t threads = 0;

  Common common;
  std::function<int()> action;

  OneSampleFlags one;
  auto* one_cmd = app.add_subcommand("one-sample",
                                     "test exponentiality (or F =* G0)");
  one_cmd->add_option("--data", one.data, "lifetime data file")->required();
  one_cmd->add_option("--ref", one.ref, "reference family, e.g. exp:1");
  one_cmd->add_option("--alpha", one.alpha, "significance level");
  one_cmd->add_option("--method", one.method, "auto, exact or asymptotic")
      ->check(CLI::IsMember({"auto", "exact", "asymptotic"}));
  add_common(one_cmd, common, true);
  one_cmd->callback([&] { action = [&] { return one_sample(one, common, out); }; });

  TwoSampleFlags two;
  auto* two_cmd = app.add_subcommand("two-sample", "test F =* G against F "
                                                   "more IFRA than G");
  two_cmd->add_option("--x", two.x, "sample from F")->required();
  two_cmd->add_option("--y", two.y, "sample from G")->required();
  two_cmd->add_option("--alpha", two.alpha, "significance level");
  add_common(two_cmd, common, true);
  two_cmd->callback([&] { action = [&] { return two_sample(two, common, out); }; });

  TableFlags table;
  auto* table_cmd = app.add_subcommand(
      "critical-table", "exact critical values of sqrt(12 n)(delta_hat - 3/2)");
  table_cmd->add_option("--n-max", table.n_max, "largest n (2..200)")
      ->check(CLI::Range(std::size_t{2}, kMaxExactN));
  table_cmd->add_option("--alphas", table.alphas, "comma-separated levels")
      ->delimiter(',');
  table_cmd->add_option("--format", table.format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  add_common(table_cmd, common, false);
  table_cmd->callback(
      [&] { action = [&] { return critical_table_cmd(table, common, out); }; });

  StatisticFlags stat;
  auto* stat_cmd = app.add_subcommand("statistic",
                                      "one-sample statistics of a data file");
  stat_cmd->add_option("--data", stat.data, "lifetime data file")->required();
  stat_cmd->add_option("--test", stat.tests, "tests to evaluate (default all)")
      ->delimiter(',');
  add_common(stat_cmd, common, false);
  stat_cmd->callback([&] { action = [&] { return statistic_cmd(stat, common, out); }; });

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo size or power");
  sim_cmd->require_subcommand(1);
  SimFlags sim;
  for (std::string_view kind : {"size", "power", "power2"}) {
    const std::string name(kind);
    auto* sub = sim_cmd->add_subcommand(
        name, kind == "size"    ? "rejection rate under exponentiality"
              : kind == "power" ? "rejection rate under a one-sample alternative"
                                : "rejection rate for samples from F and G");
    add_sim_options(sub, sim);
    if (kind == "power") {
      sub->add_option("--family", sim.family, "alternative, e.g. weibull:3")
          ->required();
    }
    if (kind == "power2") {
      sub->add_option("--f", sim.f, "family of the first sample")->required();
      sub->add_option("--g", sim.g, "family of the second sample")->required();
      sub->add_option("--m", sim.m, "second sample size (default n)");
    }
    sub->add_option("--threads", threads, "worker threads (0: all cores)");
    add_common(sub, common, false);
    sub->callback([&, name] {
      action = [&, name] {
        return simulate_cmd(name, sim, threads, common, out, err);
      };
    });
  }

  auto* study_root = app.add_subcommand(
      "study", "regenerate a published simulation grid next to its values");
  study_root->require_subcommand(1);
  StudyFlags study;
  for (std::string_view kind : {"size", "power", "power2"}) {
    const std::string name(kind);
    auto* sub = study_root->add_subcommand(
        name, kind == "size"    ? "sizes under exponentiality, n = 40..70"
              : kind == "power" ? "one-sample power, n = 5..15"
                                : "two-sample power, n = m = 20..100");
    sub->add_option("--reps", study.reps, "replications per cell");
    sub->add_option("--seed", study.seed, "master seed (required)");
    sub->add_option("--calibration-reps", study.calibration_reps,
                    "null draws per calibrated critical value");
    sub->add_option("--n", study.ns, "restrict to these sizes")->delimiter(',');
    sub->add_option("--test", study.tests, "restrict to these tests")
        ->delimiter(',');
    sub->add_option("--threads", threads, "worker threads (0: all cores)");
    add_common(sub, common, false);
    sub->callback([&, name] {
      action = [&, name] {
        return study_cmd(name, study, threads, common, out, err);
      };
    });
  }

  std::string pae_family;
  auto* pae = app.add_subcommand("pae", "Pitman efficiency and PARE table");
  pae->add_option("--family", pae_family, "weibull, lfr or makeham")
      ->required()
      ->check(CLI::IsMember({"weibull", "lfr", "makeham"}));
  add_common(pae, common, true);
  pae->callback([&] { action = [&] { return pae_cmd(pae_family, common, out); }; });

  std::vector<const char*> argv{"ifra"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const IncompatibleMethod& e) {
    err << "error: " << e.what() << '\n';
    return kIncompatible;
  } catch (const DegenerateVariance& e) {
    err << "error: degenerate variance: " << e.what() << '\n';
    return kDegenerate;
  } catch (const DataFileError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace ifra::cli

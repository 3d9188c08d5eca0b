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

#include "ifra/tables.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

namespace ifra {
namespace {

constexpr std::array<RivalKind, 5> kOneSampleTests{
    RivalKind::delta, RivalKind::deshpande, RivalKind::kochar, RivalKind::link,
    RivalKind::ahmad};

constexpr std::array<std::size_t, 6> kSizeNs{40, 45, 50, 55, 60, 70};
constexpr std::array<double, 3> kSizeAlphas{0.01, 0.05, 0.10};

// [n][test][alpha], tests in kOneSampleTests order.
constexpr double kPublishedSizes[6][5][3] = {
    {{0.0104, 0.0518, 0.1044}, {0.0637, 0.1243, 0.1709}, {0.0396, 0.1815, 0.3157},
     {0.0181, 0.0612, 0.1110}, {0.0311, 0.0772, 0.1196}},
    {{0.0106, 0.0505, 0.1015}, {0.0661, 0.1163, 0.1769}, {0.0380, 0.1704, 0.2938},
     {0.0167, 0.0584, 0.1089}, {0.0338, 0.0796, 0.1232}},
    {{0.0112, 0.0494, 0.1009}, {0.0601, 0.1220, 0.1736}, {0.0371, 0.1654, 0.2852},
     {0.0166, 0.0563, 0.1055}, {0.0312, 0.0810, 0.1232}},
    {{0.0108, 0.0500, 0.1003}, {0.0550, 0.1101, 0.1674}, {0.0346, 0.1565, 0.2753},
     {0.0151, 0.0569, 0.1063}, {0.0324, 0.0783, 0.1237}},
    {{0.0101, 0.0517, 0.1042}, {0.0494, 0.1128, 0.1680}, {0.0349, 0.1548, 0.2666},
     {0.0157, 0.0581, 0.1095}, {0.0304, 0.0742, 0.1209}},
    {{0.0090, 0.0489, 0.1024}, {0.0469, 0.1048, 0.1587}, {0.0303, 0.1410, 0.2534},
     {0.0147, 0.0580, 0.1072}, {0.0310, 0.0783, 0.1240}},
};

constexpr std::array<std::size_t, 6> kPowerNs{5, 7, 9, 11, 13, 15};

const std::array<Family, 9>& power_columns() {
  static const std::array<Family, 9> cols{
      Family::weibull(1.2), Family::weibull(2.0), Family::weibull(3.0),
      Family::lfr(0.2),     Family::lfr(1.0),     Family::lfr(2.5),
      Family::makeham(0.2), Family::makeham(1.0), Family::makeham(2.5)};
  return cols;
}

// [n][test][column]
constexpr double kPublishedPower[6][5][9] = {
    {{0.0902, 0.3886, 0.7496, 0.0645, 0.1029, 0.1422, 0.0579, 0.0821, 0.1111},
     {0.0658, 0.1782, 0.3157, 0.0601, 0.0757, 0.0944, 0.0520, 0.0685, 0.0851},
     {0.0897, 0.3677, 0.7290, 0.0645, 0.1027, 0.1410, 0.0583, 0.0833, 0.1112},
     {0.0826, 0.3618, 0.7118, 0.0585, 0.0961, 0.1333, 0.0541, 0.0766, 0.1037},
     {0.0781, 0.3258, 0.6809, 0.0590, 0.0637, 0.0358, 0.0509, 0.0519, 0.0391}},
    {{0.1117, 0.5560, 0.9309, 0.0686, 0.1292, 0.1854, 0.0617, 0.0927, 0.1366},
     {0.0784, 0.2153, 0.4461, 0.0549, 0.0812, 0.1032, 0.0529, 0.0666, 0.0881},
     {0.1084, 0.5255, 0.9181, 0.0664, 0.1266, 0.1846, 0.0608, 0.0906, 0.1314},
     {0.1100, 0.5449, 0.9176, 0.0706, 0.1260, 0.1796, 0.0630, 0.0974, 0.1395},
     {0.0988, 0.4600, 0.8758, 0.0602, 0.0806, 0.0668, 0.0533, 0.0612, 0.0556}},
    {{0.1294, 0.7008, 0.9818, 0.0732, 0.1497, 0.2131, 0.0645, 0.1087, 0.1562},
     {0.0857, 0.3110, 0.6371, 0.0622, 0.0895, 0.1222, 0.0569, 0.0797, 0.1043},
     {0.1227, 0.6705, 0.9763, 0.0741, 0.1469, 0.2087, 0.0658, 0.1064, 0.1494},
     {0.1284, 0.6798, 0.9708, 0.0697, 0.1364, 0.1914, 0.0679, 0.1072, 0.1520},
     {0.1068, 0.5828, 0.9476, 0.0630, 0.0952, 0.1032, 0.0557, 0.0710, 0.0804}},
    {{0.1440, 0.8038, 0.9967, 0.0767, 0.1773, 0.2872, 0.0660, 0.1285, 0.1994},
     {0.0864, 0.3779, 0.7468, 0.0632, 0.1094, 0.1447, 0.0605, 0.0795, 0.1154},
     {0.1345, 0.7704, 0.9953, 0.0770, 0.1774, 0.2830, 0.0638, 0.1227, 0.1910},
     {0.1419, 0.7775, 0.9931, 0.0717, 0.1563, 0.2494, 0.0657, 0.1202, 0.1844},
     {0.1204, 0.6867, 0.9857, 0.0695, 0.1193, 0.1452, 0.0571, 0.0849, 0.1033}},
    {{0.1629, 0.8777, 0.9989, 0.0882, 0.2042, 0.3229, 0.0716, 0.1303, 0.2333},
     {0.1011, 0.4470, 0.8511, 0.0737, 0.1209, 0.1619, 0.0589, 0.0875, 0.1269},
     {0.1526, 0.8512, 0.9985, 0.0876, 0.2026, 0.3213, 0.0718, 0.1247, 0.2274},
     {0.1557, 0.8494, 0.9970, 0.0787, 0.1767, 0.2771, 0.0676, 0.1215, 0.2076},
     {0.1326, 0.7673, 0.9942, 0.0727, 0.1365, 0.1750, 0.0629, 0.0903, 0.1278}},
    {{0.1764, 0.9250, 0.9999, 0.0926, 0.2246, 0.3760, 0.0686, 0.1493, 0.2554},
     {0.1074, 0.5271, 0.9143, 0.0705, 0.1259, 0.1802, 0.0613, 0.0895, 0.1430},
     {0.1665, 0.9009, 0.9998, 0.0942, 0.2230, 0.3734, 0.0687, 0.1422, 0.2511},
     {0.1800, 0.9067, 0.9995, 0.0862, 0.1903, 0.3217, 0.0664, 0.1362, 0.2345},
     {0.1439, 0.8261, 0.9984, 0.0767, 0.1466, 0.2085, 0.0606, 0.1005, 0.1474}},
};

constexpr std::array<std::size_t, 5> kTwoSampleNs{20, 30, 40, 50, 100};

const std::array<FamilyPair, 6>& pairs() {
  static const std::array<FamilyPair, 6> p{{
      {Family::gamma(3.0, 1.0), Family::gamma(1.5, 1.0)},
      {Family::gamma(4.0, 1.0), Family::gamma(2.0, 1.0)},
      {Family::weibull(3.0, 1.0), Family::weibull(1.5, 1.0)},
      {Family::weibull(4.0, 1.0), Family::weibull(2.0, 1.0)},
      {Family::beta(1.0, 1.5), Family::beta(1.0, 3.0)},
      {Family::beta(1.5, 2.0), Family::beta(1.5, 5.0)},
  }};
  return p;
}

// [pair][test: delta, ik][n]
constexpr double kPublishedTwoSample[6][2][5] = {
    {{0.415, 0.582, 0.6764, 0.7692, 0.9589}, {0.470, 0.642, 0.7554, 0.827, 0.9712}},
    {{0.435, 0.570, 0.681, 0.785, 0.966}, {0.492, 0.672, 0.755, 0.825, 0.968}},
    {{0.7946, 0.9346, 0.9804, 0.9940, 1.0}, {0.6714, 0.8562, 0.9446, 0.9796, 1.0}},
    {{0.811, 0.9312, 0.9766, 0.993, 1.0}, {0.72, 0.893, 0.954, 0.985, 1.0}},
    {{0.1292, 0.1736, 0.2332, 0.2692, 0.4396}, {0.1452, 0.2048, 0.2806, 0.3314, 0.5504}},
    {{0.166, 0.209, 0.278, 0.364, 0.597}, {0.383, 0.517, 0.585, 0.653, 0.938}},
};

template <class Range, class T>
std::optional<std::size_t> index_of(const Range& range, const T& value) {
  for (std::size_t i = 0; i < std::size(range); ++i) {
    if (range[i] == value) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> alpha_index(double alpha) {
  for (std::size_t i = 0; i < kSizeAlphas.size(); ++i) {
    if (std::abs(kSizeAlphas[i] - alpha) < 1e-12) return i;
  }
  return std::nullopt;
}

std::string alpha_label(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "alpha=%.2f", alpha);
  return buf;
}

SimConfig base_config(const StudyOptions& opts, RivalKind test, std::size_t n,
                      DecisionRule rule) {
  SimConfig c;
  c.test = RivalSpec::of(test);
  c.n = n;
  c.alpha = 0.05;
  c.reps = opts.reps;
  c.seed = opts.seed;
  c.threads = opts.threads;
  c.calibration_reps = opts.calibration_reps;
  c.rule = rule;
  return c;
}

StudyCell make_cell(const SimConfig& c, std::string column,
                    std::optional<double> published,
                    const std::vector<double>& stats, double crit) {
  const bool lower = c.test.kind == RivalKind::delta;
  std::size_t hits = 0;
  for (double s : stats) hits += lower ? (s < crit) : (s > crit);
  StudyCell cell;
  cell.test = c.test.kind;
  cell.column = std::move(column);
  cell.n = c.n;
  cell.published = published;
  const double reps = static_cast<double>(stats.size());
  const double p = static_cast<double>(hits) / reps;
  cell.sim.rejections = hits;
  cell.sim.reps = stats.size();
  cell.sim.rejection_rate = p;
  cell.sim.mc_standard_error = std::sqrt(p * (1.0 - p) / reps);
  cell.sim.seed = c.seed;
  cell.sim.critical_value = crit;
  cell.sim.config = c;
  return cell;
}

}  // namespace

std::span<const RivalKind> one_sample_tests() { return kOneSampleTests; }
std::span<const std::size_t> size_study_ns() { return kSizeNs; }
std::span<const double> size_study_alphas() { return kSizeAlphas; }
std::span<const std::size_t> power_study_ns() { return kPowerNs; }
std::span<const Family> power_study_columns() { return power_columns(); }
std::span<const FamilyPair> two_sample_study_pairs() { return pairs(); }
std::span<const std::size_t> two_sample_study_ns() { return kTwoSampleNs; }

std::string FamilyPair::label() const {
  return f.to_string() + " vs " + g.to_string();
}

std::optional<double> published_size(RivalKind test, std::size_t n,
                                     double alpha) {
  const auto ni = index_of(kSizeNs, n);
  const auto ti = index_of(kOneSampleTests, test);
  const auto ai = alpha_index(alpha);
  if (!ni || !ti || !ai) return std::nullopt;
  return kPublishedSizes[*ni][*ti][*ai];
}

std::optional<double> published_power(RivalKind test, std::size_t n,
                                      const Family& alternative) {
  const auto ni = index_of(kPowerNs, n);
  const auto ti = index_of(kOneSampleTests, test);
  const auto ci = index_of(power_columns(), alternative);
  if (!ni || !ti || !ci) return std::nullopt;
  return kPublishedPower[*ni][*ti][*ci];
}

std::optional<double> published_two_sample_power(RivalKind test, std::size_t n,
                                                 const FamilyPair& pair) {
  const auto ni = index_of(kTwoSampleNs, n);
  std::optional<std::size_t> pi;
  for (std::size_t i = 0; i < pairs().size(); ++i) {
    if (pairs()[i].f == pair.f && pairs()[i].g == pair.g) pi = i;
  }
  if (!ni || !pi) return std::nullopt;
  if (test == RivalKind::delta) return kPublishedTwoSample[*pi][0][*ni];
  if (test == RivalKind::ik) return kPublishedTwoSample[*pi][1][*ni];
  return std::nullopt;
}

std::vector<StudyCell> run_size_study(const StudyOptions& opts,
                                      std::span<const RivalKind> tests,
                                      std::span<const std::size_t> ns,
                                      std::span<const double> alphas) {
  std::vector<StudyCell> cells;
  for (std::size_t n : ns) {
    for (RivalKind test : tests) {
      SimConfig c = base_config(opts, test, n, DecisionRule::asymptotic);
      // Statistics are shared across alpha; only the critical value moves.
      const std::vector<double> stats = simulate_statistics(c);
      for (double alpha : alphas) {
        c.alpha = alpha;
        cells.push_back(make_cell(c, alpha_label(alpha),
                                  published_size(test, n, alpha), stats,
                                  critical_value_for(c)));
      }
    }
  }
  return cells;
}

std::vector<StudyCell> run_power_study(const StudyOptions& opts,
                                       std::span<const RivalKind> tests,
                                       std::span<const std::size_t> ns,
                                       std::span<const Family> columns) {
  std::vector<StudyCell> cells;
  for (std::size_t n : ns) {
    for (RivalKind test : tests) {
      SimConfig c = base_config(opts, test, n,
                                test == RivalKind::delta
                                    ? DecisionRule::exact
                                    : DecisionRule::mc_calibrated);
      const double crit = critical_value_for(c);
      for (const Family& alt : columns) {
        c.f = alt;
        cells.push_back(make_cell(c, alt.to_string(),
                                  published_power(test, n, alt),
                                  simulate_statistics(c), crit));
      }
    }
  }
  return cells;
}

std::vector<StudyCell> run_two_sample_study(const StudyOptions& opts,
                                            std::span<const RivalKind> tests,
                                            std::span<const std::size_t> ns,
                                            std::span<const FamilyPair> study_pairs) {
  // Calibrated critical values depend on (test, n) only.
  std::map<std::pair<RivalKind, std::size_t>, double> crits;
  const auto config_for = [&](RivalKind test, std::size_t n) {
    SimConfig c = base_config(opts, test, n,
                              test == RivalKind::delta
                                  ? DecisionRule::asymptotic
                                  : DecisionRule::mc_calibrated);
    c.g = Family::exponential();
    c.m = n;
    return c;
  };
  for (RivalKind test : tests) {
    for (std::size_t n : ns) {
      crits[{test, n}] = critical_value_for(config_for(test, n));
    }
  }
  std::vector<StudyCell> cells;
  for (const FamilyPair& pair : study_pairs) {
    for (RivalKind test : tests) {
      for (std::size_t n : ns) {
        SimConfig c = config_for(test, n);
        c.f = pair.f;
        c.g = pair.g;
        cells.push_back(make_cell(c, pair.label(),
                                  published_two_sample_power(test, n, pair),
                                  simulate_statistics(c), crits.at({test, n})));
      }
    }
  }
  return cells;
}

}  // namespace ifra

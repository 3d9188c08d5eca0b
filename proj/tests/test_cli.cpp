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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ifra/cli/commands.hpp"
#include "ifra/cli/data_file.hpp"
#include "ifra/cli/format.hpp"

namespace ifra::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kData = IFRA_TEST_DATA_DIR;
const fs::path kGolden = IFRA_TEST_GOLDEN_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A scratch file removed at scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& content)
      : path_(fs::temp_directory_path() /
              ("ifra_cli_" + std::to_string(counter_++) + ".txt")) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string data(const char* name) { return (kData / name).string(); }

TEST(DataFile, AcceptsLinesCommasAndComments) {
  std::istringstream in("# header\n1.5\n\n  2, 3 4\t5\n# 6\n+7e-1\n");
  EXPECT_EQ(parse_values(in, "mem"),
            (std::vector<double>{1.5, 2, 3, 4, 5, 0.7}));
}

TEST(DataFile, ErrorsCiteLine) {
  std::istringstream bad("1\n2\nabc\n");
  try {
    parse_values(bad, "f.txt");
    FAIL();
  } catch (const DataFileError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(std::string(e.what()), "f.txt:3: cannot parse 'abc' as a number");
  }
  std::istringstream neg("1\n-2\n");
  EXPECT_THROW(parse_values(neg, "f"), DataFileError);
  std::istringstream zero("0\n2\n");
  EXPECT_THROW(parse_values(zero, "f"), DataFileError);
  std::istringstream one("2\n");
  EXPECT_THROW(parse_values(one, "f"), DataFileError);
  std::istringstream partial("1.5x 2\n");
  EXPECT_THROW(parse_values(partial, "f"), DataFileError);
}

TEST(Format, CsvQuotingAndRounding) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("beta:1,3"), "\"beta:1,3\"");
  EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
  EXPECT_EQ(fixed(-0.0000001, 6), "0.000000");
  EXPECT_EQ(fixed(1.0 / 3.0, 6), "0.333333");
  EXPECT_DOUBLE_EQ(rounded(2.0 / 3.0, 17), 2.0 / 3.0);
}

TEST(OneSample, ConstantDataRejects) {
  TempFile f("3\n3\n3\n3\n");
  const Result r = invoke({"one-sample", "--data", f.path(), "--ref", "exp:1",
                           "--alpha", "0.01"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"reject\": true"), std::string::npos);
  EXPECT_NE(r.out.find("\"delta_hat\": 1.0"), std::string::npos);
}

TEST(OneSample, Golden) {
  const Result r = invoke({"one-sample", "--data", data("ifra_sample_24.txt"),
                           "--alpha", "0.01"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, slurp(kGolden / "one_sample_24.json"));
  // sqrt(288)(delta_hat - 1.5) = -3.579222 < -2.363726 at alpha = 0.01.
  EXPECT_NE(r.out.find("\"standardized\": -3.579222"), std::string::npos);
  EXPECT_NE(r.out.find("\"reject\": true"), std::string::npos);
}

TEST(OneSample, PrettyText) {
  const Result r = invoke({"one-sample", "--data", data("ifra_sample_24.txt"),
                           "--alpha", "0.01", "--pretty"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("standardized   -3.579222"), std::string::npos);
  EXPECT_NE(r.out.find("reject H0"), std::string::npos);
}

TEST(OneSample, Errors) {
  TempFile bad("1.0\n2.0\nabc\n");
  Result r = invoke({"one-sample", "--data", bad.path()});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find(":3:"), std::string::npos);

  r = invoke({"one-sample", "--data", data("ifra_sample_24.txt"), "--ref",
              "weibull:2", "--method", "exact"});
  EXPECT_EQ(r.code, kIncompatible);

  r = invoke({"one-sample", "--data", data("ifra_sample_24.txt"), "--ref",
              "cauchy:1"});
  EXPECT_EQ(r.code, kUsage);
  r = invoke({"one-sample", "--data", "/nonexistent/file"});
  EXPECT_EQ(r.code, kUsage);
  r = invoke({"one-sample"});
  EXPECT_EQ(r.code, kUsage);
  r = invoke({"one-sample", "--data", data("ifra_sample_24.txt"), "--alpha",
              "0.7"});
  EXPECT_EQ(r.code, kUsage);
}

TEST(OneSample, NonExponentialReference) {
  const Result r = invoke({"one-sample", "--data", data("ifra_sample_24.txt"),
                           "--ref", "weibull:2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"method\": \"asymptotic\""), std::string::npos);
  EXPECT_NE(r.out.find("\"reference\": \"weibull:2,1\""), std::string::npos);
}

TEST(TwoSample, Golden) {
  const Result r = invoke({"two-sample", "--x", data("ifra_sample_24.txt"),
                           "--y", data("comparison_sample_30.txt"), "--alpha",
                           "0.01"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, slurp(kGolden / "two_sample.json"));
  // -0.3762 is not below z_0.01 = -2.326348.
  EXPECT_NE(r.out.find("\"standardized\": -0.3762"), std::string::npos);
  EXPECT_NE(r.out.find("\"reject\": false"), std::string::npos);
}

TEST(TwoSample, IdenticalFilesAndErrors) {
  Result r = invoke({"two-sample", "--x", data("ifra_sample_24.txt"), "--y",
                     data("ifra_sample_24.txt")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"standardized\": 0.0"), std::string::npos);
  EXPECT_NE(r.out.find("\"reject\": false"), std::string::npos);

  r = invoke({"two-sample", "--y", data("ifra_sample_24.txt")});
  EXPECT_EQ(r.code, kUsage);

  TempFile c1("2\n2\n2\n");
  TempFile c2("5,5\n");
  r = invoke({"two-sample", "--x", c1.path(), "--y", c2.path()});
  EXPECT_EQ(r.code, kDegenerate);
  EXPECT_NE(r.err.find("degenerate variance"), std::string::npos);
}

TEST(CriticalTable, GoldenAndDeterministic) {
  const Result csv = invoke({"critical-table", "--n-max", "5"});
  EXPECT_EQ(csv.code, kOk);
  EXPECT_EQ(csv.out, slurp(kGolden / "critical_table_n5.csv"));
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')),
            "n,lower_0.01,lower_0.05,lower_0.10,upper_0.10,upper_0.05,"
            "upper_0.01");
  EXPECT_EQ(invoke({"critical-table", "--n-max", "5"}).out, csv.out);

  const Result text = invoke({"critical-table", "--n-max", "3", "--format", "text"});
  EXPECT_EQ(text.out, slurp(kGolden / "critical_table_n3.txt"));

  const Result two = invoke({"critical-table", "--n-max", "2"});
  EXPECT_EQ(std::count(two.out.begin(), two.out.end(), '\n'), 2);
  EXPECT_NE(two.out.find("2,-2.400500,-2.204541,-1.959592,1.959592,2.204541,2.400500"),
            std::string::npos);

  const Result forty = invoke({"critical-table", "--n-max", "40"});
  EXPECT_EQ(std::count(forty.out.begin(), forty.out.end(), '\n'), 40);
}

TEST(CriticalTable, RangeErrors) {
  EXPECT_EQ(invoke({"critical-table", "--n-max", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"critical-table", "--n-max", "201"}).code, kUsage);
  EXPECT_EQ(invoke({"critical-table", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"critical-table", "--alphas", "0.6"}).code, kUsage);
}

TEST(CriticalTable, Precision) {
  const Result r = invoke({"critical-table", "--n-max", "2", "--precision", "9"});
  EXPECT_NE(r.out.find("-2.204540769"), std::string::npos);
}

TEST(Simulate, SeedRequired) {
  const Result r = invoke({"simulate", "size", "--n", "40"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("--seed"), std::string::npos);
  EXPECT_NE(r.err.find("e.g."), std::string::npos);
}

TEST(Simulate, GoldenAndThreadIndependent) {
  const std::vector<std::string> base{"simulate", "size", "--test", "delta",
                                      "--n", "20", "--reps", "2000", "--seed",
                                      "7"};
  std::vector<std::string> a = base;
  a.insert(a.end(), {"--threads", "2"});
  std::vector<std::string> b = base;
  b.insert(b.end(), {"--threads", "8"});
  const Result ra = invoke(a);
  EXPECT_EQ(ra.code, kOk);
  EXPECT_EQ(ra.out, slurp(kGolden / "simulate_size.csv"));
  EXPECT_EQ(invoke(b).out, ra.out);
}

TEST(Simulate, PublishedExamples) {
  auto rate = [](const std::string& csv) {
    const std::string row = csv.substr(csv.find('\n') + 1);
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (char c : row) {
      if (c == '"') quoted = !quoted;
      else if (c == ',' && !quoted) { fields.push_back(field); field.clear(); }
      else field += c;
    }
    return std::stod(fields.at(11));
  };
  Result r = invoke({"simulate", "size", "--test", "delta", "--n", "40",
                     "--alpha", "0.05", "--reps", "10000", "--seed", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NEAR(rate(r.out), 0.0518, 0.01);
  r = invoke({"simulate", "power", "--test", "delta", "--family", "weibull:3",
              "--n", "5", "--alpha", "0.05", "--reps", "10000", "--seed", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find(",exact,"), std::string::npos);
  EXPECT_NEAR(rate(r.out), 0.7496, 0.01 + 3 * 0.0044);
  r = invoke({"simulate", "power2", "--f", "beta:1,1.5", "--g", "beta:1,3",
              "--n", "20", "--m", "20", "--seed", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"beta:1,1.5\",\"beta:1,3\",20,20"), std::string::npos);
}

TEST(Simulate, InvalidConfig) {
  EXPECT_EQ(invoke({"simulate", "size", "--test", "kochar", "--n", "10",
                    "--rule", "exact", "--seed", "1"}).code,
            kUsage);
  EXPECT_EQ(invoke({"simulate", "power", "--n", "10", "--seed", "1"}).code,
            kUsage);
  EXPECT_EQ(invoke({"simulate", "size", "--test", "bogus", "--n", "10",
                    "--seed", "1"}).code,
            kUsage);
}

TEST(Pae, ReportsAndGolden) {
  Result r = invoke({"pae", "--family", "weibull"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, slurp(kGolden / "pae_weibull.json"));
  EXPECT_NE(r.out.find("\"pae\": 1.441359"), std::string::npos);
  EXPECT_NE(r.out.find("\"pare_published\": 1.039446"), std::string::npos);

  r = invoke({"pae", "--family", "lfr"});
  EXPECT_NE(r.out.find("\"pare_published\": 0.839584"), std::string::npos);
  r = invoke({"pae", "--family", "makeham", "--pretty"});
  EXPECT_NE(r.out.find("0.083333"), std::string::npos);
  EXPECT_EQ(invoke({"pae", "--family", "gamma"}).code, kUsage);
}

TEST(Statistic, ListsAllTests) {
  const Result r = invoke({"statistic", "--data", data("ifra_sample_24.txt")});
  EXPECT_EQ(r.code, kOk);
  for (const char* name : {"delta", "deshpande", "kochar", "link", "ahmad",
                           "el-bassiouny"}) {
    EXPECT_NE(r.out.find(std::string("\"") + name + "\""), std::string::npos);
  }
}

TEST(Usage, HelpAndUnknownCommand) {
  Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("one-sample"), std::string::npos);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
}

}  // namespace
}  // namespace ifra::cli

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "idla/algebra/rational.hpp"
#include "idla/cli/app.hpp"

namespace {

using idla::algebra::Rational;
using Json = nlohmann::ordered_json;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome r;
  r.code = idla::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct Csv {
  std::vector<std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("# ", 0) == 0) {
      csv.meta.push_back(line.substr(2));
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      csv.rows.push_back(split(line));
    }
  }
  return csv;
}

std::string cell_text(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) {
    if (const char* old = std::getenv(idla::cli::kNtossCapEnv)) saved_ = old;
    if (value) ::setenv(idla::cli::kNtossCapEnv, value, 1);
    else ::unsetenv(idla::cli::kNtossCapEnv);
  }
  ~EnvGuard() {
    if (saved_.empty()) ::unsetenv(idla::cli::kNtossCapEnv);
    else ::setenv(idla::cli::kNtossCapEnv, saved_.c_str(), 1);
  }

 private:
  std::string saved_;
};

TEST(ExactDist, SmallCases) {
  const auto r = invoke({"exact-dist", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = parse_csv(r.out);
  EXPECT_EQ(csv.header, (std::vector<std::string>{"k", "probability", "approx"}));
  ASSERT_EQ(csv.rows.size(), 3u);
  EXPECT_EQ(csv.rows[0][1], "1/6");
  EXPECT_EQ(csv.rows[1][1], "2/3");
  EXPECT_EQ(csv.rows[2][1], "1/6");

  const auto one = parse_csv(invoke({"exact-dist", "--n", "1"}).out);
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_EQ(one.rows[0][1], "1");
}

TEST(ExactDist, FairBiasMatchesDefault) {
  const auto a = parse_csv(invoke({"exact-dist", "--n", "8"}).out);
  const auto b = parse_csv(invoke({"exact-dist", "--n", "8", "--bias", "1/2"}).out);
  EXPECT_EQ(a.rows, b.rows);
  const auto biased = parse_csv(invoke({"exact-dist", "--n", "2", "--bias", "2/3"}).out);
  EXPECT_EQ(biased.rows[0][1], "1/3");
  EXPECT_EQ(biased.rows[1][1], "2/3");
}

TEST(ExactDist, ProbabilitiesRoundTripAndSumToOne) {
  const auto doc = Json::parse(invoke({"exact-dist", "--n", "9", "--format", "json"}).out);
  Rational total;
  for (const auto& row : doc["rows"]) total += Rational::parse(cell_text(row["probability"]));
  EXPECT_EQ(total, Rational(1));
  EXPECT_EQ(doc["format_version"], "1");
  EXPECT_EQ(doc["command"], "exact-dist");
}

TEST(Formats, CsvAndJsonCarryTheSameValues) {
  const std::vector<std::vector<std::string>> commands{
      {"exact-dist", "--n", "6", "--bias", "3/5"},
      {"simulate", "--n", "5", "--trials", "2000", "--seed", "4"},
      {"runtime", "--max-n", "8"},
      {"ntoss", "--max-N", "6"},
      {"verify", "--suite", "eulerian"},
  };
  for (auto args : commands) {
    const auto csv = parse_csv(invoke(args).out);
    args.insert(args.end(), {"--format", "json"});
    const auto doc = Json::parse(invoke(args).out);
    ASSERT_EQ(doc["rows"].size(), csv.rows.size()) << args[0];
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
      for (std::size_t c = 0; c < csv.header.size(); ++c) {
        const Json& value = doc["rows"][i][csv.header[c]];
        if (value.is_number_float()) {
          EXPECT_EQ(std::stod(csv.rows[i][c]), value.get<double>()) << args[0] << " row " << i;
          continue;
        }
        std::string json_text = cell_text(value);
        std::replace(json_text.begin(), json_text.end(), ',', ';');
        EXPECT_EQ(csv.rows[i][c], json_text) << args[0] << " row " << i << " " << csv.header[c];
      }
    }
    for (const auto& line : csv.meta) {
      const auto eq = line.find('=');
      const auto key = line.substr(0, eq);
      const auto value = line.substr(eq + 1);
      if (key.rfind("summary.", 0) == 0) {
        const Json& field = doc["summary"][key.substr(8)];
        if (field.is_number_float()) EXPECT_EQ(field.get<double>(), std::stod(value)) << key;
        else EXPECT_EQ(cell_text(field), value) << key;
      }
      if (key.rfind("parameter.", 0) == 0) EXPECT_EQ(cell_text(doc["parameters"][key.substr(10)]), value) << key;
    }
  }
}

TEST(Simulate, DegenerateGames) {
  const auto two = Json::parse(invoke({"simulate", "--n", "2", "--trials", "500", "--seed", "1", "--format", "json"}).out);
  EXPECT_EQ(two["summary"]["mean_tosses"], 1);
  EXPECT_EQ(two["summary"]["expected_tosses"], "1");
  const auto one = Json::parse(invoke({"simulate", "--n", "1", "--trials", "10", "--seed", "1", "--format", "json"}).out);
  EXPECT_EQ(one["summary"]["mean_tosses"], 0);
  EXPECT_EQ(one["rows"].size(), 1u);
}

TEST(Simulate, WorkersDoNotChangeOutput) {
  const auto a = invoke({"simulate", "--n", "6", "--trials", "5000", "--seed", "99", "--workers", "1"});
  const auto b = invoke({"simulate", "--n", "6", "--trials", "5000", "--seed", "99", "--workers", "5"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Simulate, RequiresArguments) {
  EXPECT_EQ(invoke({"simulate", "--n", "3"}).code, idla::cli::kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--n", "0", "--trials", "5", "--seed", "1"}).code, idla::cli::kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--n", "3", "--trials", "5", "--seed", "1", "--bias", "1"}).code,
            idla::cli::kExitUsage);
}

TEST(Runtime, Rows) {
  const auto r = invoke({"runtime", "--max-n", "15"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 15u);
  EXPECT_EQ(csv.rows[14][2], "300");
  EXPECT_EQ(csv.rows[1][2], "1");
  EXPECT_EQ(csv.rows[0][2], "0");
  for (const auto& row : csv.rows) EXPECT_EQ(row.back(), "true");
}

TEST(Ntoss, RowsAndScaling) {
  const auto csv = parse_csv(invoke({"ntoss", "--max-N", "7"}).out);
  std::vector<std::string> seven;
  for (const auto& row : csv.rows)
    if (row[0] == "7") seven.push_back(row[3]);
  EXPECT_EQ(seven, (std::vector<std::string>{"1", "21", "32", "10"}));
  const auto one = parse_csv(invoke({"ntoss", "--max-tosses", "1"}).out);
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_EQ(one.rows[0], (std::vector<std::string>{"1", "2", "1", "1", "1"}));
  const auto four = parse_csv(invoke({"ntoss", "--max-N", "4"}).out);
  EXPECT_EQ(four.rows.back()[1], "4");
  EXPECT_EQ(four.rows.back()[3], "3");
}

TEST(Ntoss, CapFromEnvironment) {
  {
    EnvGuard guard(nullptr);
    EXPECT_EQ(invoke({"ntoss", "--max-N", "17"}).code, idla::cli::kExitUsage);
    EXPECT_EQ(invoke({"ntoss", "--max-N", "0"}).code, idla::cli::kExitUsage);
    EXPECT_EQ(invoke({"ntoss", "--max-N", "16"}).code, idla::cli::kExitOk);
  }
  {
    EnvGuard guard("18");
    EXPECT_EQ(invoke({"ntoss", "--max-N", "18"}).code, idla::cli::kExitOk);
    EXPECT_EQ(invoke({"ntoss", "--max-N", "19"}).code, idla::cli::kExitUsage);
  }
  {
    EnvGuard guard("banana");
    EXPECT_EQ(invoke({"ntoss", "--max-N", "3"}).code, idla::cli::kExitUsage);
  }
}

TEST(Verify, EverySuitePasses) {
  for (const std::string suite : {"all", "eulerian", "genfun", "chain", "biased"}) {
    const auto r = invoke({"verify", "--suite", suite});
    EXPECT_EQ(r.code, idla::cli::kExitOk) << suite << ": " << r.err;
    const auto csv = parse_csv(r.out);
    EXPECT_FALSE(csv.rows.empty());
    for (const auto& row : csv.rows) EXPECT_EQ(row[2], "true") << row[1];
  }
  EXPECT_EQ(invoke({"verify", "--suite", "nope"}).code, idla::cli::kExitUsage);
}

TEST(Usage, BadInvocations) {
  EXPECT_EQ(invoke({}).code, idla::cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, idla::cli::kExitUsage);
  EXPECT_EQ(invoke({"exact-dist"}).code, idla::cli::kExitUsage);
  EXPECT_EQ(invoke({"exact-dist", "--n", "x"}).code, idla::cli::kExitUsage);
  EXPECT_EQ(invoke({"exact-dist", "--n", "3", "--format", "xml"}).code, idla::cli::kExitUsage);
  EXPECT_EQ(invoke({"runtime", "--max-n", "0"}).code, idla::cli::kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, idla::cli::kExitOk);
}

}  // namespace

#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cuspk/cli.hpp"

using namespace cuspk;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cuspk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  RunConfig config;
  Outcome res;
  if (auto code = parse_command_line(static_cast<int>(argv.size()), argv.data(), config, out, err)) {
    res.code = *code;
  } else {
    res.code = run(config, out, err);
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace

TEST(Cli, KgroupExample) {
  const auto res = invoke({"kgroup", "--a", "2", "--b", "3", "--p", "5", "--r", "0", "--ring", "F5", "--form", "both"});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto doc = nlohmann::json::parse(res.out);
  EXPECT_EQ(doc["order"], "5");
  EXPECT_EQ(doc["forms_agree"], true);
  EXPECT_EQ(doc["quotient"]["order"], "5");
  EXPECT_EQ(doc["normalized"], false);
}

TEST(Cli, NegativeRIsTrivial) {
  const auto res = invoke({"kgroup", "--a", "2", "--b", "3", "--p", "5", "--r", "-1", "--ring", "F5"});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto doc = nlohmann::json::parse(res.out);
  EXPECT_EQ(doc["order"], "1");
  EXPECT_TRUE(doc["factors"].empty());
}

TEST(Cli, FieldOrderIsFixed) {
  const auto res = invoke({"kgroup", "--a", "2", "--b", "3", "--p", "5", "--r", "1", "--ring", "F5"});
  ASSERT_EQ(res.code, 0);
  const auto doc = nlohmann::ordered_json::parse(res.out);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"a", "b", "p", "r", "ring", "form", "factors", "invariant_factors",
                                            "order", "tail_truncated_at", "degree", "normalized", "base", "quotient",
                                            "forms_agree"}));
}

TEST(Cli, Normalization) {
  const auto res = invoke({"kgroup", "--a", "3", "--b", "2", "--p", "2", "--r", "0", "--ring", "F2"});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto doc = nlohmann::json::parse(res.out);
  EXPECT_EQ(doc["a"], 2);
  EXPECT_EQ(doc["b"], 3);
  EXPECT_EQ(doc["normalized"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"kgroup", "--a", "2", "--b", "4", "--p", "5", "--r", "0", "--ring", "F5"}).code, 2);
  EXPECT_EQ(invoke({"kgroup", "--a", "2", "--b", "3", "--p", "4", "--r", "0", "--ring", "F5"}).code, 2);
  EXPECT_EQ(invoke({"kgroup", "--a", "2", "--b", "3", "--p", "5", "--r", "0", "--ring", "Q5"}).code, 3);
  EXPECT_EQ(invoke({"kgroup", "--a", "2", "--b", "3", "--p", "2", "--r", "1", "--ring", "F2", "--budget", "100",
                    "--form", "quotient"})
                .code,
            4);
  EXPECT_EQ(invoke({"kgroup", "--a", "2"}).code, 2);
  EXPECT_EQ(invoke({"kgroup", "--a", "2", "--b", "3", "--p", "5", "--r", "0", "--ring", "F5", "--budget", "0"}).code,
            2);
  const auto bad = invoke({"kgroup", "--a", "2", "--b", "4", "--p", "5", "--r", "0", "--ring", "F5"});
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, CsvOutput) {
  const auto res = invoke({"kgroup", "--a", "2", "--b", "3", "--p", "5", "--r", "1", "--ring", "F5", "--form",
                           "product", "--format", "csv"});
  ASSERT_EQ(res.code, 0) << res.err;
  std::istringstream lines(res.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "a,b,p,r,ring,form,factor_label,factor_kind,n,k,order");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 2);
}

TEST(Cli, RangeSweepIsSorted) {
  const auto res = invoke({"kgroup", "--a", "2", "--b", "3", "--p", "5", "--r-range", "0:2", "--ring", "F5", "--form",
                           "product"});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto doc = nlohmann::json::parse(res.out);
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 3u);
  for (int r = 0; r < 3; ++r) EXPECT_EQ(doc[r]["r"], r);
}

TEST(Cli, OddDegreeTrivial) {
  const auto res = invoke({"kgroup", "--a", "2", "--b", "3", "--p", "5", "--degree", "3", "--ring", "F5"});
  ASSERT_EQ(res.code, 0) << res.err;
  EXPECT_EQ(nlohmann::json::parse(res.out)["order"], "1");
}

TEST(Cli, TowerWithOracle) {
  const auto res = invoke({"tower", "--a", "4", "--b", "3", "--p", "2", "--r", "2", "--mprime", "1", "--ring", "F2",
                           "--truncate", "5", "--case", "2", "--oracle"});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto doc = nlohmann::json::parse(res.out);
  EXPECT_EQ(doc["s"], 2);
  EXPECT_EQ(doc["kernel_order"], "4");
  EXPECT_EQ(doc["oracle"]["kernel_matches_embed"], true);
}

TEST(Cli, UnitsPthRoot) {
  const auto res =
      invoke({"units", "--ring", "Z8", "--p", "2", "--trunc", "3", "--check", "pth-root", "--target", "1+2t"});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto doc = nlohmann::json::parse(res.out);
  EXPECT_EQ(doc["result"], false);
  EXPECT_TRUE(doc["witness"].is_null());
  EXPECT_FALSE(doc["obstruction"].get<std::string>().empty());
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cases = {
      {"kgroup", "--a", "2", "--b", "3", "--p", "2", "--r-range", "0:2", "--ring", "F2"},
      {"tcminus", "--a", "2", "--b", "3", "--p", "5", "--r", "1", "--truncate", "30", "--ring", "F5"},
      {"selfcheck"},
  };
  for (const auto& c : cases) {
    const auto first = invoke(c);
    const auto second = invoke(c);
    EXPECT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
  }
}

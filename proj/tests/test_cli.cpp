#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <cstdlib>
#include <sys/wait.h>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gwfano/cli.hpp"

using gwfano::run_cli;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"gwfano"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "gwfano_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ComputeJsonExample) {
  const CliRun r = cli({"compute", "--ambient", "5", "--degrees", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["ambient"], 5);
  EXPECT_EQ(j["degrees"], nlohmann::json::array({3}));
  EXPECT_EQ(j["index"], 2);
  EXPECT_EQ(j["dim"], 3);
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][0]["standard"], "-1/2");
  EXPECT_EQ(j["rows"][0]["consistent"], true);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j["rows"][0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"b", "insertion_power", "standard", "reduced", "difference", "consistent"}));
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const CliRun& r : {cli({"compute", "--ambient", "7", "--degrees", "2,2", "--format", "json"}),
                       cli({"check", "--ambient", "5", "--degrees", "3", "--format", "json"}),
                       cli({"conjectures", "--ambient", "5", "--degrees", "3", "--format", "json"})}) {
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, DegreesAreSorted) {
  const CliRun a = cli({"compute", "--ambient", "6", "--degrees", "3,2", "--format", "json"});
  const CliRun b = cli({"compute", "--ambient", "6", "--degrees", "2,3", "--format", "json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvOutput) {
  const CliRun r = cli({"compute", "--ambient", "7", "--degrees", "2,2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "ambient,degrees,b,insertion_power,standard,reduced,difference,consistent\n"
            "7,\"2,2\",0,1,-1/2,-1/2,0,true\n"
            "7,\"2,2\",1,4,-4/3,0,-4/3,true\n"
            "7,\"2,2\",2,7,0,0,0,true\n");
}

TEST(Cli, TextOutput) {
  const CliRun r = cli({"compute", "--ambient", "5", "--degrees", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(5,(3))"), std::string::npos);
  EXPECT_NE(r.out.find("-1/2"), std::string::npos);
}

TEST(Cli, MaxBLimitsRows) {
  const CliRun r = cli({"compute", "--ambient", "5", "--degrees", "3", "--max-b", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["rows"].size(), 2u);
  // Rows stop at the top admissible degree.
  const CliRun c = cli({"compute", "--ambient", "5", "--degrees", "3", "--max-b", "9", "--format", "json"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["rows"].size(), 3u);
  EXPECT_EQ(cli({"compute", "--ambient", "5", "--degrees", "3", "--max-b", "-4"}).code, 1);
}

TEST(Cli, ExitCodeOneOnInvalidInput) {
  EXPECT_EQ(cli({"compute", "--ambient", "5", "--degrees", "1"}).code, 1);
  EXPECT_EQ(cli({"compute", "--ambient", "4", "--degrees", "2,2"}).code, 1);
  EXPECT_EQ(cli({"compute", "--ambient", "x", "--degrees", "3"}).code, 1);
  EXPECT_EQ(cli({"compute", "--degrees", "3"}).code, 1);
  EXPECT_EQ(cli({"frobnicate"}).code, 1);
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"compute", "--ambient", "5", "--degrees", "3", "--format", "xml"}).code, 1);
  EXPECT_EQ(cli({"compute", "--grid", "/nonexistent/grid.txt"}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, CheckPassesAndCorruptionFails) {
  const CliRun ok = cli({"check", "--ambient", "5", "--degrees", "3"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
  const CliRun bad = cli({"check", "--ambient", "5", "--degrees", "3", "--test-corrupt-ctilde", "2,0,1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("FAIL (5,(3)) convolution"), std::string::npos) << bad.out;
}

TEST(Cli, CheckOrderDoesNotChangeInvariants) {
  const CliRun a = cli({"compute", "--ambient", "7", "--degrees", "3", "--format", "json"});
  const CliRun b = cli({"compute", "--ambient", "7", "--degrees", "3", "--order", "4", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Deterministic) {
  const auto args = {std::string("compute"), std::string("--ambient"), std::string("6"),
                     std::string("--degrees"), std::string("2,3"), std::string("--format"), std::string("json")};
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const fs::path cfg = temp_file("run.cfg", "ambient=7\ndegrees=2,2\nformat=csv\n");
  const CliRun r = cli({"compute", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("7,\"2,2\",1,4,-4/3"), std::string::npos);
  const CliRun o = cli({"compute", "--config", cfg.string(), "--format", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(nlohmann::json::parse(o.out)["ambient"], 7);
}

TEST(Cli, GridFile) {
  const fs::path grid = temp_file("grid.txt", "# cases\n7:2,2\n5:3\n\n5:3\n");
  const CliRun r = cli({"compute", "--grid", grid.string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["ambient"], 5);
  EXPECT_EQ(j[1]["ambient"], 7);
  EXPECT_EQ(cli({"compute", "--grid", temp_file("bad_grid.txt", "7-2,2\n").string()}).code, 1);
  EXPECT_EQ(cli({"compute", "--grid", temp_file("bad_grid2.txt", "4:2,2\n").string()}).code, 1);
}

TEST(Cli, OutFile) {
  const fs::path out = fs::temp_directory_path() / "gwfano_cli_test" / "out.json";
  fs::remove(out);
  const CliRun r = cli({"compute", "--ambient", "5", "--degrees", "3", "--format", "json", "--out", out.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(out), cli({"compute", "--ambient", "5", "--degrees", "3", "--format", "json"}).out);
}

TEST(Cli, ConjecturesReport) {
  const CliRun r = cli({"conjectures", "--ambient", "7", "--degrees", "2,2", "--max-b", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("skipped: undefined symbol"), std::string::npos);
  const auto j = nlohmann::json::parse(
      cli({"conjectures", "--ambient", "7", "--degrees", "2,2", "--max-b", "2", "--format", "json"}).out);
  bool saw_lemma = false;
  for (const auto& row : j) {
    if (row["tier"] == "lemma") {
      saw_lemma = true;
      EXPECT_EQ(row["verdict"], "pass");
    }
    if (row["id"] == "V2") {
      EXPECT_EQ(row["verdict"], "agree");
    }
  }
  EXPECT_TRUE(saw_lemma);
}

TEST(Cli, HjTableFile) {
  const fs::path hj = temp_file("hj.txt", "# j d value\n1 3 1/2\n1 4 -2\n");
  const CliRun r = cli({"conjectures", "--ambient", "8", "--degrees", "3,4", "--max-b", "2", "--hj-table", hj.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("skipped: undefined symbol"), std::string::npos);
  EXPECT_EQ(cli({"conjectures", "--ambient", "5", "--degrees", "3", "--hj-table",
                 temp_file("bad_hj.txt", "1 3\n").string()})
                .code,
            1);
  EXPECT_EQ(cli({"conjectures", "--ambient", "5", "--degrees", "3", "--hj-table",
                 temp_file("bad_hj2.txt", "1 3 1/0\n").string()})
                .code,
            1);
}

#ifdef GWFANO_CLI_PATH
TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(std::system((std::string(GWFANO_CLI_PATH) + " compute --ambient 5 --degrees 3 > /dev/null").c_str()), 0);
  const int bad = std::system((std::string(GWFANO_CLI_PATH) + " compute --ambient 5 --degrees 1 2> /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(bad), 1);
  const int corrupt = std::system(
      (std::string(GWFANO_CLI_PATH) + " check --ambient 5 --degrees 3 --test-corrupt-ctilde 2,0,1 > /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(corrupt), 2);
}
#endif

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <ekchains_cli/commands.hpp>

using namespace ekcli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ekchains");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json without_timings(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("timings");
  return j;
}

std::string text_without_timings(const std::string& text) {
  return text.substr(0, text.find("\ntimings:\n"));
}

class TempDir {
public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ekchains-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return path_ / name;
  }
  const fs::path& path() const { return path_; }

private:
  fs::path path_;
};

} // namespace

TEST(Cli, EkChainS3Transposition) {
  TempDir dir;
  auto g = dir.write("s3.grp", "degree: 3\n(0 1)\n(0 1 2)\n");
  auto h = dir.write("h.grp", "degree: 3\n(0 1)\n");
  auto r = run({"ekchain", g.string(), h.string(), "--kmax", "3", "--format", "json-like"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  const Json& w = j["witnesses"][0]["data"];
  EXPECT_EQ(w["orders"], Json::array({6, 2, 2, 2}));
  EXPECT_EQ(w["guaranteed_stable"], true);
  EXPECT_EQ(w["stable_from"], 1);
}

TEST(Cli, EkChainD8Rotation) {
  TempDir dir;
  auto g = dir.write("d8.grp", "degree: 4\n(0 1 2 3)\n(1 3)\n");
  auto h = dir.write("r.grp", "degree: 4\n(0 1 2 3)\n");
  auto r = run({"ekchain", g.string(), h.string(), "--kmax", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["witnesses"][0]["data"]["orders"], Json::array({8, 4, 4, 4}));
  auto whole = run({"ekchain", g.string(), g.string(), "--kmax", "3", "--format", "json"});
  EXPECT_EQ(Json::parse(whole.out)["witnesses"][0]["data"]["orders"], Json::array({8, 8, 8, 8}));
}

TEST(Cli, EkChainErrors) {
  TempDir dir;
  auto g = dir.write("d8.grp", "degree: 4\n(0 1 2 3)\n(1 3)\n");
  auto bad = dir.write("bad.grp", "degree: 4\n(0 1 2 3)\n(1 3\n");
  auto out = dir.write("out.grp", "degree: 4\n(0 1)\n");
  auto r = run({"ekchain", g.string(), bad.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(run({"ekchain", g.string(), out.string()}).code, kExitUsage);
  EXPECT_EQ(run({"ekchain", g.string(), (dir.path() / "missing.grp").string()}).code, kExitUsage);
  EXPECT_EQ(run({"ekchain", g.string(), g.string(), "--cap", "3"}).code, kExitResource);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "lemmas"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"counterexample", "--levels", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"counterexample", "--oracle-depth", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, VerifyAllPassesAndIsDeterministic) {
  auto a = run({"verify", "--suite", "all", "--kmax", "4", "--format", "json-like"});
  auto b = run({"verify", "--suite", "all", "--kmax", "4", "--format", "json-like"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(without_timings(a.out), without_timings(b.out));
  Json j = Json::parse(a.out);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_GT(j["summary"]["pass"].get<int>(), 1000);
  for (const char* key : {"tool_version", "command", "checks", "witnesses", "timings"})
    EXPECT_TRUE(j.contains(key)) << key;

  auto t1 = run({"verify", "--suite", "bryant"});
  auto t2 = run({"verify", "--suite", "bryant"});
  EXPECT_EQ(text_without_timings(t1.out), text_without_timings(t2.out));
}

TEST(Cli, TextAndJsonCarryTheSameChecks) {
  auto t = run({"counterexample", "--levels", "4"});
  auto j = Json::parse(run({"counterexample", "--levels", "4", "--format", "json"}).out);
  for (const auto& c : j["checks"]) {
    std::string line = "[" + c["status"].get<std::string>() + "] " + c["id"].get<std::string>() +
                       ": " + c["claim"].get<std::string>();
    EXPECT_NE(t.out.find(line), std::string::npos) << line;
  }
  for (const auto& w : j["witnesses"])
    EXPECT_NE(t.out.find("  " + w["id"].get<std::string>() + ":\n"), std::string::npos);
}

TEST(Cli, SuitesSelectChecks) {
  auto j = Json::parse(run({"verify", "--suite", "nilpotent", "--format", "json"}).out);
  for (const auto& c : j["checks"]) {
    auto id = c["id"].get<std::string>();
    EXPECT_TRUE(id.find("nilpotent.") != std::string::npos ||
                id.find("catalog.order") != std::string::npos)
        << id;
  }
}

TEST(Cli, CatalogDirOverride) {
  TempDir dir;
  dir.write("C5.grp", "# order: 5\ndegree: 5\n(0 1 2 3 4)\n");
  dir.write("Bad.grp", "# order: 7\ndegree: 3\n(0 1)\n");
  dir.write("notes.txt", "ignored");
  auto r = run({"verify", "--catalog-dir", dir.path().string(), "--format", "json"});
  EXPECT_EQ(r.code, kExitFailures);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["witnesses"].size(), 2u);
  EXPECT_EQ(j["witnesses"][0]["id"], "group/Bad");
  EXPECT_EQ(j["witnesses"][1]["id"], "group/C5");
  bool saw_fail = false;
  for (const auto& c : j["checks"])
    if (c["status"] == "fail") {
      saw_fail = true;
      EXPECT_EQ(c["id"], "Bad/catalog.order");
    }
  EXPECT_TRUE(saw_fail);

  auto missing = run({"verify", "--catalog-dir", (dir.path() / "nope").string()});
  EXPECT_EQ(missing.code, kExitUsage);
}

TEST(Cli, CatalogExportRoundTrips) {
  TempDir dir;
  auto r = run({"catalog", "--export", dir.path().string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto a = run({"verify", "--suite", "bryant", "--format", "json"});
  auto b = run({"verify", "--suite", "bryant", "--catalog-dir", dir.path().string(), "--format",
                "json"});
  Json ja = without_timings(a.out), jb = without_timings(b.out);
  EXPECT_EQ(ja["checks"], jb["checks"]);
  EXPECT_EQ(ja["witnesses"], jb["witnesses"]);
}

TEST(Cli, VerifyCapIsResourceError) {
  auto r = run({"verify", "--cap", "10"});
  EXPECT_EQ(r.code, kExitResource);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
  EXPECT_NE(r.out.find("summary:"), std::string::npos);
}

TEST(Cli, CounterexampleLevelsTwo) {
  auto r = run({"counterexample", "--levels", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  Json levels, descent;
  for (const auto& w : j["witnesses"]) {
    if (w["id"] == "levels")
      levels = w["data"];
    if (w["id"] == "descent.0")
      descent = w["data"];
  }
  EXPECT_EQ(levels["sizes"], Json::array({2, 4}));
  EXPECT_EQ(descent["commutator"], "(0 1)(2 3)");
  EXPECT_EQ(descent["g_points"], "(0 2)(1 3)");
  EXPECT_EQ(descent["h"], "|0110");
}

TEST(Cli, CounterexampleBudgetGivesPartialReport) {
  auto r = run({"counterexample", "--levels", "12", "--cap", "5000", "--format", "json"});
  EXPECT_EQ(r.code, kExitResource);
  Json j = Json::parse(r.out);
  EXPECT_TRUE(j.contains("error"));
  EXPECT_GT(j["checks"].size(), 0u);
}

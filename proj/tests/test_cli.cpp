#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(BRUHAT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, OrbitsB2) {
  const CliRun r = run("orbits --type B2 --word j,i,j,i");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["schema"], "1");
  EXPECT_EQ(j["orbit_count"], 8);
  EXPECT_EQ(j["m"], 4);
}

TEST(Cli, OrbitsG2AndSelectors) {
  EXPECT_EQ(json_of(run("orbits --type G2 --word j,i,j,i,j,i"))["orbit_count"], 11);
  EXPECT_EQ(json_of(run("orbits --type A2 --uv e,w0"))["orbit_count"], 6);
  const auto listed = json_of(run("orbits --type B2 --word j,i,j,i --list"));
  EXPECT_EQ(listed["orbits"].size(), 8u);
  const auto all = json_of(run("orbits --type A3 --uv e,w0 --all-words"));
  EXPECT_EQ(all["invariant"], true);
  EXPECT_EQ(all["orbit_count"], 20);
  EXPECT_EQ(all["word_count"], 16);
}

TEST(Cli, OrbitFormats) {
  const CliRun csv = run("orbits --type B2 --word j,i,j,i --format csv");
  ASSERT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out.rfind("representative,size\n", 0), 0u);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 9);
  EXPECT_EQ(run("orbits --type B2 --word j,i,j,i --format dot").status, 1);
}

TEST(Cli, SigmaD4E6) {
  const CliRun r = run("sigma --type D4 --word 1,2,3,1,2,3,4,3,1,2,3,4 --check-e6");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["e6_compatible"], true);
  EXPECT_EQ(j["e6_witness"].size(), 6u);
  const CliRun dot = run("sigma --type B2 --word j,i,j,i --format dot");
  EXPECT_EQ(dot.out.rfind("digraph sigma {", 0), 0u);
}

TEST(Cli, VerifyDodgson) {
  const CliRun r = run("verify dodgson --group SL3 --trials 100 --seed 7");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["failure_count"], 0);
  EXPECT_EQ(j["trials"], 100);
  const CliRun swapped = run("verify dodgson --group SL3 --trials 2 --seed 7 --swapped-rhs");
  EXPECT_EQ(swapped.status, 1);
  EXPECT_GT(json_of(swapped)["failure_count"].get<int>(), 0);
}

TEST(Cli, VerifyRoundtripSL4) {
  const CliRun r = run("verify roundtrip --group SL4 --uv w0,w0 --trials 25 --seed 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["failure_count"], 0);
}

TEST(Cli, VerifyOtherChecks) {
  for (const char* args : {"verify mprime --trials 3", "verify nonmixed --trials 3", "verify hexagon --trials 3",
                           "verify cone --type G2 --uv w0,w0", "verify signs --group SP4 --word 1,2,1,2"})
    EXPECT_EQ(run(args).status, 0) << args;
}

TEST(Cli, Table) {
  const CliRun r = run("table");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  ASSERT_EQ(j["rows"].size(), 11u);
  for (const auto& row : j["rows"])
    if (row["type"] != "E6") EXPECT_EQ(row["status"], "match") << row.dump();
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"orbits --type G2 --word j,i,j,i,j,i --list", "verify hexagon --trials 4 --seed 11",
                           "sigma --type A3 --uv w0,w0 --format dot"})
    EXPECT_EQ(run(args).out, run(args).out) << args;
}

TEST(Cli, BadInputFails) {
  EXPECT_EQ(run("orbits --type X9 --uv e,w0").status, 1);
  EXPECT_EQ(run("orbits --type A2 --word 1,1").status, 1);
  EXPECT_EQ(run("orbits --type A2").status, 1);
  EXPECT_EQ(run("orbits --type E6 --uv e,w0").status, 1);
  EXPECT_EQ(run("verify nosuchcheck").status, 1);
  EXPECT_EQ(run("verify dodgson --trials 0").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
}

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs raagout with the given argument string through the shell. stderr is
// folded into the captured output only when merge is set.
Run raagout(const std::string& args, bool merge = false) {
  std::string cmd = std::string("cd '") + RAAG_FIXTURE_DIR + "' && '" + RAAGOUT_PATH + "' " + args;
  if (merge) cmd += " 2>&1";
  else cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, DecideGamma3) {
  const auto r = raagout("decide gamma3.json");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["pso_status"], "yes");
  EXPECT_EQ(j["rule"], "beingAHcor");
}

TEST(Cli, GenPipedIntoDecide) {
  const auto r = raagout("gen gamma 2 4 3 | '" + std::string(RAAGOUT_PATH) + "' decide -");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["pso_status"], "yes");
}

TEST(Cli, DecideTwoAdditional) {
  const auto r = raagout("decide two_additional.json");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["out_status"], "no");
  EXPECT_EQ(j["rule"], "withaddcpnts");
}

TEST(Cli, VerdictDoesNotAffectExitStatus) {
  EXPECT_EQ(raagout("decide k3.json").status, 0);
  EXPECT_EQ(raagout("decide k2.json").status, 0);
  EXPECT_EQ(raagout("decide gamma1.json").status, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(raagout("").status, 2);
  EXPECT_EQ(raagout("frobnicate").status, 2);
  EXPECT_EQ(raagout("gen gamma 2 4").status, 2);
  EXPECT_EQ(raagout("presentation k2.json --format yaml").status, 2);
  EXPECT_EQ(raagout("decide does_not_exist.json").status, 1);
  EXPECT_EQ(raagout("gen lambda 1").status, 1);
  EXPECT_EQ(raagout("gen named nothing").status, 2);
  const auto bad = raagout("analyze - < self_loop.json", true);
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("self-loop"), std::string::npos);
}

TEST(Cli, VersionAndHelp) {
  const auto v = raagout("--version");
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(v.out, std::string(RAAG_VERSION_STRING) + "\n");
  const auto h = raagout("--help");
  EXPECT_EQ(h.status, 0);
  EXPECT_NE(h.out.find("decide"), std::string::npos);
}

TEST(Cli, PresentationFormats) {
  const auto text = raagout("presentation gamma3.json --format text");
  const auto gap = raagout("presentation gamma3.json --format gap");
  const auto js = raagout("presentation gamma3.json --format json");
  ASSERT_EQ(text.status, 0);
  ASSERT_EQ(gap.status, 0);
  ASSERT_EQ(js.status, 0);
  EXPECT_NE(gap.out.find("FreeGroup("), std::string::npos);
  EXPECT_NO_THROW(json_of(js));
  EXPECT_NE(text.out, gap.out);
}

TEST(Cli, McCsv) {
  const auto r = raagout("mc --n 10,12 --p 0.5 --samples 5 --seed 1 --threads 2");
  ASSERT_EQ(r.status, 0);
  const std::string header =
      "n,p,samples,seed,freq_connected,freq_no_sil,freq_no_equiv_pair,freq_single_equiv_pair,out_yes,out_no,"
      "out_unknown,mean_order_pairs\n";
  ASSERT_EQ(r.out.rfind(header, 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(raagout("mc --n 10,12 --p 0.5 --samples 5 --seed 1 --threads 1").out, r.out);
}

TEST(Cli, ByteStable) {
  for (const char* args : {"analyze gamma3.json", "decide gamma2.json", "presentation two_additional.json --format json",
                           "gen gnp 12 0.4 --seed 9", "gen lambda 3 --format dot"}) {
    const auto a = raagout(args);
    const auto b = raagout(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(Cli, DotInputAndOutFlag) {
  const auto dot = raagout("gen named gamma3 --format dot");
  ASSERT_EQ(dot.status, 0);
  const auto via_dot = raagout("gen named gamma3 --format dot | '" + std::string(RAAGOUT_PATH) + "' decide -");
  EXPECT_EQ(via_dot.out, raagout("decide gamma3.json").out);
  const std::string path = ::testing::TempDir() + "raag_cli_out.json";
  EXPECT_EQ(raagout("decide gamma3.json --out '" + path + "'").status, 0);
  FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::fclose(f);
  std::remove(path.c_str());
}

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kCli = GENMAP3_CLI_PATH;
const std::string kData = GENMAP3_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check " + kData + "/s3_identity.json").code, 0);
  EXPECT_EQ(run("check " + kData + "/s3_vertex_link.json").code, 0);
  EXPECT_EQ(run("check " + kData + "/t3_coordinate_torus.json").code, 1);
}

TEST(Cli, CheckJsonReport) {
  auto r = run("check --json " + kData + "/t3_coordinate_torus.json");
  ASSERT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["realizable"].get<bool>());
  EXPECT_FALSE(j["cond1"]["holds"].get<bool>());
  auto trailing = run(std::string("check ") + kData + "/t3_coordinate_torus.json --json");
  EXPECT_EQ(trailing.out, r.out);
}

TEST(Cli, InvalidInputsExitTwo) {
  EXPECT_EQ(run("check /nonexistent.json").code, 2);
  EXPECT_EQ(run("check " + temp_file("bad.json", "{\"m_facets\": [[0,1,2]]}")).code, 2);
  EXPECT_EQ(run("check " + temp_file("garbage.json", "garbage")).code, 2);
  EXPECT_EQ(run("check " + temp_file("open.json",
                                     R"({"m_facets": [[0,1,2,3]], "n_facets": [[0,1,2,3]],)"
                                     R"( "vertex_map": [0,1,2,3]})"))
                .code,
            2);
  EXPECT_EQ(run("builtin K3").code, 2);
  EXPECT_EQ(run("homology " + kData + "/s3_identity.json --dim 7").code, 2);
  EXPECT_EQ(run("morin --model umbilic").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, BuiltinEmitFeedsCheck) {
  auto emitted = run("builtin RP2xS1 --emit");
  ASSERT_EQ(emitted.code, 0);
  auto path = temp_file("rp2xs1.json", emitted.out);
  EXPECT_EQ(run("check " + path).code, 0);
  auto classes = run("classes --json " + path);
  ASSERT_EQ(classes.code, 0);
  auto j = nlohmann::json::parse(classes.out);
  EXPECT_EQ(j["M"]["betti"], nlohmann::json::array({1, 2, 2, 1}));
  EXPECT_FALSE(j["M"]["w1_zero"].get<bool>());
}

TEST(Cli, HomologyReport) {
  auto r = run("homology --json " + kData + "/t3_coordinate_torus.json --dim 2");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["betti"].get<int>(), 3);
  EXPECT_EQ(j["basis"].size(), 3u);
  auto text = run("homology " + kData + "/s3_identity.json --dim 3");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("= 1"), std::string::npos);
}

TEST(Cli, MorinReport) {
  auto r = run("morin --model cusp --grid 5 --json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["mismatches"].get<int>(), 0);
}

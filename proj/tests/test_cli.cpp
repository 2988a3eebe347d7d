#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

#include "grpfun/group_io.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen((std::string(GRPFUN_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  while (pipe && std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pipe ? pclose(pipe) : -1;
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

grpfun::Json json(const Run& r) { return grpfun::Json::parse(r.out); }

}  // namespace

TEST(Cli, CensusZ3IntoS3) {
  const auto r = cli("census --domain cyclic:3 --codomain symmetric:3");
  ASSERT_EQ(r.status, 0);
  const auto j = json(r);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["result"]["total"], 36);
}

TEST(Cli, CauchyAndSylow) {
  auto j = json(cli("cauchy --group symmetric:3 --prime 3"));
  EXPECT_TRUE(j["ok"].get<bool>());
  j = json(cli("sylow --group symmetric:4 --prime 2"));
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["result"]["subgroup_order"], 8);
}

TEST(Cli, TransferIntoQuotient) {
  const auto r = cli("transfer --group cyclic:6 --subgroup 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_FALSE(json(r)["result"]["is_trivial"].get<bool>());
}

TEST(Cli, LiftThroughSign) {
  const auto r = cli("lift --extension symmetric:3 --normal 3 --domain cyclic:2 --hom 1");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(json(r)["result"]["conjugacy_class_size_of_image"], 3);
}

TEST(Cli, PreconditionExitsOne) {
  const auto r = cli("cauchy --group symmetric:3 --prime 5");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(json(r).contains("error"));
}

TEST(Cli, SizeLimitExitsThree) {
  EXPECT_EQ(cli("census --domain cyclic:7 --codomain symmetric:4 --cap 1000").status, 3);
}

TEST(Cli, ParseErrorExitsOne) { EXPECT_EQ(cli("census --domain cyclic:3").status, 1); }

TEST(Cli, SelfcheckWithFixtures) {
  const std::string dir = GRPFUN_FIXTURES;
  const auto r = cli("selfcheck --fixture " + dir + "/symmetric3_table.json --fixture " + dir +
                     "/sign_homomorphism.json --fixture " + dir + "/a4_lift.json");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(json(r)["ok"].get<bool>());
}

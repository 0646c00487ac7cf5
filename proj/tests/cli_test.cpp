#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "temp_dir.hpp"

namespace {

int run(const std::string& args) {
  const std::string command = std::string(LYRICA_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ExitCodes) {
  lyrica::testing::TempDir dir("cli");
  const auto d = dir.path().string();
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("--no-such-flag"), 2);
  EXPECT_EQ(run("stats"), 2);
  EXPECT_EQ(run("run " + d + "/missing.toml"), 2);

  lyrica::testing::write_file(dir / "bad.jsonl", "{\"id\": \"a\"}\n");
  EXPECT_EQ(run("stats -c " + d + "/bad.jsonl"), 3);
  EXPECT_EQ(run("stats -c " + d + "/absent.jsonl"), 3);

  lyrica::testing::write_file(dir / "bad.toml", "corpus = \n");
  EXPECT_EQ(run("run " + d + "/bad.toml"), 2);
  lyrica::testing::write_file(dir / "unknown.toml", "colour = \"red\"\n");
  EXPECT_EQ(run("run " + d + "/unknown.toml"), 2);
}

TEST(Cli, SynthThenAnnotate) {
  lyrica::testing::TempDir dir("cli-run");
  const auto d = dir.path().string();
  ASSERT_EQ(run("synth --kind full -n 60 --seed 3 -o " + d + "/songs.jsonl"), 0);
  EXPECT_EQ(run("stats -c " + d + "/songs.jsonl -o " + d + "/stats"), 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "stats/stats_genre.csv"));
  EXPECT_EQ(run("explicit induce -c " + d + "/songs.jsonl -n 8 --min-df 1 -o " + d + "/dict.json"), 0);
  EXPECT_EQ(run("explicit eval -c " + d + "/songs.jsonl -d " + d + "/dict.json"), 0);
  EXPECT_EQ(run("explicit eval -c " + d + "/songs.jsonl"), 2);
  EXPECT_EQ(run("topics train -c " + d + "/songs.jsonl --k 3 --iterations 5 -o " + d + "/lda.json"), 0);

  lyrica::testing::write_file(dir / "run.toml",
                              "corpus = \"songs.jsonl\"\noutput_dir = \"out\"\ntrain_missing = true\n[topics]\nk = 3\n"
                              "iterations = 5\n");
  EXPECT_EQ(run("run " + d + "/run.toml"), 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "out/annotations.jsonl"));
  EXPECT_EQ(run("run " + d + "/run.toml --set stages=ssm,dance"), 2);
  EXPECT_EQ(run("diachronic -c " + d + "/songs.jsonl -a " + d + "/out/annotations.jsonl -o " + d + "/dia"), 0);
}

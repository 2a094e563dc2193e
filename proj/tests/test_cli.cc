#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef PETERSEN_CENSUS_BIN
#error "PETERSEN_CENSUS_BIN must name the CLI binary"
#endif

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PETERSEN_CENSUS_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool has(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

TEST(Cli, Census) {
  const CliRun r = run("census");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "32768"));
  EXPECT_TRUE(has(r.out, "l0 != l for 0 signatures"));
}

TEST(Cli, Tables) {
  const CliRun t2 = run("table T2");
  EXPECT_EQ(t2.status, 0);
  EXPECT_TRUE(has(t2.out, "l    0   1    2    2    3    3"));
  EXPECT_EQ(run("table T8 --format csv").out,
            "label,+P,P1,P22,P23,P32,P33\nchi,1,1,1,1,1,1\nchi*,2,2,2,2,2,1\n");
  const CliRun j = run("table T10 --format json");
  EXPECT_EQ(j.status, 0);
  EXPECT_TRUE(has(j.out, "\"table\": \"T10\""));
  EXPECT_EQ(run("table T10 --format json").out, j.out);
  EXPECT_EQ(run("table T6").status, 2);
  EXPECT_EQ(run("table T2 --format xml").status, 2);
}

TEST(Cli, Classify) {
  const CliRun r = run("classify --mask 0x7FFF");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "class P33"));
  EXPECT_EQ(run("classify --mask 0x8000").status, 2);
  EXPECT_EQ(run("classify --mask 0x1 --file x").status, 2);
  EXPECT_EQ(run("classify").status, 2);
  EXPECT_EQ(run("classify --file /nonexistent").status, 2);

  const std::string path = ::testing::TempDir() + "k4.txt";
  std::ofstream(path) << "n 4\n0 1 -\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  EXPECT_EQ(run("classify --file " + path).status, 2);
  EXPECT_EQ(run("cluster --file " + path).status, 0);
  std::remove(path.c_str());
}

TEST(Cli, Group) {
  const CliRun r = run("group --mask 0x2880 --coset-table");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "SwAut 60 A5"));
  EXPECT_TRUE(has(r.out, "Aut   6 S3"));
  EXPECT_TRUE(has(r.out, "r9 * r9 = "));
}

TEST(Cli, ColorAndCluster) {
  const CliRun c = run("color --mask 0x0 --k 2");
  EXPECT_EQ(c.status, 0);
  EXPECT_TRUE(has(c.out, "332880"));
  EXPECT_TRUE(has(run("color --mask 0x49 --k 2 --zero-free").out, "15372"));
  EXPECT_EQ(run("color --mask 0x0 --k 3").status, 2);
  const CliRun cl = run("cluster --mask 0x7FFF");
  EXPECT_EQ(cl.status, 0);
  EXPECT_TRUE(has(cl.out, "clun 3"));
}

TEST(Cli, Verify) {
  const CliRun r = run("verify");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "0 differ"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

}  // namespace

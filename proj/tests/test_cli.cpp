#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(QMINK_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  const int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST(Cli, VerifyDefaultsPass) {
  const CliResult r = run("verify --jmax 3 --nrange -5:5 --Mrange -2:2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("0 fail, 0 inconclusive"), std::string::npos);
}

TEST(Cli, VerifyUnattainableTolerance) {
  const CliResult r = run("verify --jmax 3 --nrange -5:5 --Mrange -2:2 --tol 1e-16");
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyLightListsMomentaAsNotRepresentable) {
  const CliResult r = run("verify --sector light --jmax 3 --nrange -5:5 --report json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"schema\": 1"), std::string::npos);
  EXPECT_GT(count(r.out, "not representable"), 10u);
}

TEST(Cli, Obstruction) {
  const CliResult r = run("obstruction --q 1.1 --tau0 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: no solution"), std::string::npos);
  EXPECT_NE(run("obstruction --sector time+").code, 0);
}

TEST(Cli, SpectrumCsvRoundTrip) {
  const double q = 1.1;
  const CliResult r = run("spectrum --q 1.1 --nmax 20 --Mrange -4:4 --format csv");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "sector,M,n,t,r");
  std::size_t rows = 0;
  bool apex = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string sector, M, n, t, rr;
    std::getline(ls, sector, ',');
    std::getline(ls, M, ',');
    std::getline(ls, n, ',');
    std::getline(ls, t, ',');
    std::getline(ls, rr, ',');
    const double tv = std::stod(t), rv = std::stod(rr);
    const double s2 = (sector == "space" ? -1.0 : 1.0) * std::pow(q, 2 * std::stoi(M));
    EXPECT_NEAR(tv * tv - rv * rv, s2, 1e-12 * (1 + tv * tv)) << line;
    if (sector == "time+" && M == "0" && n == "0") apex = tv == 1.0 && rv == 0.0;
    ++rows;
  }
  EXPECT_EQ(rows, 9u * (21 + 21 + 41));
  EXPECT_TRUE(apex);
}

TEST(Cli, SpectrumSvg) {
  const CliResult csv = run("spectrum --nmax 10 --Mrange -2:2 --format csv");
  const CliResult svg = run("spectrum --nmax 10 --Mrange -2:2 --format svg");
  ASSERT_EQ(svg.code, 0);
  EXPECT_EQ(count(svg.out, "class=\"point\""), count(csv.out, "\n") - 1);
  EXPECT_NE(svg.out.find("light-cone"), std::string::npos);
  EXPECT_EQ(svg.out.rfind("</svg>"), svg.out.size() - 7);
}

TEST(Cli, Deterministic) {
  for (const char* args : {"spectrum --format json --nmax 6", "tensors", "dump-op --op X+ --jmax 2 --nrange -2:2 --format json",
                           "verify --jmax 2 --nrange -4:4 --Mrange -1:1 --report json"}) {
    const CliResult a = run(args);
    const CliResult b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(Cli, DumpOp) {
  const CliResult a = run("dump-op --op U --jmax 1 --nrange -1:1 --Mrange 0:0");
  const CliResult b = run("dump-op U --jmax 1 --nrange -1:1 --Mrange 0:0");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("row,col,re,im\n", 0), 0u);
  EXPECT_NE(run("dump-op --op Nope").code, 0);
  EXPECT_NE(run("dump-op").code, 0);
}

TEST(Cli, BadInput) {
  EXPECT_NE(run("spectrum --q 0.9").code, 0);
  EXPECT_NE(run("spectrum --sector diagonal").code, 0);
  EXPECT_NE(run("verify --nrange 3:1").code, 0);
  EXPECT_NE(run("spectrum --format png").code, 0);
}

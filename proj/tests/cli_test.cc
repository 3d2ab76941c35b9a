#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace klab::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "kneser-lab");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const char* env = std::getenv("KLAB_TEST_TMP");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "klab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, Bound) {
  const Outcome r = cli({"bound", "5", "2", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "m=3 s=3 n-s+1=3\n");
  const Outcome j = cli({"bound", "6", "3", "3", "--format", "json"});
  EXPECT_EQ(j.code, kOk);
  EXPECT_NE(j.out.find("\"m\": 3"), std::string::npos);
}

TEST(Cli, BoundInadmissible) {
  const Outcome r = cli({"bound", "4", "3", "2"});
  EXPECT_EQ(r.code, kBadParams);
  EXPECT_NE(r.err.find("inadmissible"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, BadArguments) {
  EXPECT_EQ(cli({}).code, kBadParams);
  EXPECT_EQ(cli({"frobnicate"}).code, kBadParams);
  EXPECT_EQ(cli({"bound", "5", "2"}).code, kBadParams);
  EXPECT_EQ(cli({"bound", "5", "2", "2", "--nope"}).code, kBadParams);
  EXPECT_EQ(cli({"bound", "5", "7", "2"}).code, kBadParams);
  EXPECT_EQ(cli({"bound", "5", "2", "1"}).code, kBadParams);
  EXPECT_EQ(cli({"chi", "6", "2", "3", "--parts", "1,2/2,3/4,5,6"}).code, kBadParams);
  EXPECT_EQ(cli({"verify", scratch("does-not-exist.json").string()}).code, kBadParams);
}

TEST(Cli, SizeCap) {
  EXPECT_EQ(cli({"construct", "70", "2", "2"}).code, kSizeCap);
}

TEST(Cli, ConstructAndVerify) {
  const fs::path path = scratch("p522.json");
  const Outcome c = cli({"construct", "5", "2", "2", "-o", path.string()});
  ASSERT_EQ(c.code, kOk);
  const Outcome v = cli({"verify", path.string()});
  EXPECT_EQ(v.code, kOk);
  EXPECT_EQ(v.out.rfind("ok: ", 0), 0u);
  // Same bytes on stdout.
  EXPECT_EQ(cli({"construct", "5", "2", "2"}).out, slurp(path));
}

TEST(Cli, VerifyRejectsTamperedCertificate) {
  const fs::path path = scratch("tampered.json");
  std::ofstream(path) << R"({"format": "kneser-lab/1", "n": 4, "k": 2, "r": 2,
    "families": [[[1, 2], [3, 4]], [[1, 3], [1, 4], [2, 3], [2, 4]]]})";
  const Outcome v = cli({"verify", path.string()});
  EXPECT_EQ(v.code, kVerificationFailed);
  EXPECT_EQ(v.out.rfind("FAILED: ", 0), 0u);
  const Outcome j = cli({"verify", path.string(), "--format", "json"});
  EXPECT_EQ(j.code, kVerificationFailed);
  EXPECT_NE(j.out.find("\"ok\": false"), std::string::npos);

  // Unparseable documents count as failed verification.
  std::ofstream(path) << "{ not json";
  const Outcome bad = cli({"verify", path.string()});
  EXPECT_EQ(bad.code, kVerificationFailed);
  EXPECT_NE(bad.err.find("MalformedCertificate"), std::string::npos) << bad.err;
}

TEST(Cli, SolveIsReproducible) {
  const fs::path a = scratch("solve_a.json");
  const fs::path b = scratch("solve_b.json");
  const Outcome r1 = cli({"solve", "6", "2", "3", "-o", a.string()});
  const Outcome r2 = cli({"solve", "6", "2", "3", "-o", b.string()});
  ASSERT_EQ(r1.code, kOk);
  EXPECT_EQ(r1.out, r2.out);
  EXPECT_EQ(r1.out.rfind("EXACT 5 ", 0), 0u);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(cli({"verify", a.string()}).code, kOk);
  EXPECT_EQ(cli({"--format", "json", "solve", "6", "2", "3"}).out, slurp(a));
  EXPECT_EQ(cli({"solve", "6", "2", "3", "--format", "json"}).out, slurp(a));
}

TEST(Cli, SolveBudget) {
  const Outcome r = cli({"solve", "7", "2", "2", "--max-nodes", "1"});
  EXPECT_EQ(r.code, kTimeout);
  EXPECT_EQ(r.out.rfind("BOUNDS [", 0), 0u);
  const Outcome csv = cli({"solve", "5", "2", "2", "--format", "csv"});
  EXPECT_EQ(csv.code, kOk);
  EXPECT_EQ(csv.out.rfind("status,lower,upper,nodes\nEXACT,3,3,", 0), 0u);
}

TEST(Cli, Chi) {
  EXPECT_EQ(cli({"chi", "5", "2", "2"}).out.rfind("EXACT 3 ", 0), 0u);
  EXPECT_EQ(cli({"chi", "8", "2", "2", "--stable", "2"}).out.rfind("EXACT 6 ", 0), 0u);
  EXPECT_EQ(cli({"chi", "6", "2", "3", "--parts", "1,2/3,4/5,6"}).out.rfind("EXACT 2 ", 0), 0u);
  EXPECT_EQ(cli({"chi"}).code, kBadParams);

  const fs::path res = scratch("chi_sg.json");
  ASSERT_EQ(cli({"chi", "7", "2", "2", "--stable", "2", "-o", res.string()}).code, kOk);
  EXPECT_EQ(cli({"verify", res.string()}).code, kOk);
}

TEST(Cli, KneserDocumentAndChiInput) {
  const fs::path path = scratch("kg.json");
  ASSERT_EQ(cli({"kneser", "5", "2", "2", "-o", path.string()}).code, kOk);
  EXPECT_EQ(cli({"verify", path.string()}).code, kOk);
  EXPECT_EQ(cli({"chi", "--input", path.string()}).out.rfind("EXACT 3 ", 0), 0u);
}

TEST(Cli, Blowup) {
  const fs::path part = scratch("p423.json");
  const fs::path col = scratch("c423.json");
  ASSERT_EQ(cli({"construct", "4", "2", "3", "-o", part.string()}).code, kOk);
  const Outcome b = cli({"blowup", part.string(), "-o", col.string()});
  ASSERT_EQ(b.code, kOk);
  EXPECT_NE(b.out.find("vertices=24 colors=3 proper=yes stable-embedding=ok"), std::string::npos);
  const Outcome v = cli({"verify", col.string()});
  EXPECT_EQ(v.code, kOk);
  EXPECT_EQ(v.out.rfind("ok: coloring certificate ground_n=8, 24 vertices, 3 colors", 0), 0u);
}

TEST(Cli, Table) {
  const Outcome r = cli({"table", "--r", "2..3", "--k", "1..2", "--n", "auto", "--span", "1"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("n,k,r,tight_bound,solver_status,", 0), 0u);
  EXPECT_EQ(r.out.find(",no\n"), std::string::npos);
  std::size_t rows = 0;
  for (char c : r.out) rows += c == '\n';
  EXPECT_EQ(rows, 1u + 8u);
}

}  // namespace
}  // namespace klab::cli

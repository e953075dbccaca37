#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "cli.hpp"
#include "pcnlab/search/search.hpp"

using namespace pcnlab;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"pcn-lab"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Classify) {
  auto r = run({"classify", "7", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "CompletelyBasic(m_divides_q_minus_1)\n");
  EXPECT_EQ(run({"classify", "8", "6"}).out, "NotCompletelyBasic\n");
  EXPECT_EQ(run({"classify", "6", "4"}).code, 2);
  EXPECT_EQ(run({"classify", "7", "0"}).code, 2);
  EXPECT_EQ(run({"classify", "7"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BoundsExitCodes) {
  EXPECT_EQ(run({"bounds", "COND2", "8", "6"}).code, 1);
  EXPECT_EQ(run({"bounds", "COND2", "1259", "6"}).code, 0);
  EXPECT_EQ(run({"bounds", "IP_PCN2", "1", "3", "8"}).code, 1);
  EXPECT_EQ(run({"bounds", "IP_PCN2", "1", "45", "64"}).code, 0);
  EXPECT_EQ(run({"bounds", "NOPE", "8", "6"}).code, 2);
  EXPECT_EQ(run({"bounds", "COND2", "8"}).code, 2);
  auto r = run({"bounds", "COND2", "8", "6", "--explain", "--format", "json"});
  EXPECT_NE(r.out.find("\"schema\": \"pcn-lab/1\""), std::string::npos);
  EXPECT_NE(r.out.find("\"verdict\": \"fails\""), std::string::npos);
  EXPECT_NE(r.err.find("4514.7"), std::string::npos);
}

TEST(Cli, EnvironmentAndFlagPrecedence) {
  ::setenv("PCNLAB_FORMAT", "csv", 1);
  EXPECT_EQ(run({"classify", "7", "6"}).out, "q,n,completely_basic,reason\n7,6,true,m_divides_q_minus_1\n");
  EXPECT_EQ(run({"classify", "7", "6", "--format", "text"}).out, "CompletelyBasic(m_divides_q_minus_1)\n");
  ::unsetenv("PCNLAB_FORMAT");
  ::setenv("PCNLAB_N_MAX", "20", 1);
  auto r = run({"table1", "--format", "csv"});
  EXPECT_EQ(r.out, "n,q0,q1\n6,8,1259\n8,11,431\n10,13,223\n12,16,419\n14,16,107\n15,17,79\n16,19,137\n18,23,179\n20,23,139\n");
  ::unsetenv("PCNLAB_N_MAX");
}

TEST(Cli, PipelineJsonRoundTrip) {
  auto r = run({"pipeline", "thm1", "--format", "json", "--n-max", "100", "--robin-scan-max", "50"});
  ASSERT_EQ(r.code, 0);
  const auto p = cli::pipeline_from_json(r.out);
  EXPECT_EQ(cli::emit(p, cli::Format::kJson), r.out);
  EXPECT_EQ(p.stage("table1").rows.front(), (std::vector<std::uint64_t>{6, 8, 1259}));

  auto csv = run({"pipeline", "thm1", "--format", "csv", "--n-max", "100", "--robin-scan-max", "50", "--stage",
                  "rows_above_984"});
  EXPECT_EQ(csv.out, "n\n");  // empty list: header only
}

TEST(Cli, SearchAndVerify) {
  auto r = run({"search", "8", "6", "--format", "json", "--strategy", "exhaustive"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(search::verify_certificate(search::certificate_from_json(r.out)).ok);
  EXPECT_EQ(run({"search", "8", "6", "--format", "json", "--seed", "5"}).out,
            run({"search", "8", "6", "--format", "json", "--seed", "5"}).out);

  const std::string path = ::testing::TempDir() + "cert86.json";
  std::ofstream(path) << r.out;
  EXPECT_EQ(run({"verify", path.c_str()}).code, 0);
  std::string bad = r.out;
  bad.replace(bad.find("\"holds\": true"), 13, "\"holds\": false");
  std::ofstream(path) << bad;
  EXPECT_EQ(run({"verify", path.c_str()}).code, 1);
  std::ofstream(path) << "{";
  EXPECT_EQ(run({"verify", path.c_str()}).code, 2);
  EXPECT_EQ(run({"verify", "/nonexistent/cert.json"}).code, 2);
  // the first element visited is 1, which is not primitive
  EXPECT_EQ(run({"search", "5", "4", "--strategy", "exhaustive", "--max-trials", "1"}).code, 2);
}

TEST(Cli, CountAndChars) {
  auto r = run({"count", "2", "2", "--format", "csv"});
  EXPECT_EQ(r.out, "q,n,size,primitive,cn,pcn\n2,2,4,2,2,2\n");
  EXPECT_EQ(run({"count", "2", "30", "--enumeration-cap", "1024"}).code, 2);
  EXPECT_EQ(run({"chars-selftest", "3", "1", "2"}).code, 0);
  EXPECT_EQ(run({"chars-selftest", "2", "1", "13"}).code, 2);
  EXPECT_EQ(run({"chars-selftest", "4", "1", "2"}).code, 2);
}

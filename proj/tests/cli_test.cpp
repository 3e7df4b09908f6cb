#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "codecalc_cli/cli.hpp"
#include "codecalc_cli/corpus.hpp"
#include "codecalc_cli/json_io.hpp"

namespace codecalc::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("codecalc_cli_test_" + name)).string();
}

TEST(Cli, DocumentedExamples) {
  EXPECT_EQ(call({"straighten", "--algebra", "b", "1,3,1,6,2"}).out, "+1 * B[3,3,3,2,2]\n");
  EXPECT_EQ(call({"act", "--algebra", "q", "-n", "2", "--index", "3"}).out, "-1 * Q[3,2]\n");
  EXPECT_EQ(call({"code", "--shifted", "--index", "4,2,1"}).out, "UURU\n");
}

TEST(Cli, AllMethodsAgree) {
  EXPECT_EQ(call({"straighten", "--method", "all", "1,3,1,6,2"}).out, "+1 * B[3,3,3,2,2]\n");
  EXPECT_EQ(call({"straighten", "--algebra", "q", "--method", "all", "1,3,2"}).out,
            "+1 * Y[3,2,1]\n");
  EXPECT_EQ(call({"straighten", "--algebra", "q", "--method", "all", "0,2"}).out,
            "-1 * Y[2,0]\n");
  EXPECT_EQ(call({"straighten", "--word", "RRLRURRRRULLLLLURRULLU", "--method", "reading"}).out,
            "+1 * B[3,3,3,2,2]\n");
}

TEST(Cli, TraceReportsStepExponents) {
  const Result r = call({"straighten", "--trace", "1,3,1,6,2"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("step exponents: 1 1 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("sign exponent: 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("permute-past-U at 7 (sign flip)"), std::string::npos);
}

TEST(Cli, CodeVariants) {
  EXPECT_EQ(call({"code", "4,2,2,1"}).out, "RURUURRU\n");
  EXPECT_EQ(call({"code", "--decode", "RRRRULLLURRULU"}).out, "2,3,1,4\n");
  EXPECT_EQ(call({"code", "--decode", "--shifted", "URULLU"}).out, "2,3,1\n");
  EXPECT_EQ(call({"code", "--preshifted", "2,3,1"}).out, "...ULULUURULLU\n");
  EXPECT_EQ(call({"code", "--format", "json", "2,0"}).out, "{\"index\":[2,0],\"code\":\"URRU\"}\n");
}

TEST(Cli, SeriesOutput) {
  EXPECT_EQ(call({"series", "--index", "1", "--i-max", "3"}).out,
            "-1 * t^-1 * s[0,0]\n+1 * t^1 * s[1,1]\n+1 * t^2 * s[2,1]\n");
  EXPECT_EQ(call({"series", "--algebra", "q", "--index", "2", "--n-max", "3"}).out,
            "-1 * t^0 * Q[2,0]\n-1 * t^1 * Q[2,1]\n+1 * t^3 * Q[3,2]\n");
  EXPECT_EQ(call({"series", "--algebra", "q", "--form", "i", "--i-max", "1", "2"}).out,
            "-1 * t^0 * Q[2,0]\n-1 * t^1 * Q[2,1]\n");
  EXPECT_EQ(call({"series", "--index", "2,1", "--t-min", "0", "--t-max", "2"}).out,
            "-1 * t^0 * s[1,1,1]\n+1 * t^2 * s[2,2,1]\n");
}

TEST(Cli, ExitStatusUsage) {
  EXPECT_EQ(call({}).status, kUsageOrDomain);
  EXPECT_EQ(call({"frobnicate"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"straighten", "--algebra", "z", "1,2"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"straighten", "--method", "perm", "1,2"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"straighten", "--algebra", "q", "--method", "oracle", "1,2"}).status,
            kUsageOrDomain);
  EXPECT_EQ(call({"straighten", "--format", "xml", "1,2"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"straighten", "--index", "1", "2"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"act", "3,1"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"verify", "--suite", "nonsense"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"verify"}).status, kUsageOrDomain);
}

TEST(Cli, ExitStatusDomain) {
  const Result negative = call({"straighten", "1,-2"});
  EXPECT_EQ(negative.status, kUsageOrDomain);
  EXPECT_NE(negative.err.find("domain error"), std::string::npos);
  EXPECT_EQ(call({"act", "--algebra", "q", "-n", "-1", "2"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"act", "-n", "1", "1,3"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"code", "--decode", "LU"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"code", "--shifted", "2,0"}).status, kUsageOrDomain);
  EXPECT_EQ(call({"straighten", "1,x"}).status, kUsageOrDomain);
}

TEST(Cli, ExitStatusVerifyFailure) {
  const std::string corpus = temp_path("bad_corpus.jsonl");
  const std::string failures = temp_path("failures.jsonl");
  {
    std::ofstream f(corpus);
    f << R"({"op":"encode_code","args":{"index":[4,2,2,1]},"expected":"RURUURRU"})" << '\n';
    f << R"({"op":"encode_code","args":{"index":[2,1]},"expected":"RU"})" << '\n';
  }
  const Result r = call({"verify", "--suite", "corpus", "--file", corpus, "--output", failures});
  EXPECT_EQ(r.status, kInvariant);
  EXPECT_NE(r.out.find("2 cases, 1 failures"), std::string::npos);
  std::ifstream in(failures);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line,
            R"({"suite":"corpus","input":{"op":"encode_code","args":{"index":[2,1]}},)"
            R"("expected":"RU","got":"RURU"})");
  EXPECT_FALSE(std::getline(in, line));
}

TEST(Cli, HelpIsSuccess) {
  const Result r = call({"--help"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("straighten"), std::string::npos);
}

TEST(Cli, EnvironmentSetsDefaultFormat) {
  ::setenv("CODECALC_FORMAT", "json", 1);
  const Result from_env = call({"straighten", "1,3"});
  const Result flag_wins = call({"straighten", "--format", "text", "1,3"});
  ::setenv("CODECALC_FORMAT", "yaml", 1);
  const Result bad_env = call({"straighten", "1,3"});
  ::unsetenv("CODECALC_FORMAT");
  EXPECT_EQ(from_env.out, "{\"sign\":-1,\"index\":[2,2]}\n");
  EXPECT_EQ(flag_wins.out, "-1 * B[2,2]\n");
  EXPECT_EQ(bad_env.status, kUsageOrDomain);
}

const std::vector<std::vector<std::string>>& json_commands() {
  static const std::vector<std::vector<std::string>> commands{
      {"straighten", "1,3,1,6,2"},
      {"straighten", "2,3"},
      {"straighten", "--trace", "1,3,1,6,2"},
      {"straighten", "--algebra", "q", "--method", "code", "--trace", "0,2,1"},
      {"act", "-n", "-1", "2"},
      {"act", "--algebra", "q", "-n", "0", "2,1"},
      {"series", "--index", "2,1", "--i-max", "6"},
      {"series", "--algebra", "q", "--index", "3,1", "--n-max", "6"},
      {"code", "--preshifted", "4,2,1"},
      {"code", "--decode", "URRU"},
  };
  return commands;
}

TEST(Cli, JsonRoundTripsByteForByte) {
  for (auto args : json_commands()) {
    args.push_back("--format");
    args.push_back("json");
    const Result r = call(args);
    ASSERT_EQ(r.status, kOk) << r.err;
    ASSERT_FALSE(r.out.empty());
    const std::string body = r.out.substr(0, r.out.size() - 1);
    EXPECT_EQ(Json::parse(body).dump(), body);
  }
}

// "+1 * B[3,2]" / "0" back to JSON.
Json signed_text_to_json(const std::string& text) {
  if (text == "0") return Json{{"zero", true}};
  static const std::regex re(R"(^([+-]1) \* [A-Za-z]+\[([-0-9,]*)\]$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return Json("unparsable: " + text);
  Json j;
  j["sign"] = std::stoi(m[1].str());
  j["index"] = to_json(parse_signed_index(m[2].str()));
  return j;
}

TEST(Cli, TextAndJsonAgreeOnSignedResults) {
  const std::vector<std::vector<std::string>> commands{
      {"straighten", "1,3,1,6,2"}, {"straighten", "2,3"},
      {"straighten", "--method", "reading", "0,2"},
      {"straighten", "--algebra", "q", "2,3"},
      {"straighten", "--algebra", "q", "--method", "shifted", "1,3,2"},
      {"act", "-n", "1", "3,1"},   {"act", "-n", "-1", "2"},
      {"act", "-n", "2", "3,1"},   {"act", "--algebra", "q", "-n", "0", "2,1"},
  };
  for (auto args : commands) {
    const Result text = call(args);
    args.push_back("--format");
    args.push_back("json");
    const Result json = call(args);
    ASSERT_EQ(text.status, kOk);
    EXPECT_EQ(signed_text_to_json(text.out.substr(0, text.out.size() - 1)),
              Json::parse(json.out));
  }
}

TEST(Cli, TextAndJsonAgreeOnSeries) {
  const std::vector<std::vector<std::string>> commands{
      {"series", "--index", "2,1", "--i-max", "6"},
      {"series", "--algebra", "q", "--index", "3,1", "--n-max", "6"},
  };
  static const std::regex re(R"(^([+-]1) \* t\^(-?[0-9]+) \* [A-Za-z]+\[([-0-9,]*)\]$)");
  for (auto args : commands) {
    const Result text = call(args);
    args.push_back("--format");
    args.push_back("json");
    const Json terms = Json::parse(call(args).out);
    std::istringstream lines(text.out);
    std::string line;
    std::size_t k = 0;
    for (; std::getline(lines, line); ++k) {
      ASSERT_LT(k, terms.size());
      std::smatch m;
      ASSERT_TRUE(std::regex_match(line, m, re)) << line;
      const Json& t = terms[k];
      EXPECT_EQ(std::stoi(m[1].str()), t["sign_exp"].get<int>() % 2 == 0 ? 1 : -1);
      EXPECT_EQ(std::stoi(m[2].str()), t["t_exp"].get<int>());
      EXPECT_EQ(to_json(parse_signed_index(m[3].str())), t["index"]);
    }
    EXPECT_EQ(k, terms.size());
  }
}

TEST(Cli, VerifySmokeSuites) {
  for (const char* suite : {"codes", "bernstein", "qvertex", "shifted", "oracle", "all"}) {
    const Result r = call({"verify", "--suite", suite, "--max-part", "3", "--max-len", "3"});
    EXPECT_EQ(r.status, kOk) << suite << ": " << r.err;
    EXPECT_NE(r.out.find(" 0 failures"), std::string::npos);
  }
}

TEST(Cli, RecordRewritesExpectations) {
  const std::string in_path = temp_path("record_in.jsonl");
  const std::string out_path = temp_path("record_out.jsonl");
  {
    std::ofstream f(in_path);
    f << R"({"op":"straighten_B","args":{"index":[1,3]},"expected":null})" << '\n';
  }
  ASSERT_EQ(call({"verify", "--suite", "corpus", "--file", in_path, "--record", "--output",
                  out_path})
                .status,
            kOk);
  const auto recorded = load_corpus(out_path);
  ASSERT_EQ(recorded.size(), 1u);
  EXPECT_EQ(recorded[0].expected, Json::parse(R"({"sign":-1,"index":[2,2]})"));
}

}  // namespace
}  // namespace codecalc::cli

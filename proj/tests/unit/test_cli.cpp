#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using pext::cli::Json;
using pext::cli::OutputDocument;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "pext");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = pext::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

OutputDocument json_doc(std::vector<std::string> args) {
  args.push_back("--json");
  const Invocation r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return OutputDocument::from_json(Json::parse(r.out));
}

} // namespace

TEST(Cli, Bell) {
  EXPECT_EQ(json_doc({"bell", "--n", "5"}).results["value"], "52");
  EXPECT_EQ(json_doc({"bell", "--n", "5", "--reduced"}).results["value"], "11");
  EXPECT_EQ(json_doc({"bell", "--n", "0"}).results["value"], "1");
  const Invocation text = run({"bell", "--n", "5"});
  EXPECT_NE(text.out.find("value: 52"), std::string::npos);
}

TEST(Cli, M) {
  const OutputDocument six = json_doc({"m", "--n", "6", "--t", "2"});
  EXPECT_EQ(six.results["M"], "16");
  EXPECT_EQ(six.results["selected_ell"], 6);
  EXPECT_EQ(six.results["candidates"].size(), 3U);
  const OutputDocument five = json_doc({"m", "--n", "5", "--t", "2"});
  EXPECT_EQ(five.results["M"], "5");
  EXPECT_EQ(five.results["tie"], true);
  EXPECT_EQ(five.results["maximizing_r"], Json::parse("[0,1]"));
  EXPECT_EQ(json_doc({"m", "--n", "2", "--t", "2"}).results["M"], "1");
}

TEST(Cli, MTilde) {
  const OutputDocument five = json_doc({"mtilde", "--n", "5", "--t", "2"});
  EXPECT_EQ(five.results["regime"], "nontrivial-equals-M");
  EXPECT_EQ(five.results["M_tilde"], "5");
  const OutputDocument six = json_doc({"mtilde", "--n", "6", "--t", "2"});
  EXPECT_EQ(six.results["s_sequence"].size(), 2U);
  EXPECT_EQ(six.results["s_sequence"][0]["S"], "14");
  const OutputDocument twelve = json_doc({"mtilde", "--n", "12", "--t", "2"});
  EXPECT_EQ(twelve.results["regime"], "nontrivial-from-H-families");
  bool asymptotic = false;
  for (const auto& d : twelve.diagnostics) asymptotic |= d.subject == "m-tilde-asymptotic-form";
  EXPECT_TRUE(asymptotic);
  const OutputDocument empty = json_doc({"mtilde", "--n", "4", "--t", "2"});
  EXPECT_EQ(empty.results["regime"], "empty");
  EXPECT_EQ(empty.diagnostics.back().kind, "empty-regime");
}

TEST(Cli, GammaPhiScanHFamily) {
  EXPECT_EQ(json_doc({"gamma", "--n", "6", "--t", "2", "--ell", "2"}).results["gamma"], "52/15");
  EXPECT_EQ(json_doc({"gamma", "--n", "6", "--t", "2", "--ell", "4"}).results["ell_condition"], false);
  EXPECT_EQ(json_doc({"phi", "--n", "6", "--t", "2", "--ell", "4"}).results["phi"], "-1/2");
  const OutputDocument pole = json_doc({"phi", "--n", "6", "--t", "2", "--ell", "6"});
  EXPECT_EQ(pole.results["status"], "pole");
  EXPECT_EQ(pole.diagnostics.front().kind, "pole");
  const OutputDocument scan = json_doc({"scan", "--n", "20", "--t", "3", "--nmax", "40"});
  EXPECT_EQ(scan.results["sign_changes"], 1);
  EXPECT_EQ(scan.results["threshold"], 9);
  const OutputDocument h = json_doc({"hfamily", "--n", "6", "--t", "2", "--i", "2"});
  EXPECT_EQ(h.results["S"], "14");
  EXPECT_EQ(h.results["enumerated_size"], "14");
  EXPECT_EQ(h.results["nontrivial"], true);
}

TEST(Cli, Oracle) {
  const OutputDocument five = json_doc({"oracle", "--n", "5", "--t", "2"});
  EXPECT_EQ(five.results["maximum"], "5");
  EXPECT_EQ(five.results["outcome"], "exact");
  EXPECT_EQ(five.results["witness"].size(), 5U);
  EXPECT_EQ(json_doc({"oracle", "--n", "6", "--t", "2", "--budget-ms", "60000"}).results["maximum"], "16");
  EXPECT_EQ(json_doc({"oracle", "--n", "3", "--t", "1"}).results["maximum"], "2");
  const OutputDocument cut = json_doc({"oracle", "--n", "7", "--t", "2", "--budget-nodes", "2"});
  EXPECT_EQ(cut.results["outcome"], "budget-exhausted");
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--suite", "bell", "--nmax", "10"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "formulas", "--nmax", "9"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "oracle", "--nmax", "5"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "operators", "--nmax", "5"}).code, 0);
  // Theorem diagnostics become failures on request.
  EXPECT_EQ(run({"verify", "--suite", "operators", "--nmax", "5", "--fatal-diagnostics"}).code, 3);
  EXPECT_EQ(run({"verify", "--suite", "bell", "--nmax", "13"}).code, 4);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"m", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"m", "--n", "3", "--t", "5"}).code, 2);
  EXPECT_EQ(run({"bell", "--n", "-1"}).code, 2);
  EXPECT_EQ(run({"bell", "--n", "600"}).code, 4);
  EXPECT_EQ(run({"oracle", "--n", "9", "--t", "1"}).code, 4);
  EXPECT_EQ(run({"verify", "--suite", "nope", "--nmax", "3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const Invocation capacity = run({"bell", "--n", "600", "--json"});
  const OutputDocument doc = OutputDocument::from_json(Json::parse(capacity.out));
  EXPECT_EQ(doc.diagnostics.front().subject, "capacity");
}

TEST(Cli, TableCapacityFromEnvironment) {
  ::setenv("PEXT_TABLE_CAP", "20", 1);
  EXPECT_EQ(run({"bell", "--n", "21"}).code, 4);
  EXPECT_EQ(run({"bell", "--n", "20"}).code, 0);
  ::setenv("PEXT_TABLE_CAP", "abc", 1);
  EXPECT_EQ(run({"bell", "--n", "3"}).code, 2);
  ::unsetenv("PEXT_TABLE_CAP");
  EXPECT_EQ(run({"bell", "--n", "600"}).code, 4);
}

TEST(Cli, JsonIsDeterministicAndRoundTrips) {
  const std::vector<std::vector<std::string>> commands = {
      {"bell", "--n", "30"},
      {"m", "--n", "9", "--t", "3"},
      {"mtilde", "--n", "9", "--t", "2"},
      {"gamma", "--n", "9", "--t", "3", "--ell", "5"},
      {"phi", "--n", "9", "--t", "3", "--ell", "5"},
      {"scan", "--n", "12", "--t", "2"},
      {"hfamily", "--n", "7", "--t", "2", "--i", "3"},
      {"oracle", "--n", "5", "--t", "1", "--threads", "3"},
      {"verify", "--suite", "bell", "--nmax", "6"},
  };
  for (auto args : commands) {
    args.push_back("--json");
    const Invocation first = run(args);
    const Invocation second = run(args);
    ASSERT_EQ(first.code, 0) << args.front();
    EXPECT_EQ(first.out, second.out) << args.front();
    const Json parsed = Json::parse(first.out);
    EXPECT_EQ(parsed["schema"], pext::cli::kSchema);
    const OutputDocument doc = OutputDocument::from_json(parsed);
    EXPECT_EQ(doc.dump_json(), first.out);
    EXPECT_EQ(OutputDocument::from_json(doc.to_json()), doc);
  }
}

TEST(Cli, OracleOutputIndependentOfThreads) {
  const Invocation one = run({"oracle", "--n", "6", "--t", "2", "--nontrivial", "--threads", "1", "--json"});
  const Invocation four = run({"oracle", "--n", "6", "--t", "2", "--nontrivial", "--threads", "4", "--json"});
  Json a = Json::parse(one.out), b = Json::parse(four.out);
  EXPECT_EQ(a["results"], b["results"]);
}

TEST(Cli, CountsAreDecimalStrings) {
  const OutputDocument doc = json_doc({"bell", "--n", "100"});
  ASSERT_TRUE(doc.results["value"].is_string());
  EXPECT_EQ(doc.results["value"].get<std::string>().size(), 116U);
}

TEST(Cli, RejectsForeignDocuments) {
  EXPECT_THROW(OutputDocument::from_json(Json::parse(R"({"schema":"other"})")), pext::ArgumentError);
  EXPECT_THROW(OutputDocument::from_json(Json::parse(R"({"schema":"pext.output/1","command":"x"})")),
               pext::ArgumentError);
}

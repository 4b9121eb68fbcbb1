#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace humplab::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) { ::setenv(kMaxEnumEnv, value, 1); }
  ~EnvGuard() { ::unsetenv(kMaxEnumEnv); }
  EnvGuard(const EnvGuard&) = delete;
  EnvGuard& operator=(const EnvGuard&) = delete;
};

TEST(Seq, HcClosed) {
  const auto r = invoke({"seq", "HC", "--from", "1", "--to", "3", "--route", "closed"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "n,value\n1,1\n2,3\n3,10\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Seq, EveryHcRouteAgrees) {
  const auto closed = invoke({"seq", "HC", "--to", "10", "--route", "closed"});
  EXPECT_EQ(invoke({"seq", "HC", "--to", "10", "--route", "rec", "--from", "1"}).out, closed.out);
  EXPECT_EQ(invoke({"seq", "HC", "--to", "10", "--route", "enum"}).out, closed.out);
}

TEST(Seq, Hs40ListedValues) {
  const auto r = invoke({"seq", "HS40", "--from", "1", "--to", "12"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out,
            "n,value\n1,2\n2,5\n3,12\n4,35\n5,100\n6,315\n7,980\n8,3234\n9,10584\n10,36036\n11,121968\n"
            "12,424710\n");
  EXPECT_EQ(invoke({"seq", "HS40", "--to", "12", "--route", "product"}).out, r.out);
}

TEST(Seq, HookSumWithParameters) {
  const auto r = invoke({"seq", "S", "2", "1", "--from", "1", "--to", "3"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "n,value\n1,1\n2,2\n3,4\n");
  EXPECT_EQ(invoke({"seq", "S", "2", "1", "--from", "2", "--to", "3", "--route", "closed"}).out,
            "n,value\n2,2\n3,4\n");
  EXPECT_EQ(invoke({"seq", "S", "3", "0", "--to", "5", "--route", "closed"}).out,
            invoke({"seq", "motzkin", "--to", "5"}).out);
}

TEST(Seq, CountingSequences) {
  EXPECT_EQ(invoke({"seq", "catalan", "--to", "4"}).out, "n,value\n0,1\n1,1\n2,2\n3,5\n4,14\n");
  EXPECT_EQ(invoke({"seq", "catalan", "--to", "4", "--route", "rec"}).out,
            invoke({"seq", "catalan", "--to", "4", "--route", "enum"}).out);
  EXPECT_EQ(invoke({"seq", "motzkin", "--to", "4", "--route", "rec"}).out, "n,value\n0,1\n1,1\n2,2\n3,4\n4,9\n");
}

TEST(Seq, JsonKeepsBigIntegersAsStrings) {
  const auto r = invoke({"seq", "HC", "--from", "100", "--to", "101", "--format", "json"});
  ASSERT_EQ(r.code, kSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[0]["n"], 100);
  ASSERT_TRUE(doc[0]["value"].is_string());
  EXPECT_EQ(doc[0]["value"].get<std::string>().size(), 59u);
}

TEST(Seq, Table) {
  const auto r = invoke({"seq", "HM", "--to", "3", "--format", "table"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "n  value\n0      0\n1      0\n2      1\n3      3\n");
}

TEST(Seq, UsageErrors) {
  EXPECT_EQ(invoke({"seq", "HC", "--to", "3", "--route", "product"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "SD", "--to", "3", "--route", "rec"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "HC", "--to", "3", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "XYZ", "--to", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "HC", "--from", "0", "--to", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "HC", "--from", "5", "--to", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "S", "2", "--to", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "S", "4", "4", "--to", "3", "--route", "closed"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "HC"}).code, kUsageError);
  const auto r = invoke({"seq", "HC", "--to", "3", "--route", "product"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("product"), std::string::npos);
}

TEST(Seq, CapsAreUsageErrors) {
  EXPECT_EQ(invoke({"seq", "HC", "--to", "15", "--route", "enum"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "HC", "--to", "501"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "HC", "--to", "3", "--route", "enum", "--max-enum-n", "2"}).code, kUsageError);
}

TEST(Verify, AllPasses) {
  const auto r = invoke({"verify", "all"});
  EXPECT_EQ(r.code, kSuccess) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("dyck-humps-31"), std::string::npos);
}

TEST(Verify, SingleIdentity) {
  const auto r = invoke({"verify", "motzkin-path-222", "--from", "2", "--to", "300"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("[2, 300]"), std::string::npos);
  const auto csv = invoke({"verify", "strip-s40", "--to", "20", "--format", "csv"});
  EXPECT_EQ(csv.out, "id,lo,hi,pass,failures\nstrip-s40,0,20,true,0\n");
}

TEST(Verify, Json) {
  const auto r = invoke({"verify", "hc-equals-dyck-humps", "--format", "json", "--max-enum-n", "6"});
  ASSERT_EQ(r.code, kSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["id"], "hc-equals-dyck-humps");
  EXPECT_EQ(doc[0]["hi"], 6);
  EXPECT_EQ(doc[0]["pass"], true);
}

TEST(Verify, ErrorsExitTwo) {
  EXPECT_EQ(invoke({"verify", "unknown-id"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "motzkin-path-222", "--from", "1", "--to", "5"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "hc-equals-dyck-humps", "--to", "40"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "dyck-humps-31", "--to", "501"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "all", "--format", "yaml"}).code, kUsageError);
}

TEST(Verify, EnvironmentLowersEnumerationRange) {
  const EnvGuard guard("4");
  const auto r = invoke({"verify", "hc-equals-dyck-humps", "--format", "csv"});
  EXPECT_EQ(r.out, "id,lo,hi,pass,failures\nhc-equals-dyck-humps,1,4,true,0\n");
  const auto flag = invoke({"verify", "hc-equals-dyck-humps", "--format", "csv", "--max-enum-n", "3"});
  EXPECT_EQ(flag.out, "id,lo,hi,pass,failures\nhc-equals-dyck-humps,1,3,true,0\n");
}

TEST(Verify, MalformedEnvironmentIsUsageError) {
  const EnvGuard guard("many");
  EXPECT_EQ(invoke({"verify", "hc-equals-dyck-humps"}).code, kUsageError);
}

TEST(Enumerate, DyckTwoWithHumps) {
  const auto r = invoke({"enumerate", "dyck", "2", "--with-humps"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "path,humps\nUUDD,1\nUDUD,2\n# total paths=2 humps=3\n");
}

TEST(Enumerate, MotzkinTwoWithHumps) {
  const auto r = invoke({"enumerate", "motzkin", "2", "--with-humps"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "path,humps\nUD,1\nFF,0\n# total paths=2 humps=1\n");
}

TEST(Enumerate, EmptyDyckPath) {
  const auto r = invoke({"enumerate", "dyck", "0"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "path\n\n# total paths=1 humps=0\n");
  EXPECT_EQ(invoke({"enumerate", "dyck", "0", "--format", "table"}).out, "   path\n(empty)\ntotal: 1 paths, 0 humps\n");
}

TEST(Enumerate, SuperFamilies) {
  const auto r = invoke({"enumerate", "super-dyck", "1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "path\nUD\nDU\n# total paths=2\n");
  EXPECT_EQ(invoke({"enumerate", "super-motzkin", "1", "--with-humps"}).code, kUsageError);
}

TEST(Enumerate, Json) {
  const auto r = invoke({"enumerate", "double-dyck", "1", "--with-humps", "--format", "json"});
  ASSERT_EQ(r.code, kSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["family"], "double-dyck");
  EXPECT_EQ(doc["total_humps"], "2");
  EXPECT_EQ(doc["total_paths"], std::to_string(doc["paths"].size()));
}

TEST(Enumerate, Errors) {
  EXPECT_EQ(invoke({"enumerate", "dyck", "15"}).code, kUsageError);
  EXPECT_EQ(invoke({"enumerate", "dyck", "-1"}).code, kUsageError);
  EXPECT_EQ(invoke({"enumerate", "zigzag", "2"}).code, kUsageError);
  EXPECT_EQ(invoke({"enumerate", "dyck", "3", "--max-enum-n", "2"}).code, kUsageError);
  EXPECT_EQ(invoke({"enumerate", "dyck", "3", "--max-enum-n", "3"}).code, kSuccess);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"seq", "SM", "--to", "40", "--format", "json"},
      {"enumerate", "motzkin", "6", "--with-humps"},
      {"verify", "all", "--to", "30", "--max-enum-n", "5", "--format", "csv"},
      {"identities"},
  };
  for (const auto& cmd : commands) {
    const auto a = invoke(cmd);
    const auto b = invoke(cmd);
    EXPECT_EQ(a.code, kSuccess);
    EXPECT_EQ(a.out, b.out) << cmd.front();
  }
}

TEST(Cli, HelpAndMissingSubcommand) {
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, kSuccess);
  EXPECT_NE(help.out.find("enumerate"), std::string::npos);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
}

TEST(Cli, IdentitiesListsRegistry) {
  const auto r = invoke({"identities"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("motzkin-path-222  (n >= 2"), std::string::npos);
}

}  // namespace
}  // namespace humplab::cli

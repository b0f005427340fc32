#include "evenodd/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace evenodd;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args, const char* tolerance = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, tolerance);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifyOdd) {
    const auto r = invoke({"classify", "0001"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[1,3]"), std::string::npos);
    EXPECT_NE(r.out.find("Odd"), std::string::npos);
    EXPECT_NE(r.out.find("Entangling"), std::string::npos);
    EXPECT_NE(r.out.find("——"), std::string::npos);
}

TEST(Cli, ClassifyConstantJson) {
    const auto r = invoke({"classify", "0000", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["class"], "[0,4]");
    EXPECT_EQ(j["parity"], "Even");
    EXPECT_EQ(j["oracle"], "Separable");
    EXPECT_EQ(j["dj"], "Constant");
    EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(Cli, MalformedTruthTable) {
    const auto r = invoke({"classify", "001"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("truth table must be 4 bits"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(invoke({"run", "01x1"}).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"bogus"}).code, 2);
    EXPECT_EQ(invoke({"run"}).code, 2);
    EXPECT_EQ(invoke({"table", "0001"}).code, 2);
    EXPECT_EQ(invoke({"verify", "0001"}).code, 2);
    EXPECT_EQ(invoke({"classify", "0001", "--trace"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, 0); }

TEST(Cli, RunTraceLabels) {
    const auto r = invoke({"run", "1000", "--trace"});
    ASSERT_EQ(r.code, 0);
    for (const char* label : {"step 0 initial", "step 1 H12", "step 2 Uf", "step 3 H2", "step 4 Uf", "step 5 H12"})
        EXPECT_NE(r.out.find(label), std::string::npos) << label;
    EXPECT_NE(r.out.find("verdict       Odd"), std::string::npos);
    EXPECT_NE(r.out.find("oracle calls  2"), std::string::npos);
}

TEST(Cli, RunTraceJson) {
    const auto r = invoke({"run", "0110", "--trace", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["trace"].size(), 6u);
    EXPECT_EQ(j["trace"][3]["gate"], "H2");
    EXPECT_EQ(j["verdict"], "Even");
    EXPECT_EQ(j["oracle_calls"], 2);
}

TEST(Cli, Dj) {
    EXPECT_NE(invoke({"dj", "1100"}).out.find("Balanced"), std::string::npos);
    EXPECT_NE(invoke({"dj", "0000"}).out.find("Constant"), std::string::npos);
    EXPECT_NE(invoke({"dj", "1000"}).out.find("Neither"), std::string::npos);
}

TEST(Cli, TableText) {
    const auto r = invoke({"table"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[2,2] 6 Even Separable Balanced"), std::string::npos);
    EXPECT_NE(r.out.find("[1,3] 4 Odd Entangling ——"), std::string::npos);
    EXPECT_NE(r.out.find("total 16"), std::string::npos);
}

TEST(Cli, TableJson) {
    const auto r = invoke({"table", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["classes"].size(), 5u);
    ASSERT_EQ(j["functions"].size(), 16u);
    int total = 0;
    for (const auto& c : j["classes"]) total += c["count"].get<int>();
    EXPECT_EQ(total, 16);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(Cli, Verify) {
    const auto r = invoke({"verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("16/16 functions verified, classical_min_queries=4"), std::string::npos);
    const auto j = invoke({"verify", "--json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(nlohmann::json::parse(j.out)["passed"], true);
}

TEST(Cli, ToleranceEnvironment) {
    EXPECT_EQ(invoke({"verify"}, "1e-9").code, 0);
    EXPECT_EQ(invoke({"verify"}, "abc").code, 2);
    EXPECT_EQ(invoke({"verify"}, "-1").code, 2);
    EXPECT_EQ(invoke({"verify"}, "").code, 0);
    EXPECT_EQ(cli::parse_tolerance("1e-10").value(), 1e-10);
}

TEST(Cli, ConfigValidation) {
    cli::RunConfig config;
    config.command = cli::Command::Run;
    EXPECT_THROW(cli::validate(config), cli::UsageError);
    config.function = TruthTable::parse("0001");
    EXPECT_NO_THROW(cli::validate(config));
    config.command = cli::Command::Table;
    EXPECT_THROW(cli::validate(config), cli::UsageError);
}

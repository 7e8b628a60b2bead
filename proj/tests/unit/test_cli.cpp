#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dwt/cli.hpp"
#include "dwt/io.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dwt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& path) {
    std::vector<std::string> parts;
    std::istringstream in(path);
    for (std::string w; in >> w;) parts.push_back(w);
    return parts;
}

dwt::io::json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return dwt::io::parse(r.out);
}

}  // namespace

TEST(CliCoverage, EveryOperationHasOneHome) {
    const auto leaves = dwt::cli::subcommands();
    const std::set<std::string> leaf_set(leaves.begin(), leaves.end());
    std::map<std::string, int> seen;
    for (const auto& entry : dwt::cli::coverage()) {
        ++seen[std::string(entry.operation)];
        EXPECT_TRUE(leaf_set.contains(std::string(entry.subcommand))) << entry.subcommand;
    }
    for (const auto& [op, n] : seen) EXPECT_EQ(n, 1) << op;
    EXPECT_GE(seen.size(), 40u);
}

TEST(CliCoverage, EveryLeafHasHelp) {
    for (const auto& leaf : dwt::cli::subcommands()) {
        auto args = split(leaf);
        args.push_back("--help");
        const auto r = run(args);
        EXPECT_EQ(r.code, 0) << leaf;
        EXPECT_FALSE(r.out.empty()) << leaf;
    }
}

TEST(Cli, TowerLife) {
    const auto j = run_json({"tower", "life"});
    EXPECT_NEAR(j["cycles"].get<double>(), 1.4332e7, 0.0005e7);
    EXPECT_GT(j["years"].get<double>(), 38.0);
}

TEST(Cli, ImperialDisplay) {
    const auto r = run({"--units", "imperial", "blade", "bending", "--mass", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("stress_flat: 6.48"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("ksi"), std::string::npos);
}

TEST(Cli, AeroSweepJson) {
    const auto j = run_json({"aero", "sweep"});
    ASSERT_EQ(j["rows"].size(), 3u);
    EXPECT_NEAR(j["rows"][0]["torque"].get<double>(), 4033.073, 1e-3);
}

TEST(Cli, WeibullFit) {
    const auto j = run_json({"weibull", "fit", "--p1", "10", "--b1", "10", "--p2", "50", "--b2", "20"});
    EXPECT_NEAR(j["beta"].get<double>(), 2.7178274, 1e-7);
    EXPECT_EQ(j["regime"], "wear_out");
}

TEST(Cli, SystemLifeDefaults) {
    const auto j = run_json({"system", "life"});
    EXPECT_EQ(j["years"].get<double>(), 20.0);
    EXPECT_EQ(j["limiting_component"], "generator");
}

TEST(Cli, ScheduleCsv) {
    const auto r = run({"schedule", "generate", "--install-date", "2025-01-01"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("due_date,component_id,task,reason\n", 0), 0u);
    EXPECT_NE(r.out.find("2026-01-01,Ballast Foundation,Top off ballast material every year,interval_elapsed"),
              std::string::npos);
}

TEST(Cli, ReportIsStable) {
    const auto a = run({"schedule", "report"});
    const auto b = run({"schedule", "report"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"fatigue", "life", "--sigma", "-1", "--sut", "58ksi", "--se", "19ksi"}).code, 1);
    EXPECT_EQ(run({"units", "convert", "1ksi", "--to", "N"}).code, 1);
    EXPECT_EQ(run({"weibull", "hazard", "--beta", "0.5", "--eta", "1", "--t", "0"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ErrorsGoToStderr) {
    const auto r = run({"weibull", "cdf", "--beta", "-1", "--eta", "1", "--t", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

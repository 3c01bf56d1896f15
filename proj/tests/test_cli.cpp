#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args) {
    std::string cmd = std::string(ZETA3PELL_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    while (fgets(buf.data(), buf.size(), p)) r.out += buf.data();
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST(Cli, SymbolText) {
    CliResult r = run("symbol --v 2,0 --w 3,1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "zeta3 (log 1)\n");
    EXPECT_EQ(run("symbol --v 1,0 --w 3,1").out, "1 (log 0)\n");
    EXPECT_EQ(run("symbol --v 3,1 --w 3,1 --method general").out, "0 (not coprime)\n");
}

TEST(Cli, SymbolMethodsAgree) {
    for (const char* m : {"fast", "general", "euler"})
        EXPECT_EQ(run(std::string("symbol --v 2,0 --w 3,1 --method ") + m).out, "zeta3 (log 1)\n") << m;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("symbol --v 2,0 --w 1,-1").code, 3);
    EXPECT_EQ(run("symbol --v 2,x --w 3,1").code, 2);
    EXPECT_EQ(run("symbol --v 2,0").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("census --max-disc 361 --out /nonexistent-dir/x.jsonl").code, 4);
    EXPECT_EQ(run("census --max-disc 100").code, 3);
    EXPECT_EQ(run("census --max-disc 3e5").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, CensusText) {
    std::string out = std::string(::testing::TempDir()) + "cli_census.jsonl";
    CliResult r = run("census --max-disc 361 --oracle-bound 0 --out " + out);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("total 2, solvable 2", 0), 0u) << r.out;
}

TEST(Cli, CensusJson) {
    std::string out = std::string(::testing::TempDir()) + "cli_census_json.jsonl";
    CliResult r = run("--format json census --max-disc 130322 --variant lambda --oracle-bound 0 --out " + out);
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["total"], 54);
    EXPECT_EQ(j["variant"], "lambda");
    EXPECT_TRUE(j.contains("bracket"));
}

TEST(Cli, ConstantsJson) {
    CliResult r = run("--format json constants");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["beta"].get<std::string>().substr(0, 8), "0.639004");
}

TEST(Cli, FactorAndRedei) {
    CliResult f = run("factor --x 19");
    EXPECT_EQ(f.code, 0);
    EXPECT_NE(f.out.find("(-5,-3)"), std::string::npos);
    EXPECT_NE(f.out.find("(-2,3)"), std::string::npos);
    CliResult r = run("redei --alpha -5,-3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("full_rank yes"), std::string::npos) << r.out;
}

TEST(Cli, MonteCarloIsReproducible) {
    CliResult a = run("--seed 9 --workers 1 --format csv montecarlo --n 8 --samples 5000");
    CliResult b = run("--seed 9 --workers 3 --format csv montecarlo --n 8 --samples 5000");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PellSearch) {
    CliResult r = run("--format json pell-search --alpha -5,-3 --bound 2");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["found"], true);
}

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(TRANSLAB_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string enclosure_line(const std::string& s) {
    size_t at = s.find("enclosure ");
    return at == std::string::npos ? "" : first_line(s.substr(at + 10));
}

}  // namespace

TEST(Cli, EvenZeta) {
    Result r = run("zeta --even 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "zeta(2) = (1/6)*pi^2");
    EXPECT_NE(r.out.find("check truncated-series: pass"), std::string::npos);
}

TEST(Cli, Siegel) {
    Result r = run("siegel --matrix '[[1,2]]'");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "(2,-1)");
}

TEST(Cli, BeukersJson) {
    Result r = run("beukers --target zeta3 --n 5 --json");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    for (const char* k : {"command", "inputs", "result", "checks"}) EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["command"], "beukers");
    EXPECT_TRUE(j["result"]["A"].is_string());
    EXPECT_TRUE(j["result"]["B"].is_string());
    EXPECT_EQ(j["result"]["d"], "60");
    for (const auto& c : j["checks"]) EXPECT_EQ(c["verdict"], "pass") << c["name"];
}

TEST(Cli, DeterministicAndConsistentAcrossFormats) {
    Result a = run("sum --B 'n^2+1' --bilateral"), b = run("sum --B 'n^2+1' --bilateral");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    Result j = run("sum --B 'n^2+1' --bilateral --json");
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(j.out, run("sum --B 'n^2+1' --bilateral --json").out);
    // the text enclosure and the JSON ball come from the same value
    std::string enc = enclosure_line(a.out);
    ASSERT_FALSE(enc.empty());
    std::string dumped = nlohmann::json::parse(j.out).dump();
    size_t mid = enc.find(' ');
    ASSERT_NE(mid, std::string::npos);
    EXPECT_NE(dumped.find(enc.substr(1, mid - 1)), std::string::npos) << enc;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("--prec 10 zeta --even 1").code, 64);
    EXPECT_EQ(run("zeta").code, 64);
    EXPECT_EQ(run("nosuch").code, 64);
    EXPECT_EQ(run("").code, 64);
    EXPECT_EQ(run("-N 3 zeta --even 1").code, 64);
}

TEST(Cli, DomainErrors) {
    Result r = run("sum --B 'n^2' --bilateral");
    EXPECT_EQ(r.code, 2);
    Result j = run("sum --B 'n^2' --bilateral --json");
    EXPECT_EQ(j.code, 2);
    auto e = nlohmann::json::parse(j.out);
    EXPECT_EQ(e["error"]["kind"], "integer-pole");
    EXPECT_EQ(e["command"], "sum");
}

TEST(Cli, RankAndEring) {
    Result six = run(R"(rank six-exp --matrix '{"symbols":["a","b","c","d","e","f"],"rows":[[["1","0","0","0","0","0"],["0","1","0","0","0","0"],["0","0","1","0","0","0"]],[["0","0","0","1","0","0"],["0","0","0","0","1","0"],["0","0","0","0","0","1"]]]}' --json)");
    ASSERT_EQ(six.code, 0);
    EXPECT_NE(six.out.find("theorem-applies"), std::string::npos);
    Result e = run("ering normalize --expr '(1+E(X1))*(1-E(X1))'");
    EXPECT_EQ(e.code, 0);
    EXPECT_FALSE(e.out.empty());
}

TEST(Cli, HypothesesFailIsAVerdict) {
    Result r = run(R"(rank six-exp --matrix '{"symbols":["a","b","c"],"rows":[[["1","0","0"],["0","1","0"],["0","0","1"]],[["1","0","0"],["0","1","0"],["0","0","1"]]]}')");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("hypotheses-fail"), std::string::npos);
}

TEST(Cli, PrecisionFromEnvironment) {
    auto j = nlohmann::json::parse(run("zeta --even 1 --json", "TRANSLAB_PREC=128").out);
    EXPECT_EQ(j["inputs"]["prec"], 128);
    EXPECT_EQ(run("zeta --even 1", "TRANSLAB_PREC=abc").code, 64);
}

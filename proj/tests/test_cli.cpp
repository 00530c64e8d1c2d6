#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PPTCLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, SingleValues) {
    EXPECT_EQ(run("fpt --p 5 --a 2 --b 3").out, "4/5\n");
    EXPECT_EQ(run("fpt --p 2 --a 3 --b 8").out, "3/8\n");
    EXPECT_EQ(run("nu --p 11 --a 3 --b 4 --e 2").out, "65\n");
    EXPECT_EQ(run("certify --p 11 --a 3 --b 4").out, "UNDETERMINED lower=6/11 upper=7/12\n");
    EXPECT_EQ(run("certify --p 2 --a 5 --b 2").out, "CERTIFIED_SPORADIC value=1/2 rule=prop-2a-x2\n");
    EXPECT_EQ(run("three-lines --p 5").out, "fpt=3/5 ppt=3/5\n");
}

TEST(Cli, Tables) {
    const auto r = run("fpt --p 5 --a 2..3 --b 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "p,a,b,fpt,kind,m,e_min,method\n5,2,3,4/5,truncated,1,1,digit-formula\n5,3,3,3/5,truncated,1,1,digit-formula\n");

    const auto j = nlohmann::json::parse(run("certify --p 7 --a 2 --b 3 --format json").out);
    EXPECT_EQ(j[0]["verdict"], "CERTIFIED_LCT");
    EXPECT_EQ(j[0]["value"], "5/6");

    const auto md = run("table1 --prime-bound 30").out;
    EXPECT_NE(md.find("| a \\ b |"), std::string::npos);
    EXPECT_EQ(md.find("mismatch"), std::string::npos);
}

TEST(Cli, ScatterOutputsAreStable) {
    const auto a = run("scatter --p 3 --max-ab 15 --jobs 1").out;
    const auto b = run("scatter --p 3 --max-ab 15 --jobs 3").out;
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.substr(0, 15), "a,b,category\n2,");
    const auto svg = run("scatter --p 3 --max-ab 15 --format svg").out;
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_EQ(svg.find("UNKNOWN"), std::string::npos);
}

TEST(Cli, WritesToFile) {
    const std::string path = ::testing::TempDir() + "pptcli_out.csv";
    ASSERT_EQ(run("three-lines --prime-bound 7 --out " + path).status, 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), "p,fpt,ppt\n2,1/2,1/2\n3,2/3,2/3\n5,3/5,3/5\n7,2/3,2/3\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("--help").status, 0);
    EXPECT_EQ(run("").status, 1);
    EXPECT_EQ(run("fpt --p 4 --a 2 --b 3").status, 1);
    EXPECT_EQ(run("fpt --p 5 --a 1 --b 3").status, 1);
    EXPECT_EQ(run("fpt --p 5 --a 2 --b 3 --format svg").status, 1);
    EXPECT_EQ(run("fpt --p 5 --a 2 --b 3 --bogus").status, 1);
    EXPECT_EQ(run("fpt --p 2 --a 3 --b 8 --oracle-emax 3").status, 2);
    EXPECT_EQ(run("certify --p 2 --a 3 --b 8 --oracle-emax 3").status, 0);
}

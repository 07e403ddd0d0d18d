#include "cli.hpp"

#include <webrank/damping.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using webrank::cli::run;

namespace {

const std::string fixture = std::string(WEBRANK_TEST_DATA) + "/bowtie_fixture.txt";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "webrank");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path()
              / ("webrank_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string path(const std::string &name) const { return (dir / name).string(); }

    std::string write(const std::string &name, const std::string &content) const {
        std::ofstream(path(name), std::ios::binary) << content;
        return path(name);
    }

    fs::path dir;
};

} // namespace

TEST_F(CliTest, CensusOfFixture) {
    const Result r = invoke({"census", fixture, "--histogram", path("hist.csv"),
                             "--decomposition", path("blocks.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 9u);
    EXPECT_EQ(rows[0], "component,size");
    EXPECT_EQ(rows[1], "total,12");
    EXPECT_EQ(rows[5], "escc,6");
    EXPECT_EQ(rows[6], "pure_out,6");

    const auto blocks = lines(slurp(path("blocks.csv")));
    ASSERT_EQ(blocks.size(), 13u);
    EXPECT_EQ(blocks[0], "node_id,block_label");
    EXPECT_EQ(blocks[1], "0,ESCC");
    EXPECT_EQ(blocks[7], "6,S");
    EXPECT_EQ(blocks[9], "8,Q1");
    EXPECT_EQ(blocks[11], "10,Q2");

    const auto hist = lines(slurp(path("hist.csv")));
    EXPECT_EQ(hist.front(), "component,size");
    EXPECT_EQ(hist.size(), 5u); // {8,9}, {10,11}, {6}, {7}
}

TEST_F(CliTest, CensusToFileLeavesStdoutEmpty) {
    const Result r = invoke({"census", fixture, "--out", path("census.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(lines(slurp(path("census.csv")))[1], "total,12");
    EXPECT_FALSE(fs::exists(path("census.csv.tmp")));
}

TEST_F(CliTest, PagerankSumsToOne) {
    const Result r = invoke({"pagerank", fixture, "--c", "0.85", "--tol", "1e-13"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 13u);
    EXPECT_EQ(rows[0], "node_id,pagerank");
    double total = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        total += std::stod(rows[i].substr(rows[i].find(',') + 1));
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST_F(CliTest, FairnessRows) {
    const Result r = invoke({"pagerank", fixture, "--fairness"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0], "set,size,mass,ratio");
    EXPECT_EQ(rows[1].rfind("ESCC,6,", 0), 0u);
    EXPECT_EQ(rows[2].rfind("PureOUT,6,", 0), 0u);
}

TEST_F(CliTest, MassCurveEndpoints) {
    const Result zero = invoke({"masscurve", fixture, "--grid", "0"});
    ASSERT_EQ(zero.code, 0) << zero.err;
    auto rows = lines(zero.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "c,mass,lower_bound,upper_bound,truncation_bound,r_of_c");
    EXPECT_EQ(rows[1].rfind("0,0.5,", 0), 0u) << rows[1];

    const Result one = invoke({"masscurve", fixture, "--grid", "1"});
    ASSERT_EQ(one.code, 0) << one.err;
    rows = lines(one.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1].rfind("1,0,", 0), 0u) << rows[1];

    const Result grid = invoke({"masscurve", fixture, "--grid", "0:1:0.25", "--coefficients",
                                path("coef.csv")});
    ASSERT_EQ(grid.code, 0) << grid.err;
    EXPECT_EQ(lines(grid.out).size(), 6u);
    const auto coef = lines(slurp(path("coef.csv")));
    EXPECT_EQ(coef[0], "k,a_k,lambda_k");
    EXPECT_EQ(coef[1].rfind("0,1,", 0), 0u);
}

TEST_F(CliTest, CstarFromScalars) {
    const Result r = invoke({"cstar", "--from-scalars", "1,0.97557,0.99954", "--out",
                             path("bounds.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("0.0185"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0.5001"), std::string::npos);
    EXPECT_NE(r.out.find("0.5062"), std::string::npos);
    EXPECT_NE(r.out.find("0.9820"), std::string::npos);
    const auto rows = lines(slurp(path("bounds.csv")));
    EXPECT_EQ(rows[0], "v,bound,value");

    // p = lambda pinches both intervals
    const Result pinch = invoke({"cstar", "--from-scalars", "1,0.9,0.9"});
    ASSERT_EQ(pinch.code, 0) << pinch.err;
    const webrank::DampingBounds b = webrank::dampingBounds(0.9, 0.9);
    EXPECT_NEAR(b.c1, b.c2, 1e-12);
}

TEST_F(CliTest, CstarOnFixture) {
    const Result r = invoke({"cstar", fixture, "--out", path("cstar.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("quasi_stationary"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("normalized_pagerank"), std::string::npos);
    EXPECT_GE(lines(slurp(path("cstar.csv"))).size(), 4u);
}

TEST_F(CliTest, LimitOnFixture) {
    const Result r = invoke({"limit", fixture});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "class_id,size,mu_entropy,limit_mass,fair_share,ratio");
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
    for (const std::string cmd : {"census", "pagerank", "masscurve", "limit", "cstar"}) {
        const Result a = invoke({cmd, fixture});
        const Result b = invoke({cmd, fixture});
        EXPECT_EQ(a.code, 0) << cmd;
        EXPECT_EQ(a.out, b.out) << cmd;
    }
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"pagerank", fixture, "--c", "1.0"}).code, 2);
    EXPECT_EQ(invoke({"pagerank", fixture, "--c", "abc"}).code, 2);
    EXPECT_EQ(invoke({"masscurve", fixture, "--grid", "0.5:0.1:0.1"}).code, 2);
    EXPECT_EQ(invoke({"cstar", "--from-scalars", "1,2"}).code, 2);
    EXPECT_EQ(invoke({"census"}).code, 2);
}

TEST_F(CliTest, InputErrors) {
    EXPECT_EQ(invoke({"census", path("missing.txt")}).code, 3);
    EXPECT_EQ(invoke({"census", write("bad.txt", "3\n0 x\n")}).code, 3);
    EXPECT_EQ(invoke({"census", write("range.txt", "3\n0 7\n")}).code, 3);
    EXPECT_EQ(invoke({"census", write("empty.txt", "# nothing\n")}).code, 3);
}

TEST_F(CliTest, ConvergenceFailure) {
    EXPECT_EQ(invoke({"pagerank", fixture, "--c", "0.99", "--max-iter", "3"}).code, 4);
}

TEST_F(CliTest, DegenerateInputs) {
    // one SCC with dangling-free cycle: no Pure OUT
    const std::string cycle = write("cycle.txt", "3\n0 1\n1 2\n2 0\n");
    EXPECT_EQ(invoke({"cstar", cycle}).code, 5);
    EXPECT_EQ(invoke({"limit", cycle}).code, 5);
    // closed escc beside a separate sink
    const std::string split = write("split.txt", "4\n0 1\n1 0\n2 3\n3 3\n");
    EXPECT_EQ(invoke({"cstar", split}).code, 5);
}

TEST_F(CliTest, NoPartialOutputOnError) {
    const std::string bad = write("bad.txt", "3\n0 1\n1 oops\n");
    const Result r = invoke({"census", bad, "--out", path("census.csv")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(path("census.csv")));
    EXPECT_FALSE(fs::exists(path("census.csv.tmp")));

    const std::string cycle = write("cycle.txt", "3\n0 1\n1 2\n2 0\n");
    EXPECT_EQ(invoke({"limit", cycle, "--out", path("limit.csv")}).code, 5);
    EXPECT_FALSE(fs::exists(path("limit.csv")));
}

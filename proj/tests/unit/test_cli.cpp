#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace fs = std::filesystem;
using densewin::tools::run_cli;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("densewin_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name), std::ios::binary) << text;
        return path(name);
    }

    static std::string read(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    int run(std::vector<std::string> args) {
        out_.str({});
        err_.str({});
        return run_cli(args, out_, err_);
    }

    std::string running_example() const { return DENSEWIN_TEST_DATA "/running_example.txt"; }

    fs::path dir_;
    std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, MineGoldenAllModes) {
    const std::string golden = read(DENSEWIN_TEST_DATA "/running_example_w10_s3.json");
    ASSERT_FALSE(golden.empty());
    for (const char* mode : {"baseline", "intersect", "full"}) {
        const auto out = path(std::string("r_") + mode + ".json");
        ASSERT_EQ(run({"mine", "--input", running_example(), "-W", "10", "-s", "3", "--mode", mode, "--out", out}), 0)
            << err_.str();
        EXPECT_EQ(read(out), golden) << mode;
    }
}

TEST_F(Cli, MineBenchRecord) {
    const auto bench = path("bench.json");
    ASSERT_EQ(run({"mine", "--input", running_example(), "-W", "10", "-s", "3", "--out", path("r.json"), "--bench", bench}), 0);
    const auto text = read(bench);
    EXPECT_NE(text.find("\"window_evals\""), std::string::npos);
    EXPECT_NE(text.find("\"mem_source\""), std::string::npos);
    EXPECT_NE(text.find("\"patterns_total\": 5"), std::string::npos);
}

TEST_F(Cli, MineExitCodes) {
    EXPECT_EQ(run({"mine", "--input", running_example(), "-W", "0", "-s", "3"}), 2);
    EXPECT_EQ(run({"mine", "--input", running_example(), "-W", "10", "-s", "0"}), 2);
    EXPECT_EQ(run({"mine", "--input", running_example(), "-W", "10", "-s", "3", "--mode", "fast"}), 2);
    EXPECT_EQ(run({"mine", "-W", "10", "-s", "3"}), 2);
    EXPECT_EQ(run({"mine", "--input", path("missing.txt"), "-W", "10", "-s", "3"}), 4);
    const auto bad = write("bad.txt", "1\ta\n1\tb\n");
    EXPECT_EQ(run({"mine", "--input", bad, "-W", "10", "-s", "3"}), 3);
    EXPECT_NE(err_.str().find("2"), std::string::npos);
    EXPECT_EQ(run({"mine", "--input", bad, "-W", "10", "-s", "1", "--merge-duplicates", "--out", path("m.json")}), 0);
    EXPECT_EQ(run({"mine", "--input", running_example(), "-W", "10", "-s", "3", "--out", path("no/such/dir.json")}), 4);
    EXPECT_EQ(run({}), 2);
}

TEST_F(Cli, GenDeterministicAndInfeasible) {
    const std::vector<std::string> base{"gen", "--t", "1e4", "--i", "1000", "--b", "5", "--n-patterns", "5"};
    auto args1 = base, args2 = base;
    args1.insert(args1.end(), {"--out", path("a.txt"), "--truth", path("a.json")});
    args2.insert(args2.end(), {"--out", path("b.txt"), "--truth", path("b.json")});
    ASSERT_EQ(run(args1), 0) << err_.str();
    ASSERT_EQ(run(args2), 0);
    EXPECT_EQ(read(path("a.txt")), read(path("b.txt")));
    EXPECT_EQ(read(path("a.json")), read(path("a.json")));

    EXPECT_EQ(run({"gen", "--t", "4999", "--i", "10000", "--b", "5", "--out", path("c.txt"), "--truth", path("c.json")}), 2);
    EXPECT_NE(err_.str().find("timeline"), std::string::npos);
}

TEST_F(Cli, EvalIdenticalAndDisjoint) {
    const auto truth = write("truth.json",
                             R"({"patterns":[{"items":["a","b"],"intervals":[[0,10]]},{"items":["b","c"],"intervals":[[5,9]]}]})");
    const auto disjoint = write("disjoint.json", R"({"patterns":[{"items":["x","y"],"intervals":[[0,10]]}]})");
    ASSERT_EQ(run({"eval", "--pred", truth, "--truth", truth, "--out", "-"}), 0) << err_.str();
    EXPECT_NE(out_.str().find("\"f1\": 1.0"), std::string::npos) << out_.str();
    EXPECT_NE(out_.str().find("\"mean_jaccard\": 1.0"), std::string::npos);
    EXPECT_NE(out_.str().find("\"mean_tp\": 1.0"), std::string::npos);

    ASSERT_EQ(run({"eval", "--pred", disjoint, "--truth", truth}), 0);
    EXPECT_NE(out_.str().find("\"f1\": 0.0"), std::string::npos) << out_.str();
    EXPECT_NE(out_.str().find("\"mean_jaccard\": 0.0"), std::string::npos);
    EXPECT_NE(out_.str().find("\"mean_tp\": \"undefined\""), std::string::npos);

    const auto broken = write("broken.json", R"({"patterns":3})");
    EXPECT_EQ(run({"eval", "--pred", broken, "--truth", truth}), 3);
    EXPECT_EQ(run({"eval", "--truth", truth}), 2);

    const auto promo = write("promo.json", R"({"scale":1,"periods":[[5,19]]})");
    ASSERT_EQ(run({"eval", "--pred", truth, "--truth", truth, "--promo", promo}), 0) << err_.str();
    EXPECT_NE(out_.str().find("\"promo\""), std::string::npos) << out_.str();
}

TEST_F(Cli, OracleCheck) {
    EXPECT_EQ(run({"oracle-check", "--trials", "50"}), 0) << err_.str();
    EXPECT_EQ(run({"oracle-check", "--input", running_example(), "-W", "10", "-s", "3"}), 0) << err_.str();
    EXPECT_EQ(run({"oracle-check", "--trials", "200", "--inject-fault"}), 1);
    EXPECT_NE((out_.str() + err_.str()).find("mismatch:"), std::string::npos);
}

TEST_F(Cli, BenchRowsFollowConfigModeRepetition) {
    const auto csv = path("bench.csv");
    const auto plot = path("plot.csv");
    ASSERT_EQ(run({"bench", "--grid", "t=6000,7000:i=1000:b=5", "--repeat", "2", "--modes", "all", "-W", "200",
                   "-s", "9", "--no-warmup", "--out", csv, "--plot-data", plot}),
              0)
        << err_.str();
    const auto text = read(csv);
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "t,i,b,seed,mode,rep,wall_ms,peak_mib,window_evals,patterns_total,patterns_len_ge2,mem_source");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 2 * 3 * 2);
    const auto agg = read(plot);
    EXPECT_EQ(std::count(agg.begin(), agg.end(), '\n'), 1 + 2 * 3);
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fardiff::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("fardiff_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string path(const std::string& name) const { return (dir / name).string(); }

    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

    static std::string read(const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    int invoke(std::vector<std::string> args) {
        out.str("");
        err.str("");
        return run(args, out, err);
    }

    static int count_lines(const std::string& text) {
        return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
    }

    fs::path dir;
    std::ostringstream out, err;
};

TEST_F(CliTest, EmbedSmallestRun) {
    write("p.csv", "0\n1\n3\n");
    ASSERT_EQ(invoke({"embed", path("p.csv"), "--L", "1", "--t", "0", "--out", path("e.csv")}), kExitOk) << err.str();
    const std::string csv = read(path("e.csv"));
    EXPECT_EQ(count_lines(csv), 4);  // header + 3 rows
    EXPECT_EQ(csv.substr(0, 5), "psi0\n");
    const auto meta = nlohmann::json::parse(read(path("e.csv.meta.json")));
    EXPECT_EQ(meta["eigenvalues"].size(), 3u);
    EXPECT_EQ(meta["L"], 1);
    EXPECT_EQ(meta["t"], 0);
    EXPECT_TRUE(out.str().empty());
}

TEST_F(CliTest, EmbedMissingFile) {
    const std::string missing = path("absent.csv");
    EXPECT_EQ(invoke({"embed", missing}), kExitInput);
    EXPECT_NE(err.str().find(missing), std::string::npos);
}

TEST_F(CliTest, EmbedIsByteIdenticalAcrossRuns) {
    write("p.csv", "0,0\n1,0.5\n3,1\n2,2\n-1,4\n");
    ASSERT_EQ(invoke({"embed", path("p.csv"), "--out", path("a.csv"), "--threads", "3"}), kExitOk);
    ASSERT_EQ(invoke({"embed", path("p.csv"), "--out", path("b.csv")}), kExitOk);
    EXPECT_EQ(read(path("a.csv")), read(path("b.csv")));
    EXPECT_EQ(read(path("a.csv.meta.json")), read(path("b.csv.meta.json")));
}

TEST_F(CliTest, EmbedToStdoutWithIds) {
    write("p.csv", "name,x\nr1,0\nr2,1\nr3,5\n");
    ASSERT_EQ(invoke({"embed", path("p.csv"), "--header", "--id-column", "--L", "2"}), kExitOk);
    EXPECT_EQ(out.str().substr(0, 14), "id,psi0,psi1\nr");
}

TEST_F(CliTest, ClusterSingleRow) {
    write("one.csv", "0.3,0.4\n");
    ASSERT_EQ(invoke({"cluster", path("one.csv")}), kExitOk);
    EXPECT_EQ(out.str(), "id,category\n0,0\n");
}

TEST_F(CliTest, ClusterFullVigilanceOneCategoryPerRow) {
    write("k.csv", "0,0\n1,0\n0,1\n1,1\n0.5,0.5\n");
    ASSERT_EQ(invoke({"cluster", path("k.csv"), "--rho", "1", "--beta", "1", "--model", path("m.json")}), kExitOk);
    EXPECT_EQ(nlohmann::json::parse(read(path("m.json")))["weights"].size(), 5u);
}

TEST_F(CliTest, ClusterRejectsBadVigilance) {
    write("k.csv", "0\n1\n");
    EXPECT_EQ(invoke({"cluster", path("k.csv"), "--rho", "1.5"}), kExitInput);
    EXPECT_EQ(invoke({"cluster", path("k.csv"), "--rho", "abc"}), kExitInput);
}

TEST_F(CliTest, PipelineRingsReportsTwoCategories) {
    ASSERT_EQ(invoke({"pipeline", "--generate", "rings:n_inner=100,n_outer=100,r_inner=1,r_outer=3,noise=0.05",
                      "--seed", "42", "--sigma", "0.3", "--t", "3", "--L", "1", "--skip-trivial", "--rho", "0.5",
                      "--report", path("r.json"), "--out", path("a.csv"), "--data-out", path("d.csv")}),
              kExitOk)
        << err.str();
    const auto report = nlohmann::json::parse(read(path("r.json")));
    EXPECT_EQ(report["n_categories"], 2);
    EXPECT_EQ(report["seed"], 42);
    EXPECT_EQ(report["source"], "generate:rings:n_inner=100,n_outer=100,r_inner=1,r_outer=3,noise=0.05");
    ASSERT_EQ(invoke({"eval", path("a.csv"), path("d.csv")}), kExitOk);
    EXPECT_EQ(nlohmann::json::parse(out.str())["ari"], 1.0);
}

TEST_F(CliTest, PipelineBlobsChainedWithEval) {
    ASSERT_EQ(invoke({"pipeline", "--generate", "blobs:k=3,n_per=50,spread=0.1,separation=10", "--skip-trivial",
                      "--out", path("a.csv"), "--data-out", path("d.csv")}),
              kExitOk);
    ASSERT_EQ(invoke({"eval", path("a.csv"), path("d.csv")}), kExitOk);
    const auto metrics = nlohmann::json::parse(out.str());
    EXPECT_GE(metrics["ari"].get<double>(), 0.95);
    EXPECT_EQ(metrics["n_labels"], 3);
}

TEST_F(CliTest, PipelineValidation) {
    EXPECT_EQ(invoke({"pipeline", "--generate", "rings", "--sigma", "0"}), kExitInput);
    EXPECT_NE(err.str().find("affinity"), std::string::npos);
    EXPECT_EQ(invoke({"pipeline"}), kExitInput);
    write("p.csv", "0\n1\n");
    EXPECT_EQ(invoke({"pipeline", path("p.csv"), "--generate", "rings"}), kExitInput);
    EXPECT_EQ(invoke({"pipeline", "--generate", "spiral"}), kExitInput);
    EXPECT_EQ(invoke({"pipeline", "--generate", "rings:radius=3"}), kExitInput);
}

TEST_F(CliTest, PipelineFromFileIsDeterministic) {
    write("p.csv", "0,0\n0.1,0\n0,0.1\n5,5\n5.1,5\n5,5.1\n");
    for (const char* name : {"a", "b"}) {
        ASSERT_EQ(invoke({"pipeline", path("p.csv"), "--out", path(std::string(name) + ".csv"), "--report",
                          path(std::string(name) + ".json"), "--threads", name[0] == 'a' ? "1" : "4"}),
                  kExitOk);
    }
    EXPECT_EQ(read(path("a.csv")), read(path("b.csv")));
    EXPECT_EQ(read(path("a.json")), read(path("b.json")));
}

TEST_F(CliTest, ConfigFileFillsUnsetFlagsOnly) {
    write("run.cfg",
          "# rings run\n"
          "generate = rings\n"
          "sigma = 0.3\n"
          "t = 3\n"
          "L = 1\n"
          "skip_trivial = true\n"
          "rho = 0.9\n");
    ASSERT_EQ(invoke({"pipeline", "--config", path("run.cfg"), "--rho", "0.5", "--report", path("r.json"), "--out",
                      path("a.csv")}),
              kExitOk)
        << err.str();
    const auto report = nlohmann::json::parse(read(path("r.json")));
    EXPECT_EQ(report["art"]["rho"], 0.5);
    EXPECT_EQ(report["sigma"], 0.3);
    EXPECT_EQ(report["L"], 1);
    EXPECT_EQ(report["skip_trivial"], true);
}

TEST_F(CliTest, ConfigFileRejectsUnknownKeys) {
    write("bad.cfg", "generate = rings\nwidth = 3\n");
    EXPECT_EQ(invoke({"pipeline", "--config", path("bad.cfg")}), kExitInput);
    EXPECT_NE(err.str().find("width"), std::string::npos);
    write("input.cfg", "input = " + path("p.csv") + "\n");
    write("p.csv", "0.2\n0.9\n");
    EXPECT_EQ(invoke({"cluster", "--config", path("input.cfg")}), kExitOk) << err.str();
}

TEST_F(CliTest, EvalCases) {
    write("a.csv", "id,category\n0,0\n1,0\n2,1\n3,1\n");
    write("b.csv", "id,category\n0,0\n1,1\n2,0\n3,1\n");
    write("short.csv", "id,category\n0,0\n");
    ASSERT_EQ(invoke({"eval", path("a.csv"), path("a.csv")}), kExitOk);
    EXPECT_EQ(nlohmann::json::parse(out.str())["ari"], 1.0);
    ASSERT_EQ(invoke({"eval", path("a.csv"), path("b.csv")}), kExitOk);
    const auto m = nlohmann::json::parse(out.str());
    EXPECT_DOUBLE_EQ(m["ari"].get<double>(), -0.5);
    EXPECT_DOUBLE_EQ(m["purity"].get<double>(), 0.5);
    EXPECT_EQ(m["n_categories"], 2);
    EXPECT_EQ(m["n_labels"], 2);
    EXPECT_EQ(invoke({"eval", path("a.csv"), path("short.csv")}), kExitInput);
}

TEST_F(CliTest, GenerateWritesLabelledCsv) {
    ASSERT_EQ(invoke({"generate", "blobs:k=2,n_per=3,m=3", "--seed", "9"}), kExitOk);
    EXPECT_EQ(out.str().substr(0, 15), "x0,x1,x2,label\n");
    EXPECT_EQ(count_lines(out.str()), 7);
}

TEST_F(CliTest, HelpAndUsage) {
    EXPECT_EQ(invoke({"--help"}), kExitOk);
    EXPECT_NE(out.str().find("pipeline"), std::string::npos);
    EXPECT_EQ(invoke({}), kExitInput);
    EXPECT_EQ(invoke({"frobnicate"}), kExitInput);
}

TEST_F(CliTest, BinaryExitCodes) {
    const std::string bin = FARDIFF_CLI_PATH;
    const auto code = [](const std::string& cmd) {
        const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(status);
    };
    EXPECT_EQ(code(bin + " generate rings"), 0);
    EXPECT_EQ(code(bin + " embed " + path("nope.csv")), 2);
}

}  // namespace
}  // namespace fardiff::cli

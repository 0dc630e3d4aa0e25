#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>

#include "fuzzylap/cli.hpp"

namespace fuzzylap::cli {
namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path(FUZZYLAP_TEST_TMP) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_with(RunOptions opts) {
    std::ostringstream out, err;
    const int code = run(opts, out, err);
    return {code, out.str(), err.str()};
}

double report_value(const std::string& report, const std::string& key) {
    const auto at = report.find(key + " = ");
    if (at == std::string::npos) return std::nan("");
    return std::stod(report.substr(at + key.size() + 3));
}

TEST(CliRun, HomogeneousExampleCsv) {
    const fs::path dir = fresh_dir("homogeneous");
    RunOptions opts;
    opts.problem_path = FUZZYLAP_PROBLEM_DIR "/homogeneous.fbvp";
    opts.out_dir = dir.string();
    const RunResult res = run_with(opts);
    ASSERT_EQ(res.code, kExitOk) << res.err;
    const std::string csv = read_file((dir / "solution_11.csv").string());
    std::istringstream lines(csv);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    EXPECT_EQ(header, "x,r,lower,upper");
    double x, r, lo, up;
    char comma;
    std::istringstream row(first);
    row >> x >> comma >> r >> comma >> lo >> comma >> up;
    EXPECT_EQ(x, 0.0);
    EXPECT_EQ(r, 0.0);
    EXPECT_NEAR(lo, -0.5, 1e-12);
    EXPECT_NEAR(up, 1.0, 1e-12);
    // 101 x samples times 11 r levels plus header
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 101 * 11 + 1);
    EXPECT_FALSE(fs::exists(dir / "solution_22.csv"));
}

TEST(CliRun, AllCasesReportFourBlocks) {
    const fs::path dir = fresh_dir("all");
    RunOptions opts;
    opts.problem_path = FUZZYLAP_PROBLEM_DIR "/schrodinger_step.fbvp";
    opts.out_dir = dir.string();
    ASSERT_EQ(run_with(opts).code, kExitOk);
    const std::string report = read_file((dir / "report.txt").string());
    std::size_t blocks = 0;
    for (auto at = report.find("case = "); at != std::string::npos; at = report.find("case = ", at + 1)) ++blocks;
    EXPECT_EQ(blocks, 4u);
    for (const char* c : {"11", "22", "12", "21"}) EXPECT_TRUE(fs::exists(dir / (std::string("solution_") + c + ".csv")));

    // mixed-case H1 at r = 0 with c_i evaluated at x = L = 1
    const double c1 = std::cos(1.0) + std::cosh(1.0), c2 = std::sin(1.0) + std::sinh(1.0);
    const double c3 = std::cos(1.0) - std::cosh(1.0), c4 = std::sin(1.0) - std::sinh(1.0);
    const double den = c2 * c2 - c4 * c4;
    const double h1 = 2 * c2 / den * (4 - 0.5 * c1 + 1.5 * c3) + 2 * c4 / den * (6 - 1.5 * c1 + 0.5 * c3);
    const std::string block12 = report.substr(report.find("case = 12"));
    EXPECT_NEAR(report_value(block12, "H1_r0"), h1, 1e-12 * std::abs(h1));
    // uncoupled F1 at r = 0
    const double f1 = (4 - 0.5 * (std::exp(1.0) + std::exp(-1.0))) / (0.5 * (std::exp(1.0) - std::exp(-1.0)));
    EXPECT_NEAR(report_value(report, "F1_r0"), f1, 1e-12 * std::abs(f1));
}

TEST(CliRun, CaseOverrideAndGrids) {
    const fs::path dir = fresh_dir("override");
    RunOptions opts;
    opts.problem_path = FUZZYLAP_PROBLEM_DIR "/schrodinger_step.fbvp";
    opts.out_dir = dir.string();
    opts.case_override = "21";
    opts.r_levels = 3;
    opts.x_samples = 5;
    ASSERT_EQ(run_with(opts).code, kExitOk);
    EXPECT_TRUE(fs::exists(dir / "solution_21.csv"));
    EXPECT_FALSE(fs::exists(dir / "solution_11.csv"));
    const std::string csv = read_file((dir / "solution_21.csv").string());
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5 * 3 + 1);

    opts.case_override = "33";
    EXPECT_EQ(run_with(opts).code, kExitUsage);
    opts.case_override.reset();
    opts.r_levels = 1;
    EXPECT_EQ(run_with(opts).code, kExitUsage);
}

TEST(CliRun, OracleAddsGap) {
    const fs::path dir = fresh_dir("oracle");
    RunOptions opts;
    opts.problem_path = FUZZYLAP_PROBLEM_DIR "/homogeneous.fbvp";
    opts.out_dir = dir.string();
    opts.oracle = true;
    ASSERT_EQ(run_with(opts).code, kExitOk);
    const std::string report = read_file((dir / "report.txt").string());
    EXPECT_LE(report_value(report, "oracle_max_gap"), 1e-5);
}

TEST(CliRun, EmptyFileIsUsageError) {
    const fs::path dir = fresh_dir("empty");
    write_file(dir / "empty.fbvp", "");
    RunOptions opts;
    opts.problem_path = (dir / "empty.fbvp").string();
    opts.out_dir = dir.string();
    const RunResult res = run_with(opts);
    EXPECT_EQ(res.code, kExitUsage);
    EXPECT_NE(res.err.find("missing section [ode]"), std::string::npos);
}

TEST(CliRun, MissingFileIsUsageError) {
    RunOptions opts;
    opts.problem_path = FUZZYLAP_PROBLEM_DIR "/does_not_exist.fbvp";
    opts.out_dir = fresh_dir("missing").string();
    EXPECT_EQ(run_with(opts).code, kExitUsage);
}

TEST(CliRun, ResonantProblemFailsEveryCase) {
    const fs::path dir = fresh_dir("resonant");
    RunOptions opts;
    opts.problem_path = FUZZYLAP_PROBLEM_DIR "/resonant.fbvp";
    opts.out_dir = dir.string();
    const RunResult res = run_with(opts);
    EXPECT_EQ(res.code, kExitAllFailed);
    const std::string report = read_file((dir / "report.txt").string());
    EXPECT_NE(report.find("error_kind = eigenvalue_degeneracy"), std::string::npos);
    EXPECT_NE(report.find("error_kind = case_inapplicable"), std::string::npos);
}

TEST(CliRun, OutputIsDeterministic) {
    RunOptions opts;
    opts.problem_path = FUZZYLAP_PROBLEM_DIR "/schrodinger_step.fbvp";
    opts.out_dir = fresh_dir("det_a").string();
    const RunResult a = run_with(opts);
    opts.out_dir = fresh_dir("det_b").string();
    const RunResult b = run_with(opts);
    EXPECT_EQ(a.out, b.out);
    for (const char* f : {"report.txt", "summary.txt", "solution_11.csv", "solution_12.csv"}) {
        EXPECT_EQ(read_file((fs::path(FUZZYLAP_TEST_TMP) / "det_a" / f).string()),
                  read_file((fs::path(FUZZYLAP_TEST_TMP) / "det_b" / f).string()))
            << f;
    }
}

}  // namespace
}  // namespace fuzzylap::cli

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "invheat/cli/commands.hpp"
#include "invheat/problem/problem.hpp"

namespace fs = std::filesystem;
using namespace invheat::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "invheat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path(INVHEAT_TEST_TMP) / "cli" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_problem(const fs::path& dir, const std::string& text) {
    const fs::path f = dir / "problem.prob";
    std::ofstream(f) << text;
    return f;
}

std::string slurp(const fs::path& f) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string example = invheat::problem::bundled_example_path().string();

}  // namespace

TEST(Cli, ValidateExampleSucceeds) {
    const auto r = invoke({"validate", example});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_NE(r.out.find("A1"), std::string::npos);
}

TEST(Cli, ValidateIncreasingEnergyFails) {
    const auto dir = scratch("increasing");
    const auto f = write_problem(dir, "phi = (1-x)*sin(2*pi*x)\nF = 0\nE = t\nT = 1/4\n");
    const auto r = invoke({"validate", f.string()});
    EXPECT_EQ(r.code, exit_failure);
    EXPECT_NE(r.out.find("A1"), std::string::npos);
}

TEST(Cli, MissingFileIsUsageError) {
    EXPECT_EQ(invoke({"validate", "/nonexistent/x.prob"}).code, exit_usage);
    EXPECT_EQ(invoke({"solve", "/nonexistent/x.prob"}).code, exit_usage);
}

TEST(Cli, MalformedFileIsUsageError) {
    const auto dir = scratch("malformed");
    const auto f = write_problem(dir, "phi = sin(\nF = 0\nE = 1\nT = 1\n");
    const auto r = invoke({"validate", f.string()});
    EXPECT_EQ(r.code, exit_usage);
    EXPECT_NE(r.err.find("line 1"), std::string::npos);
}

TEST(Cli, CoarseGridIsUsageError) {
    const auto dir = scratch("coarse");
    const auto r = invoke({"solve", example, "--method", "fdm", "--M", "2", "--out", dir.string()});
    EXPECT_EQ(r.code, exit_usage);
    EXPECT_NE(r.err.find("grid too coarse"), std::string::npos);
}

TEST(Cli, UnknownOptionsAreUsageErrors) {
    EXPECT_EQ(invoke({"solve", example, "--method", "fem"}).code, exit_usage);
    EXPECT_EQ(invoke({"frobnicate"}).code, exit_usage);
    EXPECT_EQ(invoke({"solve", example, "--gradient", "backward"}).code, exit_usage);
}

TEST(Cli, ConvergenceNeedsExactSolution) {
    const auto dir = scratch("noexact");
    const auto f = write_problem(dir, "phi = (1-x)*sin(2*pi*x)\nF = 0\nE = exp(-t)/(2*pi)\nT = 1/4\n");
    EXPECT_EQ(invoke({"convergence", f.string(), "--out", dir.string()}).code, exit_usage);
}

TEST(Cli, SolveIsDeterministic) {
    const auto d1 = scratch("det1");
    const auto d2 = scratch("det2");
    const std::vector<std::string> common{"solve", example, "--method", "fdm", "--M", "40"};
    auto a1 = common;
    a1.insert(a1.end(), {"--out", d1.string()});
    auto a2 = common;
    a2.insert(a2.end(), {"--out", d2.string()});
    ASSERT_EQ(invoke(a1).code, exit_ok);
    ASSERT_EQ(invoke(a2).code, exit_ok);
    for (const char* name : {"a.csv", "u.csv"}) {
        ASSERT_TRUE(fs::exists(d1 / name)) << name;
        EXPECT_EQ(slurp(d1 / name), slurp(d2 / name)) << name;
    }
    const auto a_csv = slurp(d1 / "a.csv");
    EXPECT_EQ(a_csv.substr(0, a_csv.find('\n')), "t,Exact,Approximate,Error,Relative Error");
}

TEST(Cli, ConvergenceWritesTable) {
    const auto dir = scratch("conv");
    const auto r = invoke({"convergence", example, "--method", "fdm-forward", "--levels", "20,40", "--out", dir.string()});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(fs::exists(dir / "convergence.csv"));
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace invheat::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;  ///< numerical or acceptance failure
inline constexpr int exit_usage = 2;    ///< bad arguments or unreadable input

/// Parameters shared by the subcommands. Unset optionals take per-method
/// defaults (see README).
struct RunConfig {
    std::filesystem::path problem;
    std::string method = "fdm";
    int K = 64;
    int M = 200;
    std::optional<int> N;
    std::optional<double> tol;
    std::optional<int> max_iter;
    std::filesystem::path out = ".";
    bool force = false;
    std::uint64_t seed = 12345;
    std::string gradient = "second-order";
    std::string coefficient = "level-average";
    std::string a_formula = "pointwise";
    std::vector<int> levels;
    std::vector<double> deltas{0.0, 1e-4, 2e-4, 4e-4};
};

int cmd_validate(const std::filesystem::path& problem, std::ostream& out, std::ostream& err);
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_stability(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace invheat::cli

#pragma once

// `symsperner` command line: solve, verify-lemma, verify-theorem, subdivide,
// check-input. Every flag can also be set through SYMSPERNER_<FLAG> (for
// example SYMSPERNER_MAX_DEPTH); an explicit flag wins.

#include "symsperner/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symsperner {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int bad_input = 1;
inline constexpr int budget = 2;
inline constexpr int assumption = 3;
inline constexpr int theorem = 4;
}  // namespace exit_code

struct CliConfig {
    std::string subcommand;
    std::string input;
    std::string output;  // empty: stdout
    std::string repro;   // empty: derived from output
    std::optional<int> max_depth;  // empty: 7 for n <= 3, 2 for n = 4, 5, 1 beyond
    std::string target_gap = "1/20";
    std::uint64_t simplex_budget = kDefaultSimplexBudget;
    std::uint64_t seed = 0;
    SearchMode mode = SearchMode::det;
    unsigned jobs = 1;
    int n = 3;
    int depth = 1;
    std::optional<int> trials;  // empty: 50 for verify-lemma, 100 for verify-theorem
    int identity_trials = 1000;
    std::optional<LabelShape> shape;
    bool corrupt = false;
};

int default_max_depth(int n);

/// Parses argv and dispatches. Reports go to `out` (or --output), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Solves an already-built problem; the file-based path goes through cmd_solve(config).
int cmd_solve(const CliConfig& config, const Problem& problem, std::ostream& out, std::ostream& err);
int cmd_solve(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_lemma(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_theorem(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_subdivide(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_check_input(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace symsperner

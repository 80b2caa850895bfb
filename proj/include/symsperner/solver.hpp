#pragma once

// End-to-end envy-free division: refine sd^N, label, find a fully-labeled
// simplex, read a division and an assignment off its barycenter.

#include "symsperner/preferences.hpp"
#include "symsperner/sperner_engine.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symsperner {

struct Problem {
    int n = 0;
    std::vector<PreferenceOracle> players;  // player i is players[i - 1]

    /// Throws ArgumentError unless n >= 1, there are n players and every oracle has size n.
    void validate() const;
};

/// pi: for each player (0-based slot), a position in Division::pieces() or the empty piece.
struct Assignment {
    std::vector<std::optional<std::size_t>> piece;
    /// Every piece of the division is assigned to some player.
    bool complete = false;
};

struct EnvyCheck {
    std::vector<bool> cond_i;  // per player: pi(i) in p_i(D)
    bool cond_ii = false;      // D is covered by pi([n])
    bool cond_iii = false;     // no nonempty piece assigned twice
    bool all() const;
};

enum class SolveStatus { exact, approximate, budget_exhausted };
std::string to_string(SolveStatus status);

struct SolveOptions {
    int max_depth = 7;
    Rational target_gap{1, 20};
    std::uint64_t simplex_budget = kDefaultSimplexBudget;
    unsigned jobs = 1;
    /// Search mode; n neither prime nor 4 always falls back to matching mode.
    SearchMode mode = SearchMode::det;
    /// Extra interior points for the full division spot check.
    std::vector<Point> extra_samples;
};

struct DepthRecord {
    int depth = 0;
    Rational mesh;
    std::uint64_t simplices = 0;
    std::size_t witnesses = 0;
    std::optional<Rational> gap;  // empty when a custom oracle is present
};

struct SolveResult {
    Point x_star;
    Division division;
    /// Piece with the picked index for every player (empty only for zero-length picks).
    Assignment assignment;
    /// Same, but with pi(i) = empty piece whenever player i does not accept its pick.
    Assignment strict_assignment;
    std::vector<int> picked;  // j_i per player
    FullyLabeledWitness witness;
    SearchMode mode;
    std::vector<DepthRecord> trace;
    std::optional<Rational> envy_gap;
    EnvyCheck check;
    SolveStatus status;
    std::vector<std::string> warnings;
};

/// j_i for every player i: the label the witness picks at the vertex player i owns.
std::vector<int> picked_indices(const Triangulation& t, const FullyLabeledWitness& witness, const OwnerLabeling& o);

/// pi(i) = (X_{j_i - 1}, X_{j_i}) when that piece has positive length and player
/// i accepts it, the empty piece otherwise.
Assignment extract_assignment(std::span<const int> picked, const Division& division,
                              std::span<const PreferenceOracle> oracles);

/// pi(i) = (X_{j_i - 1}, X_{j_i}) when it has positive length, regardless of acceptance.
Assignment index_assignment(std::span<const int> picked, const Division& division);

EnvyCheck verify_envy_free(const Division& division, const Assignment& assignment,
                           std::span<const PreferenceOracle> oracles);

/// Largest per-player shortfall, measured with the player's own density.
/// Attraction: heaviest piece minus assigned piece. Rejection with n pieces:
/// assigned piece minus lightest piece (the whole mass when given the empty
/// piece). Rejection with fewer pieces: 0 for the empty piece, else the assigned
/// measure. Empty when some oracle is custom.
std::optional<Rational> envy_gap(const Division& division, const Assignment& assignment,
                                 std::span<const PreferenceOracle> oracles);

/// Throws AssumptionViolation when an oracle fails the full division spot check,
/// TheoremViolation when no witness exists, BudgetError when even depth 1 is over budget.
SolveResult solve(const Problem& problem, const SolveOptions& options = {});

}  // namespace symsperner

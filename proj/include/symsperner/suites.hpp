#pragma once

// Seeded randomized suites behind `verify-lemma` and `verify-theorem`, and the
// random inputs they draw.

#include "symsperner/io.hpp"
#include "symsperner/sperner_engine.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace symsperner {

/// p/q with |p| <= max_abs_numerator and 1 <= q <= max_denominator.
Rational random_rational(std::mt19937_64& rng, int max_abs_numerator = 6, int max_denominator = 6);

/// n columns with random rational entries (negatives allowed), each summing to 1.
std::vector<RationalVector> random_sum_one_columns(int n, std::mt19937_64& rng);

/// lambda(v) with random rational coordinates on supp(v), zero elsewhere, summing to 1.
PointLabeling random_affine_labeling(const Triangulation& t, std::mt19937_64& rng);

/// lambda(v) = x_v.
PointLabeling identity_labeling(const Triangulation& t);

struct LemmaSuiteConfig {
    int n = 3;
    int depth = 1;
    int trials = 50;
    int identity_trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t simplex_budget = kDefaultSimplexBudget;
    unsigned jobs = 1;
    /// Moves one boundary lambda(v) off the affine hull of supp(v) in the first trial.
    bool corrupt = false;
};

struct SuiteReport {
    Json report;
    std::size_t failures = 0;
};

/// |det_sum| = 1 on the identity labeling and on `trials` random labelings of
/// sd^depth, then the projection identity on `identity_trials` random instances.
/// Throws BudgetError, and InvariantViolation for a corrupted labeling.
SuiteReport run_lemma_suite(const LemmaSuiteConfig& config);

struct TheoremSuiteConfig {
    int n = 3;
    int max_depth = 1;
    int trials = 100;
    std::uint64_t seed = 0;
    std::uint64_t simplex_budget = kDefaultSimplexBudget;
    unsigned jobs = 1;
    /// Defaults to restricted for n = 4 and general otherwise.
    std::optional<LabelShape> shape;
};

/// Random nice labelings of sd^1 .. sd^max_depth. For n prime or 4 each trial
/// must produce a det-mode witness whose SDR checks out; other n only records
/// nonzero_scan values and matching-mode counts. Violations are collected with
/// their serialized instance rather than thrown.
SuiteReport run_theorem_suite(const TheoremSuiteConfig& config);

}  // namespace symsperner

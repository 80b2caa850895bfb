#include "symsperner/solver.hpp"

#include "symsperner/io.hpp"

#include <algorithm>

namespace symsperner {

void Problem::validate() const {
    if (n < 1) throw ArgumentError("problem needs n >= 1");
    if (static_cast<int>(players.size()) != n) {
        throw ArgumentError("problem has " + std::to_string(players.size()) + " players but n = " + std::to_string(n));
    }
    for (std::size_t i = 0; i < players.size(); ++i) {
        if (players[i].n() != n) throw ArgumentError("player " + std::to_string(i + 1) + " oracle has the wrong size");
    }
}

bool EnvyCheck::all() const {
    return cond_ii && cond_iii && std::all_of(cond_i.begin(), cond_i.end(), [](bool b) { return b; });
}

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::exact: return "exact";
        case SolveStatus::approximate: return "approximate";
        case SolveStatus::budget_exhausted: return "budget-exhausted";
    }
    return "unknown";
}

std::vector<int> picked_indices(const Triangulation& t, const FullyLabeledWitness& witness, const OwnerLabeling& o) {
    const auto ids = t.simplex(witness.simplex);
    std::vector<int> picked(t.n(), 0);
    for (std::size_t c = 0; c < ids.size(); ++c) {
        const int owner = o(ids[c]);
        if (owner < 1 || owner > t.n() || picked[owner - 1] != 0) {
            throw InvariantViolation("owners of the witness simplex are not a bijection onto [n]");
        }
        picked[owner - 1] = witness.sdr(static_cast<int>(c) + 1);
    }
    return picked;
}

namespace {
bool covers_all(const Assignment& a, std::size_t pieces) {
    std::vector<bool> covered(pieces, false);
    for (const auto& p : a.piece) {
        if (p) covered[*p] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}
}  // namespace

Assignment index_assignment(std::span<const int> picked, const Division& division) {
    Assignment a;
    for (int j : picked) a.piece.push_back(division.piece_at_index(j));
    a.complete = covers_all(a, division.piece_count());
    return a;
}

Assignment extract_assignment(std::span<const int> picked, const Division& division,
                              std::span<const PreferenceOracle> oracles) {
    if (picked.size() != oracles.size()) throw ArgumentError("one picked index per player is required");
    Assignment a;
    for (std::size_t i = 0; i < picked.size(); ++i) {
        auto position = division.piece_at_index(picked[i]);
        if (position) {
            const Acceptance accepted = oracles[i].evaluate(division);
            if (!std::binary_search(accepted.pieces.begin(), accepted.pieces.end(), *position)) position.reset();
        }
        a.piece.push_back(position);
    }
    a.complete = covers_all(a, division.piece_count());
    return a;
}

EnvyCheck verify_envy_free(const Division& division, const Assignment& assignment,
                           std::span<const PreferenceOracle> oracles) {
    if (assignment.piece.size() != oracles.size()) throw ArgumentError("assignment size differs from the player count");
    EnvyCheck check;
    for (std::size_t i = 0; i < oracles.size(); ++i) {
        const Acceptance accepted = oracles[i].evaluate(division);
        const auto& p = assignment.piece[i];
        check.cond_i.push_back(p ? std::binary_search(accepted.pieces.begin(), accepted.pieces.end(), *p)
                                 : accepted.empty_piece);
    }
    check.cond_ii = covers_all(assignment, division.piece_count());
    check.cond_iii = true;
    std::vector<bool> taken(division.piece_count(), false);
    for (const auto& p : assignment.piece) {
        if (!p) continue;
        if (taken[*p]) check.cond_iii = false;
        taken[*p] = true;
    }
    return check;
}

std::optional<Rational> envy_gap(const Division& division, const Assignment& assignment,
                                 std::span<const PreferenceOracle> oracles) {
    if (assignment.piece.size() != oracles.size()) throw ArgumentError("assignment size differs from the player count");
    Rational worst(0);
    for (std::size_t i = 0; i < oracles.size(); ++i) {
        const Density* d = oracles[i].density();
        if (d == nullptr) return std::nullopt;
        const auto& p = assignment.piece[i];
        const Rational assigned = p ? d->measure(division.pieces()[*p]) : Rational(0);
        Rational gap(0);
        if (oracles[i].kind() == PreferenceOracle::Kind::attraction) {
            Rational heaviest(0);
            for (const Interval& piece : division.pieces()) heaviest = std::max(heaviest, d->measure(piece));
            gap = heaviest - assigned;
        } else if (static_cast<int>(division.piece_count()) == oracles[i].n()) {
            if (!p) {
                gap = d->total_mass();
            } else {
                Rational lightest = d->measure(division.pieces().front());
                for (const Interval& piece : division.pieces()) lightest = std::min(lightest, d->measure(piece));
                gap = assigned - lightest;
            }
        } else {
            gap = assigned;
        }
        worst = std::max(worst, gap);
    }
    return worst;
}

SolveResult solve(const Problem& problem, const SolveOptions& options) {
    problem.validate();
    const int n = problem.n;
    if (options.max_depth < 1) throw ArgumentError("max_depth must be at least 1");

    std::vector<Point> samples = default_full_division_samples(n);
    samples.insert(samples.end(), options.extra_samples.begin(), options.extra_samples.end());
    for (std::size_t i = 0; i < problem.players.size(); ++i) {
        const FullDivisionReport report = validate_full_division(problem.players[i], n, samples);
        if (!report.passed) {
            throw AssumptionViolation("validate_full_division failed for player " + std::to_string(i + 1) + ": " +
                                      report.reason);
        }
    }

    std::vector<std::string> warnings;
    SearchMode mode = options.mode;
    if (!existence_guaranteed(n)) {
        warnings.push_back("n = " + std::to_string(n) +
                           " is neither prime nor 4: no existence guarantee, using matching mode");
        mode = SearchMode::matching;
    }
    if (subdivision_simplex_count(n, 1) > options.simplex_budget) {
        throw BudgetError("depth 1 already exceeds the simplex budget of " + std::to_string(options.simplex_budget));
    }

    const std::span<const PreferenceOracle> oracles(problem.players);
    Triangulation t = standard_triangulation(n);
    std::optional<SolveResult> result;
    std::vector<DepthRecord> trace;
    SolveStatus status = SolveStatus::approximate;

    for (int depth = 1; depth <= options.max_depth; ++depth) {
        if (subdivision_simplex_count(n, depth) > options.simplex_budget) {
            status = SolveStatus::budget_exhausted;
            break;
        }
        t = barycentric_subdivide(t);
        const OwnerLabeling owners = owner_labeling(t);
        if (const CheckReport r = check_owner(t, owners); !r.ok()) {
            throw InvariantViolation("owner labeling check failed: " + r.violation->reason);
        }
        const VertexLabeling labels = build_labeling(t, owners, oracles, options.jobs);

        std::vector<FullyLabeledWitness> witnesses;
        if (mode == SearchMode::det && existence_guaranteed(n)) {
            witnesses = theorem_witnesses(t, labels, options.jobs);
        } else {
            witnesses = find_fully_labeled(t, labels, mode, options.jobs);
            if (witnesses.empty()) {
                throw TheoremViolation("no fully-labeled simplex at depth " + std::to_string(depth) +
                                           " (n = " + std::to_string(n) + ", unguaranteed)",
                                       instance_to_json(t, labels).dump());
            }
        }
        const FullyLabeledWitness& tau = witnesses.front();

        RationalVector center = RationalVector::Zero(n);
        for (VertexId v : t.simplex(tau.simplex)) center += t.point(v).coords();
        center /= Rational(n);
        Point x_star(std::move(center));
        Division division(x_star);

        std::vector<int> picked = picked_indices(t, tau, owners);
        Assignment assignment = index_assignment(picked, division);
        Assignment strict = extract_assignment(picked, division, oracles);
        std::optional<Rational> gap = envy_gap(division, assignment, oracles);
        EnvyCheck check = verify_envy_free(division, assignment, oracles);

        trace.push_back(DepthRecord{depth, mesh_size(t), t.simplex_count(), witnesses.size(), gap});
        result.emplace(SolveResult{std::move(x_star), std::move(division), std::move(assignment), std::move(strict),
                                   std::move(picked), tau, mode, {}, gap, std::move(check),
                                   SolveStatus::approximate, {}});

        const bool exact = result->check.all() && (!gap || *gap == 0);
        if (exact) {
            status = SolveStatus::exact;
            break;
        }
        if (gap && *gap <= options.target_gap) {
            status = SolveStatus::approximate;
            break;
        }
    }

    result->trace = std::move(trace);
    result->status = status;
    result->warnings = std::move(warnings);
    return std::move(*result);
}

}  // namespace symsperner

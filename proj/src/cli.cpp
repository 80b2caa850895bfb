#include "symsperner/cli.hpp"

#include "symsperner/io.hpp"
#include "symsperner/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

namespace symsperner {

int default_max_depth(int n) {
    if (n <= 3) return 7;
    if (n <= 5) return 2;
    return 1;
}

namespace {

// Deepest level the theorem suite visits when --max-depth is absent.
int default_theorem_depth(int n) {
    switch (n) {
        case 2: return 6;
        case 3: return 3;
        case 4: return 2;
        default: return 1;
    }
}

void emit(const CliConfig& config, const Json& doc, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (config.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file) throw ArgumentError("cannot write output file '" + config.output + "'");
    file << text;
}

std::string repro_path(const CliConfig& config) {
    if (!config.repro.empty()) return config.repro;
    if (!config.output.empty()) return config.output + ".repro.json";
    return "symsperner-repro.json";
}

void write_repro(const CliConfig& config, const Json& instance, std::ostream& err) {
    const std::string path = repro_path(config);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot write repro dump '" << path << "'\n";
        return;
    }
    file << instance.dump() << "\n";
    err << "repro instance written to " << path << "\n";
}

// Maps library exceptions onto exit codes.
int guarded(const CliConfig& config, std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        write_repro(config, Json::parse(e.instance_json()), err);
        return exit_code::theorem;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_code::budget;
    } catch (const AssumptionViolation& e) {
        err << "assumption violation: " << e.what() << "\n";
        return exit_code::assumption;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return exit_code::assumption;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return exit_code::assumption;
    } catch (const ArgumentError& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_code::bad_input;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return exit_code::bad_input;
    }
}

Rational parse_target_gap(const std::string& text) {
    Rational gap;
    try {
        gap = parse_rational(text);
    } catch (const ArgumentError& e) {
        throw ArgumentError(std::string("--target-gap: ") + e.what());
    }
    if (gap < 0) throw ArgumentError("--target-gap must be nonnegative");
    return gap;
}

const char* mode_name(SearchMode mode) { return mode == SearchMode::det ? "det" : "matching"; }

}  // namespace

int cmd_solve(const CliConfig& config, const Problem& problem, std::ostream& out, std::ostream& err) {
    return guarded(config, err, [&] {
        SolveOptions options;
        options.max_depth = config.max_depth.value_or(default_max_depth(problem.n));
        options.target_gap = parse_target_gap(config.target_gap);
        options.simplex_budget = config.simplex_budget;
        options.jobs = config.jobs;
        options.mode = config.mode;
        const SolveResult result = solve(problem, options);
        for (const std::string& w : result.warnings) err << "warning: " << w << "\n";
        Json doc = solve_result_to_json(result);
        doc["config"] = Json{{"n", problem.n},
                             {"max_depth", options.max_depth},
                             {"target_gap", to_json(options.target_gap)},
                             {"budget", options.simplex_budget},
                             {"mode", mode_name(options.mode)}};
        emit(config, doc, out);
        return result.status == SolveStatus::budget_exhausted ? exit_code::budget : exit_code::ok;
    });
}

int cmd_solve(const CliConfig& config, std::ostream& out, std::ostream& err) {
    Problem problem;
    if (const int code = guarded(config, err, [&] {
            problem = load_problem(config.input);
            return exit_code::ok;
        });
        code != exit_code::ok) {
        return code;
    }
    return cmd_solve(config, problem, out, err);
}

int cmd_verify_lemma(const CliConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(config, err, [&] {
        LemmaSuiteConfig suite;
        suite.n = config.n;
        suite.depth = config.depth;
        suite.trials = config.trials.value_or(50);
        suite.identity_trials = config.identity_trials;
        suite.seed = config.seed;
        suite.simplex_budget = config.simplex_budget;
        suite.jobs = config.jobs;
        suite.corrupt = config.corrupt;
        const SuiteReport report = run_lemma_suite(suite);
        emit(config, report.report, out);
        return report.failures == 0 ? exit_code::ok : exit_code::assumption;
    });
}

int cmd_verify_theorem(const CliConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(config, err, [&] {
        TheoremSuiteConfig suite;
        suite.n = config.n;
        suite.max_depth = config.max_depth.value_or(default_theorem_depth(config.n));
        suite.trials = config.trials.value_or(100);
        suite.seed = config.seed;
        suite.simplex_budget = config.simplex_budget;
        suite.jobs = config.jobs;
        suite.shape = config.shape;
        const SuiteReport report = run_theorem_suite(suite);
        emit(config, report.report, out);
        if (report.failures == 0) return exit_code::ok;
        err << report.failures << " theorem-suite failure(s)\n";
        write_repro(config, report.report["failures"].front()["instance"], err);
        return exit_code::theorem;
    });
}

int cmd_subdivide(const CliConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(config, err, [&] {
        const Triangulation t = sd_pow(config.n, config.depth, config.simplex_budget);
        emit(config, triangulation_stats(t), out);
        return exit_code::ok;
    });
}

int cmd_check_input(const CliConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(config, err, [&] {
        const Problem problem = load_problem(config.input);
        const std::vector<Point> samples = default_full_division_samples(problem.n);
        Json players = Json::array();
        bool valid = true;
        for (std::size_t i = 0; i < problem.players.size(); ++i) {
            const FullDivisionReport r = validate_full_division(problem.players[i], problem.n, samples);
            Json entry{{"player", i + 1}, {"type", problem.players[i].name()}, {"full_division", r.passed}};
            if (!r.passed) {
                valid = false;
                entry["reason"] = r.reason;
                if (r.witness) entry["witness"] = to_json(r.witness->coords());
            }
            players.push_back(std::move(entry));
        }
        emit(config,
             Json{{"n", problem.n},
                  {"players", std::move(players)},
                  {"existence_guaranteed", existence_guaranteed(problem.n)},
                  {"valid", valid}},
             out);
        if (!valid) err << "validate_full_division failed for at least one player\n";
        return valid ? exit_code::ok : exit_code::assumption;
    });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig config;
    CLI::App app{"Exact symmetric Sperner machinery and envy-free cake division"};
    app.require_subcommand(1);

    const std::map<std::string, SearchMode> modes{{"det", SearchMode::det}, {"matching", SearchMode::matching}};
    const std::map<std::string, LabelShape> shapes{{"general", LabelShape::general}, {"restricted", LabelShape::restricted}};

    auto input = [&](CLI::App* sub) {
        sub->add_option("--input", config.input, "Problem JSON file")->required()->envname("SYMSPERNER_INPUT");
    };
    auto output = [&](CLI::App* sub) {
        sub->add_option("--output", config.output, "Write the JSON report here instead of stdout")
            ->envname("SYMSPERNER_OUTPUT");
    };
    auto budget = [&](CLI::App* sub) {
        sub->add_option("--budget", config.simplex_budget, "Maximal simplex count")
            ->check(CLI::PositiveNumber)
            ->envname("SYMSPERNER_BUDGET");
    };
    auto jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", config.jobs, "Worker threads for per-simplex work")
            ->check(CLI::Range(1u, 256u))
            ->envname("SYMSPERNER_JOBS");
    };
    auto seed = [&](CLI::App* sub) {
        sub->add_option("--seed", config.seed, "Seed for the randomized suites")->envname("SYMSPERNER_SEED");
    };
    auto max_depth = [&](CLI::App* sub) {
        sub->add_option("--max-depth", config.max_depth, "Deepest subdivision level")
            ->check(CLI::Range(1, 64))
            ->envname("SYMSPERNER_MAX_DEPTH");
    };
    auto size = [&](CLI::App* sub) {
        sub->add_option("-n,--n", config.n, "Number of players / simplex vertices")
            ->check(CLI::Range(1, 32))
            ->envname("SYMSPERNER_N");
    };
    auto repro = [&](CLI::App* sub) {
        sub->add_option("--repro", config.repro, "Where to dump a failing instance")->envname("SYMSPERNER_REPRO");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "Approximate an envy-free division");
    input(solve_cmd);
    output(solve_cmd);
    max_depth(solve_cmd);
    solve_cmd->add_option("--target-gap", config.target_gap, "Stop once the envy gap is at most this rational")
        ->envname("SYMSPERNER_TARGET_GAP");
    budget(solve_cmd);
    seed(solve_cmd);
    solve_cmd->add_option("--mode", config.mode, "Witness search mode (det|matching)")
        ->transform(CLI::CheckedTransformer(modes))
        ->envname("SYMSPERNER_MODE");
    jobs(solve_cmd);
    repro(solve_cmd);

    CLI::App* lemma_cmd = app.add_subcommand("verify-lemma", "Check the determinant-sum and projection identities");
    size(lemma_cmd);
    lemma_cmd->add_option("--depth", config.depth, "Subdivision depth")
        ->check(CLI::Range(0, 64))
        ->envname("SYMSPERNER_DEPTH");
    lemma_cmd->add_option("--trials", config.trials, "Random labelings")
        ->check(CLI::NonNegativeNumber)
        ->envname("SYMSPERNER_TRIALS");
    lemma_cmd->add_option("--identity-trials", config.identity_trials, "Random projection-identity instances")
        ->check(CLI::NonNegativeNumber)
        ->envname("SYMSPERNER_IDENTITY_TRIALS");
    lemma_cmd->add_flag("--corrupt", config.corrupt, "Push one label off its affine hull (negative control)");
    seed(lemma_cmd);
    budget(lemma_cmd);
    jobs(lemma_cmd);
    output(lemma_cmd);

    CLI::App* theorem_cmd = app.add_subcommand("verify-theorem", "Search witnesses on random nice labelings");
    size(theorem_cmd);
    max_depth(theorem_cmd);
    theorem_cmd->add_option("--trials", config.trials, "Random labelings per depth")
        ->check(CLI::NonNegativeNumber)
        ->envname("SYMSPERNER_TRIALS");
    theorem_cmd->add_option("--shape", config.shape, "Label shape (general|restricted)")
        ->transform(CLI::CheckedTransformer(shapes))
        ->envname("SYMSPERNER_SHAPE");
    seed(theorem_cmd);
    budget(theorem_cmd);
    jobs(theorem_cmd);
    output(theorem_cmd);
    repro(theorem_cmd);

    CLI::App* subdivide_cmd = app.add_subcommand("subdivide", "Statistics of sd^depth");
    size(subdivide_cmd);
    subdivide_cmd->add_option("--depth", config.depth, "Subdivision depth")
        ->check(CLI::Range(0, 64))
        ->envname("SYMSPERNER_DEPTH");
    budget(subdivide_cmd);
    output(subdivide_cmd);

    CLI::App* check_cmd = app.add_subcommand("check-input", "Validate a problem file");
    input(check_cmd);
    output(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::bad_input;
    }

    if (solve_cmd->parsed()) return cmd_solve(config, out, err);
    if (lemma_cmd->parsed()) return cmd_verify_lemma(config, out, err);
    if (theorem_cmd->parsed()) return cmd_verify_theorem(config, out, err);
    if (subdivide_cmd->parsed()) return cmd_subdivide(config, out, err);
    return cmd_check_input(config, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"symsperner"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace symsperner

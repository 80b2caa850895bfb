#include "symsperner/suites.hpp"

#include <algorithm>
#include <map>

namespace symsperner {

Rational random_rational(std::mt19937_64& rng, int max_abs_numerator, int max_denominator) {
    std::uniform_int_distribution<int> num(-max_abs_numerator, max_abs_numerator);
    std::uniform_int_distribution<int> den(1, max_denominator);
    const int p = num(rng);
    const int q = den(rng);
    return Rational(p, q);
}

std::vector<RationalVector> random_sum_one_columns(int n, std::mt19937_64& rng) {
    if (n < 1) throw ArgumentError("random_sum_one_columns needs n >= 1");
    std::vector<RationalVector> columns;
    for (int c = 0; c < n; ++c) {
        RationalVector col(n);
        Rational rest(1);
        for (int i = 0; i + 1 < n; ++i) {
            col(i) = random_rational(rng);
            rest -= col(i);
        }
        col(n - 1) = rest;
        columns.push_back(std::move(col));
    }
    return columns;
}

PointLabeling random_affine_labeling(const Triangulation& t, std::mt19937_64& rng) {
    const int n = t.n();
    PointLabeling out;
    out.reserve(t.vertex_count());
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        const std::vector<int> support = support_face(t.point(v)).to_vector();
        RationalVector x = RationalVector::Zero(n);
        Rational rest(1);
        for (std::size_t k = 0; k + 1 < support.size(); ++k) {
            x(support[k] - 1) = random_rational(rng);
            rest -= x(support[k] - 1);
        }
        x(support.back() - 1) = rest;
        out.emplace_back(std::move(x));
    }
    return out;
}

PointLabeling identity_labeling(const Triangulation& t) {
    return PointLabeling(t.points().begin(), t.points().end());
}

namespace {

void corrupt_labeling(const Triangulation& t, PointLabeling& lambda) {
    const int n = t.n();
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        const IndexSet outside = IndexSet::full(n) - support_face(t.point(v));
        if (outside.empty()) continue;
        lambda[v] = Point::unit(outside.min(), n);
        return;
    }
    throw ArgumentError("no boundary vertex to corrupt");
}

Json lambda_to_json(const PointLabeling& lambda) {
    Json out = Json::array();
    for (const AffinePoint& p : lambda) out.push_back(to_json(p.coords()));
    return out;
}

Json counts_to_json(const std::map<std::string, std::size_t>& counts) {
    Json out = Json::object();
    for (const auto& [key, count] : counts) out[key] = count;
    return out;
}

const char* shape_name(LabelShape shape) { return shape == LabelShape::restricted ? "restricted" : "general"; }

}  // namespace

SuiteReport run_lemma_suite(const LemmaSuiteConfig& c) {
    if (c.n < 1) throw ArgumentError("n must be at least 1");
    if (c.depth < 0) throw ArgumentError("depth must be nonnegative");
    if (c.trials < 0 || c.identity_trials < 0) throw ArgumentError("trial counts must be nonnegative");
    const Triangulation t = sd_pow(c.n, c.depth, c.simplex_budget);
    std::mt19937_64 rng(c.seed);

    Json failures = Json::array();
    const Rational identity_value = det_sum(t, identity_labeling(t), c.jobs);
    if (!det_sum_is_unit(identity_value)) {
        failures.push_back(Json{{"check", "det_sum"},
                                {"trial", "identity"},
                                {"det_sum", to_json(identity_value)},
                                {"lambda", lambda_to_json(identity_labeling(t))}});
    }

    std::map<std::string, std::size_t> values;
    std::size_t det_failures = 0;
    for (int trial = 0; trial < c.trials; ++trial) {
        PointLabeling lambda = random_affine_labeling(t, rng);
        if (c.corrupt && trial == 0) corrupt_labeling(t, lambda);
        const Rational value = det_sum(t, lambda, c.jobs);
        ++values[to_string(value)];
        if (!det_sum_is_unit(value)) {
            ++det_failures;
            failures.push_back(Json{{"check", "det_sum"},
                                    {"trial", trial},
                                    {"det_sum", to_json(value)},
                                    {"lambda", lambda_to_json(lambda)}});
        }
    }

    std::size_t identity_failures = 0;
    for (int trial = 0; trial < c.identity_trials; ++trial) {
        const auto columns = random_sum_one_columns(c.n, rng);
        if (!boundary_identity_check(columns)) {
            ++identity_failures;
            Json cols = Json::array();
            for (const RationalVector& col : columns) cols.push_back(to_json(col));
            failures.push_back(Json{{"check", "projection_identity"}, {"trial", trial}, {"columns", std::move(cols)}});
        }
    }

    SuiteReport out;
    out.failures = failures.size();
    out.report = Json{
        {"suite", "lemma"},
        {"config",
         {{"n", c.n},
          {"depth", c.depth},
          {"trials", c.trials},
          {"identity_trials", c.identity_trials},
          {"seed", c.seed},
          {"jobs", c.jobs}}},
        {"triangulation", {{"vertices", t.vertex_count()}, {"simplices", t.simplex_count()}}},
        {"det_sum",
         {{"identity_labeling", to_json(identity_value)},
          {"trials", c.trials},
          {"failures", det_failures},
          {"values", counts_to_json(values)}}},
        {"projection_identity", {{"trials", c.identity_trials}, {"failures", identity_failures}}},
        {"failures", std::move(failures)},
        {"passed", out.failures == 0}};
    return out;
}

SuiteReport run_theorem_suite(const TheoremSuiteConfig& c) {
    if (c.n < 2) throw ArgumentError("n must be at least 2");
    if (c.max_depth < 1) throw ArgumentError("max_depth must be at least 1");
    if (c.trials < 0) throw ArgumentError("trial count must be nonnegative");
    const LabelShape shape = c.shape.value_or(c.n == 4 ? LabelShape::restricted : LabelShape::general);
    const bool guaranteed = existence_guaranteed(c.n);
    std::mt19937_64 rng(c.seed);

    Json depths = Json::array();
    Json failures = Json::array();
    for (int depth = 1; depth <= c.max_depth; ++depth) {
        const Triangulation t = sd_pow(c.n, depth, c.simplex_budget);
        std::size_t depth_failures = 0;
        std::size_t sdr_verified = 0;
        std::size_t det_min = SIZE_MAX, det_max = 0, det_total = 0;
        std::size_t match_min = SIZE_MAX, match_max = 0, match_total = 0;
        std::map<std::string, std::size_t> scans;

        for (int trial = 0; trial < c.trials; ++trial) {
            const VertexLabeling labels = random_nice_labeling(t, shape, rng);
            const std::size_t matching = find_fully_labeled(t, labels, SearchMode::matching, c.jobs).size();
            match_min = std::min(match_min, matching);
            match_max = std::max(match_max, matching);
            match_total += matching;
            if (!guaranteed) {
                ++scans[to_string(nonzero_scan(t, labels, c.jobs))];
                continue;
            }
            try {
                const auto witnesses = theorem_witnesses(t, labels, c.jobs);
                for (const FullyLabeledWitness& w : witnesses) {
                    const auto ids = t.simplex(w.simplex);
                    bool ok = true;
                    for (std::size_t k = 0; k < ids.size(); ++k) {
                        ok = ok && labels[ids[k]].contains(w.sdr(static_cast<int>(k) + 1));
                    }
                    if (ok) {
                        ++sdr_verified;
                    } else {
                        ++depth_failures;
                        failures.push_back(Json{{"check", "sdr"},
                                                {"depth", depth},
                                                {"trial", trial},
                                                {"simplex", w.simplex},
                                                {"instance", instance_to_json(t, labels)}});
                    }
                }
                det_min = std::min(det_min, witnesses.size());
                det_max = std::max(det_max, witnesses.size());
                det_total += witnesses.size();
            } catch (const TheoremViolation& e) {
                ++depth_failures;
                failures.push_back(Json{{"check", "witness"},
                                        {"depth", depth},
                                        {"trial", trial},
                                        {"reason", e.what()},
                                        {"instance", Json::parse(e.instance_json())}});
            }
        }

        Json entry{{"depth", depth},
                   {"simplices", t.simplex_count()},
                   {"trials", c.trials},
                   {"matching_witnesses",
                    {{"min", c.trials > 0 ? match_min : 0}, {"max", match_max}, {"total", match_total}}}};
        if (guaranteed) {
            entry["failures"] = depth_failures;
            entry["det_witnesses"] = {{"min", det_total > 0 ? det_min : 0}, {"max", det_max}, {"total", det_total}};
            entry["sdr_verified"] = sdr_verified;
        } else {
            entry["nonzero_scan"] = counts_to_json(scans);
        }
        depths.push_back(std::move(entry));
    }

    SuiteReport out;
    out.failures = failures.size();
    out.report = Json{{"suite", "theorem"},
                      {"config",
                       {{"n", c.n},
                        {"max_depth", c.max_depth},
                        {"trials", c.trials},
                        {"seed", c.seed},
                        {"jobs", c.jobs},
                        {"shape", shape_name(shape)},
                        {"mode", guaranteed ? "det" : "scan"}}},
                      {"depths", std::move(depths)},
                      {"failures", std::move(failures)}};
    if (guaranteed) {
        out.report["passed"] = out.failures == 0;
    } else {
        out.report["passed"] = nullptr;
        out.report["note"] = "n is neither prime nor 4: scan only, no pass/fail claim";
    }
    return out;
}

}  // namespace symsperner

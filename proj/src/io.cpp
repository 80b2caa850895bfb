#include "symsperner/io.hpp"

#include "symsperner/solver.hpp"

#include <fstream>
#include <sstream>

namespace symsperner {

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const RationalVector& coords) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < coords.size(); ++i) out.push_back(to_string(coords(i)));
    return out;
}

Json to_json(const IndexSet& set) { return Json(set.to_vector()); }

Json instance_to_json(const Triangulation& t, const VertexLabeling& labels) {
    Json vertices = Json::array();
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        Json entry{{"id", v}, {"coords", to_json(t.point(v).coords())}};
        if (v < labels.size()) entry["label"] = to_json(labels[v].set());
        vertices.push_back(std::move(entry));
    }
    return Json{{"n", t.n()}, {"depth", t.depth()}, {"vertices", std::move(vertices)}};
}

std::pair<Triangulation, VertexLabeling> replay_instance(const Json& dump) {
    try {
        const int n = dump.at("n").get<int>();
        const int depth = dump.at("depth").get<int>();
        Triangulation t = sd_pow(n, depth);
        const Json& vertices = dump.at("vertices");
        if (vertices.size() != t.vertex_count()) throw ArgumentError("instance vertex count does not match sd^depth");
        VertexLabeling labels;
        for (const Json& entry : vertices) {
            const auto id = entry.at("id").get<VertexId>();
            const Json& coords = entry.at("coords");
            RationalVector x(n);
            for (int i = 0; i < n; ++i) x(i) = parse_rational(coords.at(i).get<std::string>());
            if (id >= t.vertex_count() || !RationalVectorEqual{}(t.point(id).coords(), x)) {
                throw ArgumentError("instance vertex " + std::to_string(id) + " does not match sd^depth");
            }
            IndexSet label;
            for (int l : entry.at("label")) label.insert(l);
            labels.push_back(LabelSet(label));
        }
        return {std::move(t), std::move(labels)};
    } catch (const Json::exception& e) {
        throw ArgumentError(std::string("malformed instance dump: ") + e.what());
    }
}

Json labeling_to_json(const VertexLabeling& labels) {
    Json out = Json::object();
    for (std::size_t v = 0; v < labels.size(); ++v) out[std::to_string(v)] = to_json(labels[v].set());
    return out;
}

Json triangulation_stats(const Triangulation& t) {
    Json out{{"n", t.n()},
             {"depth", t.depth()},
             {"vertices", t.vertex_count()},
             {"simplices", t.simplex_count()},
             {"mesh", to_json(mesh_size(t))},
             {"nice", is_nice(t).ok()},
             {"supports_comparable", supports_comparable(t).ok()}};
    if (t.depth() >= 1) {
        out["owner_check"] = check_owner(t, owner_labeling(t)).ok();
    } else {
        out["owner_check"] = nullptr;
    }
    return out;
}

namespace {

Rational field_rational(const Json& node, const std::string& path) {
    if (!node.is_string()) throw ArgumentError(path + ": expected a rational string \"p/q\"");
    try {
        return parse_rational(node.get<std::string>());
    } catch (const ArgumentError& e) {
        throw ArgumentError(path + ": " + e.what());
    }
}

}  // namespace

Problem parse_problem(const Json& doc) {
    if (!doc.is_object()) throw ArgumentError("problem: expected a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ArgumentError("n: expected an integer");
    Problem problem;
    problem.n = doc["n"].get<int>();
    if (problem.n < 1 || problem.n > kMaxSize) throw ArgumentError("n: must lie in [1, 32]");
    if (!doc.contains("players") || !doc["players"].is_array()) throw ArgumentError("players: expected an array");
    const Json& players = doc["players"];
    for (std::size_t i = 0; i < players.size(); ++i) {
        const std::string path = "players[" + std::to_string(i) + "]";
        const Json& p = players[i];
        if (!p.is_object()) throw ArgumentError(path + ": expected an object");
        if (!p.contains("type") || !p["type"].is_string()) throw ArgumentError(path + ".type: expected a string");
        const std::string type = p["type"].get<std::string>();
        if (!p.contains("density") || !p["density"].is_array()) throw ArgumentError(path + ".density: expected an array");
        std::vector<Density::Segment> segments;
        for (std::size_t k = 0; k < p["density"].size(); ++k) {
            const std::string seg_path = path + ".density[" + std::to_string(k) + "]";
            const Json& seg = p["density"][k];
            if (!seg.is_object()) throw ArgumentError(seg_path + ": expected an object");
            segments.push_back({field_rational(seg.value("start", Json()), seg_path + ".start"),
                                field_rational(seg.value("end", Json()), seg_path + ".end"),
                                field_rational(seg.value("value", Json()), seg_path + ".value")});
        }
        std::optional<Density> density;
        try {
            density.emplace(std::move(segments));
        } catch (const ArgumentError& e) {
            throw ArgumentError(path + ".density: " + e.what());
        }
        if (type == "attraction") {
            problem.players.push_back(PreferenceOracle::attraction(std::move(*density), problem.n));
        } else if (type == "rejection") {
            problem.players.push_back(PreferenceOracle::rejection(std::move(*density), problem.n));
        } else {
            throw ArgumentError(path + ".type: expected \"attraction\" or \"rejection\", got \"" + type + "\"");
        }
    }
    problem.validate();
    return problem;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open problem file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ArgumentError(path + ": " + e.what());
    }
    return parse_problem(doc);
}

Json solve_result_to_json(const SolveResult& r) {
    Json cuts = Json::array();
    for (const Rational& c : r.division.cuts()) cuts.push_back(to_json(c));
    Json pieces = Json::array();
    for (const Interval& p : r.division.pieces()) pieces.push_back(Json::array({to_json(p.lo), to_json(p.hi)}));
    auto assignment_json = [](const Assignment& a) {
        Json out = Json::object();
        for (std::size_t i = 0; i < a.piece.size(); ++i) {
            out[std::to_string(i + 1)] = a.piece[i] ? Json(*a.piece[i] + 1) : Json("empty");
        }
        return out;
    };
    Json trace = Json::array();
    for (const DepthRecord& d : r.trace) {
        trace.push_back(Json{{"depth", d.depth},
                             {"mesh", to_json(d.mesh)},
                             {"simplices", d.simplices},
                             {"witnesses", d.witnesses},
                             {"gap", d.gap ? to_json(*d.gap) : Json("n/a")}});
    }
    Json conditions{{"cond_i", r.check.cond_i}, {"cond_ii", r.check.cond_ii}, {"cond_iii", r.check.cond_iii}};
    return Json{{"status", to_string(r.status)},
                {"x_star", to_json(r.x_star.coords())},
                {"cuts", std::move(cuts)},
                {"pieces", std::move(pieces)},
                {"assignment", assignment_json(r.assignment)},
                {"envy_gap", r.envy_gap ? to_json(*r.envy_gap) : Json("n/a")},
                {"trace", std::move(trace)},
                {"mode", r.mode == SearchMode::det ? "det" : "matching"},
                {"picked", r.picked},
                {"strict_assignment", assignment_json(r.strict_assignment)},
                {"conditions", std::move(conditions)},
                {"witness", Json{{"simplex", r.witness.simplex},
                                 {"sdr", r.witness.sdr.image()},
                                 {"det", to_json(r.witness.det_value)}}},
                {"warnings", r.warnings}};
}

}  // namespace symsperner

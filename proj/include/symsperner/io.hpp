#pragma once

// JSON formats: rationals as "p/q" strings, problem files, solve reports,
// triangulation statistics and replayable instance dumps.

#include "symsperner/labeling.hpp"
#include "symsperner/triangulation.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace symsperner {

struct Problem;
struct SolveResult;

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const RationalVector& coords);
Json to_json(const IndexSet& set);

/// Vertex coordinates and label sets, keyed by vertex id, plus n and depth.
Json instance_to_json(const Triangulation& t, const VertexLabeling& labels);

/// Rebuilds sd^depth from a dump and checks every vertex coordinate by id.
std::pair<Triangulation, VertexLabeling> replay_instance(const Json& dump);

/// {"<vertex id>": [sorted labels], ...}
Json labeling_to_json(const VertexLabeling& labels);

/// Vertex/simplex counts, mesh size and the niceness, comparability and owner verdicts.
Json triangulation_stats(const Triangulation& t);

/// Parses {"n": int, "players": [{"type": "attraction"|"rejection", "density": [...]}]}.
/// Throws ArgumentError naming the offending field.
Problem parse_problem(const Json& doc);
/// Reads and parses a problem file; syntax errors carry line and column.
Problem load_problem(const std::string& path);

Json solve_result_to_json(const SolveResult& result);

}  // namespace symsperner

#pragma once

// From preference oracles to vertex label sets, plus the symmetry and shape
// validators and a random nice-labeling generator.

#include "symsperner/preferences.hpp"
#include "symsperner/triangulation.hpp"

#include <random>
#include <span>
#include <vector>

namespace symsperner {

/// Lambda: one label set per vertex id.
using VertexLabeling = std::vector<LabelSet>;

/// L(x): the index of every accepted piece, plus J_x when the empty piece is
/// accepted. Throws AssumptionViolation when the result is empty.
IndexSet L_set(const PreferenceOracle& p, const Point& x);

/// J if L = J, otherwise {min(L \ J)}.
LabelSet lambda_from_L(const IndexSet& L, const IndexSet& J);

/// Lambda_p(x) = lambda_from_L(L_set(p, x), J_x).
LabelSet lambda_set(const PreferenceOracle& p, const Point& x);

/// Lambda(v) = lambda_set(oracles[o(v) - 1], x_v) for every vertex.
VertexLabeling build_labeling(const Triangulation& t, const OwnerLabeling& o,
                              std::span<const PreferenceOracle> oracles, unsigned jobs = 1);

/// Lambda(r^j(v)) = rho^j(Lambda(v)) for every vertex v of the 1^-facet and every j.
CheckReport check_nice_labeling(const Triangulation& t, const VertexLabeling& labels);

/// Every Lambda(v) is J_v or a singleton outside J_v; with require_comparable,
/// supporting faces of adjacent vertices must also be comparable.
CheckReport check_restricted_form(const Triangulation& t, const VertexLabeling& labels, bool require_comparable = false);

/// Label sets are proper subsets of [n] everywhere.
CheckReport check_proper_labels(const Triangulation& t, const VertexLabeling& labels);

enum class LabelShape {
    general,  // any nonempty proper subset
    restricted,    // J_v or a singleton outside J_v
};

/// Uniformly random nice labeling. Boundary vertices are grouped into the
/// orbits generated by the r^j on the 1^-facet; each orbit root gets a label
/// drawn uniformly among those consistent with every orbit relation, and the
/// rest of the orbit is forced. Interior vertices are drawn independently.
VertexLabeling random_nice_labeling(const Triangulation& t, LabelShape shape, std::mt19937_64& rng);

}  // namespace symsperner

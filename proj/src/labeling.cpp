#include "symsperner/labeling.hpp"

#include "detail.hpp"

#include <optional>
#include <queue>

namespace symsperner {

IndexSet L_set(const PreferenceOracle& p, const Point& x) {
    const Division division(x);
    const Acceptance accepted = p.evaluate(division);
    IndexSet out;
    for (std::size_t k : accepted.pieces) out.insert(division.piece_index()[k]);
    if (accepted.empty_piece) out = out | facet_set(x);
    if (out.empty()) {
        std::string coords;
        for (Eigen::Index i = 0; i < x.coords().size(); ++i) {
            coords += (i ? "," : "") + to_string(x.coords()(i));
        }
        throw AssumptionViolation("oracle '" + p.name() + "' yields an empty L at x = (" + coords +
                                  "); the full division assumption fails");
    }
    return out;
}

LabelSet lambda_from_L(const IndexSet& L, const IndexSet& J) {
    if (L == J) return LabelSet(J);
    const IndexSet rest = L - J;
    return LabelSet(IndexSet{rest.min()});
}

LabelSet lambda_set(const PreferenceOracle& p, const Point& x) { return lambda_from_L(L_set(p, x), facet_set(x)); }

VertexLabeling build_labeling(const Triangulation& t, const OwnerLabeling& o, std::span<const PreferenceOracle> oracles,
                              unsigned jobs) {
    if (static_cast<int>(oracles.size()) != t.n()) throw ArgumentError("build_labeling needs exactly n oracles");
    if (o.size() != t.vertex_count()) throw ArgumentError("owner labeling size differs from the vertex count");
    std::vector<std::optional<LabelSet>> slots(t.vertex_count());
    detail::parallel_for(t.vertex_count(), jobs, [&](std::size_t v) {
        const int owner = o(static_cast<VertexId>(v));
        if (owner < 1 || owner > t.n()) throw ArgumentError("owner outside [n] at vertex " + std::to_string(v));
        try {
            slots[v] = lambda_set(oracles[owner - 1], t.point(static_cast<VertexId>(v)));
        } catch (const AssumptionViolation& e) {
            throw AssumptionViolation("vertex " + std::to_string(v) + " (player " + std::to_string(owner) +
                                      "): " + e.what());
        }
    });
    VertexLabeling out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(*s);
    return out;
}

CheckReport check_nice_labeling(const Triangulation& t, const VertexLabeling& labels) {
    if (labels.size() != t.vertex_count()) throw ArgumentError("labeling size differs from the vertex count");
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        if (t.point(v).at(1) != 0) continue;
        for (int j = 2; j <= t.n(); ++j) {
            auto w = t.find_vertex(r_apply(j, t.point(v).coords()));
            if (!w) return {Violation{{v}, j, "r^j(v) is not a vertex"}};
            if (labels[*w] != rho_image(j, labels[v], t.n())) {
                return {Violation{{v, *w}, j,
                                  "Lambda(r^j(v)) = " + labels[*w].to_string() + " but rho^j(Lambda(v)) = " +
                                      rho_image(j, labels[v], t.n()).to_string()}};
            }
        }
    }
    return {};
}

CheckReport check_restricted_form(const Triangulation& t, const VertexLabeling& labels, bool require_comparable) {
    if (labels.size() != t.vertex_count()) throw ArgumentError("labeling size differs from the vertex count");
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        const IndexSet J = facet_set(t.point(v));
        const IndexSet& label = labels[v].set();
        if (label == J) continue;
        if (label.size() == 1 && !J.contains(label.min())) continue;
        return {Violation{{v}, 0, "label " + label.to_string() + " is neither J_v = " + J.to_string() +
                                      " nor a singleton outside J_v"}};
    }
    if (require_comparable) return supports_comparable(t);
    return {};
}

CheckReport check_proper_labels(const Triangulation& t, const VertexLabeling& labels) {
    if (labels.size() != t.vertex_count()) throw ArgumentError("labeling size differs from the vertex count");
    const IndexSet all = IndexSet::full(t.n());
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        if (!labels[v].set().subset_of(all)) return {Violation{{v}, 0, "label outside [n]"}};
        if (labels[v].set() == all) return {Violation{{v}, 0, "label equals [n]"}};
    }
    return {};
}

namespace {

using Map = std::vector<int>;  // 1-based: map[i-1] = image of i

IndexSet apply_map(const Map& g, const IndexSet& s) {
    IndexSet out;
    for (int i : s.to_vector()) out.insert(g[i - 1]);
    return out;
}

Map compose(const Map& outer, const Map& inner) {
    Map out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i] - 1];
    return out;
}

Map inverse(const Map& g) {
    Map out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[g[i] - 1] = static_cast<int>(i) + 1;
    return out;
}

bool shape_ok(LabelShape shape, const IndexSet& label, const IndexSet& J) {
    if (shape == LabelShape::general) return true;
    return label == J || (label.size() == 1 && !J.contains(label.min()));
}

}  // namespace

VertexLabeling random_nice_labeling(const Triangulation& t, LabelShape shape, std::mt19937_64& rng) {
    const int n = t.n();
    if (n < 2) throw ArgumentError("nice labelings with proper label sets need n >= 2");
    const std::size_t count = t.vertex_count();

    struct Edge {
        VertexId from;
        VertexId to;
        int j;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> incident(count);
    std::vector<Map> rho(n + 1);
    for (int j = 1; j <= n; ++j) rho[j] = rho_permutation(j, n).image();

    for (VertexId v = 0; v < count; ++v) {
        if (t.point(v).at(1) != 0) continue;
        for (int j = 2; j <= n; ++j) {
            auto w = t.find_vertex(r_apply(j, t.point(v).coords()));
            if (!w) throw InvariantViolation("triangulation is not nice: r^j(v) is not a vertex");
            incident[v].push_back(edges.size());
            if (*w != v) incident[*w].push_back(edges.size());
            edges.push_back({v, *w, j});
        }
    }

    std::vector<std::optional<LabelSet>> labels(count);
    std::vector<Map> transport(count);
    std::vector<bool> visited(count, false);
    const std::uint32_t proper_masks = (std::uint32_t{1} << n) - 2;

    for (VertexId root = 0; root < count; ++root) {
        if (visited[root]) continue;
        const IndexSet root_J = facet_set(t.point(root));
        if (root_J.empty()) {
            visited[root] = true;
            if (shape == LabelShape::general) {
                std::uniform_int_distribution<std::uint32_t> pick(1, proper_masks);
                labels[root] = LabelSet(IndexSet::from_mask(pick(rng)));
            } else {
                std::uniform_int_distribution<int> pick(1, n);
                labels[root] = LabelSet{pick(rng)};
            }
            continue;
        }

        // Orbit of the root: Lambda(w) = transport[w](Lambda(root)).
        std::vector<VertexId> orbit{root};
        std::vector<std::size_t> orbit_edges;
        visited[root] = true;
        transport[root] = rho[1];
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            const VertexId u = orbit[head];
            for (std::size_t e : incident[u]) {
                const Edge& edge = edges[e];
                if (edge.from == u) orbit_edges.push_back(e);
                const VertexId other = edge.from == u ? edge.to : edge.from;
                if (visited[other]) continue;
                visited[other] = true;
                transport[other] = edge.from == u ? compose(rho[edge.j], transport[u])
                                                  : compose(inverse(rho[edge.j]), transport[u]);
                orbit.push_back(other);
            }
        }

        std::vector<IndexSet> candidates;
        for (std::uint32_t mask = 1; mask <= proper_masks; ++mask) {
            const IndexSet s = IndexSet::from_mask(mask);
            bool ok = true;
            for (VertexId w : orbit) {
                ok = ok && shape_ok(shape, apply_map(transport[w], s), facet_set(t.point(w)));
            }
            for (std::size_t e : orbit_edges) {
                const Edge& edge = edges[e];
                ok = ok && apply_map(transport[edge.to], s) == apply_map(rho[edge.j], apply_map(transport[edge.from], s));
            }
            if (ok) candidates.push_back(s);
        }
        if (candidates.empty()) throw InvariantViolation("no label is consistent with the symmetry orbit of a vertex");
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const IndexSet chosen = candidates[pick(rng)];
        for (VertexId w : orbit) labels[w] = LabelSet(apply_map(transport[w], chosen));
    }

    VertexLabeling out;
    out.reserve(count);
    for (auto& l : labels) out.push_back(*l);
    return out;
}

}  // namespace symsperner

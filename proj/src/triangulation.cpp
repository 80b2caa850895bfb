#include "symsperner/triangulation.hpp"

#include "detail.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace symsperner {

namespace {

int permutation_parity_sign(std::span<const VertexId> order) {
    int inversions = 0;
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (order[a] > order[b]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

int positions_sign(std::span<const int> order) {
    int inversions = 0;
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (order[a] > order[b]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Rational simplex_det(const Triangulation& t, std::span<const VertexId> ids) {
    const int n = t.n();
    RationalMatrix m(n, n);
    for (int c = 0; c < n; ++c) m.col(c) = t.point(ids[c]).coords();
    return determinant(m);
}

std::vector<IndexSet> zero_sets(const Triangulation& t) {
    std::vector<IndexSet> out;
    out.reserve(t.vertex_count());
    for (const Point& p : t.points()) out.push_back(facet_set(p));
    return out;
}

}  // namespace

// Triangulation ---------------------------------------------------------------

VertexId Triangulation::add_vertex(Point p) {
    const auto id = static_cast<VertexId>(points_.size());
    auto [it, inserted] = index_.emplace(p.coords(), id);
    if (!inserted) throw InvariantViolation("duplicate vertex coordinates");
    points_.push_back(std::move(p));
    return id;
}

std::optional<VertexId> Triangulation::find_vertex(const RationalVector& coords) const {
    auto it = index_.find(coords);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Triangulation::owner_dim(VertexId v) const {
    if (owner_dim_.empty()) return std::nullopt;
    return owner_dim_.at(v);
}

Triangulation Triangulation::from_simplices(int n, std::vector<Point> vertices,
                                            std::vector<std::vector<VertexId>> simplices) {
    if (n < 1 || n > kMaxSize) throw ArgumentError("triangulation size n must lie in [1, 32]");
    Triangulation t;
    t.n_ = n;
    for (Point& p : vertices) {
        if (p.dim() != n) throw ArgumentError("vertex dimension differs from n");
        t.add_vertex(std::move(p));
    }
    for (auto& s : simplices) {
        if (static_cast<int>(s.size()) != n) throw ArgumentError("maximal simplices need exactly n vertices");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ArgumentError("repeated vertex in simplex");
        for (VertexId v : s) {
            if (v >= t.points_.size()) throw ArgumentError("simplex references an unknown vertex");
        }
        const Rational det = simplex_det(t, s);
        if (det == 0) throw InvariantViolation("degenerate maximal simplex");
        t.simplices_.insert(t.simplices_.end(), s.begin(), s.end());
        t.orientation_.push_back(sign(det));
    }
    return t;
}

void Triangulation::validate_orientations() const {
    for (SimplexId k = 0; k < simplex_count(); ++k) {
        const int s = sign(simplex_det(*this, simplex(k)));
        if (s == 0) throw InvariantViolation("degenerate maximal simplex " + std::to_string(k));
        if (s != orientation_[k]) throw InvariantViolation("stale orientation sign on simplex " + std::to_string(k));
    }
}

Triangulation standard_triangulation(int n) {
    if (n < 1 || n > kMaxSize) throw ArgumentError("standard_triangulation needs n in [1, 32]");
    Triangulation t;
    t.n_ = n;
    for (int i = 1; i <= n; ++i) t.add_vertex(Point::unit(i, n));
    t.simplices_.resize(n);
    std::iota(t.simplices_.begin(), t.simplices_.end(), VertexId{0});
    t.orientation_.push_back(1);
    return t;
}

Triangulation barycentric_subdivide(const Triangulation& t) {
    const int n = t.n();
    if (n > 12) throw ArgumentError("barycentric subdivision is limited to n <= 12");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;

    Triangulation out;
    out.n_ = n;
    out.depth_ = t.depth() + 1;

    std::unordered_map<std::vector<VertexId>, VertexId, detail::IdVectorHash> face_vertex;
    std::vector<VertexId> ids_by_mask(full + 1);
    std::vector<VertexId> face;
    std::vector<int> order(n);
    std::vector<VertexId> chain(n);

    for (SimplexId k = 0; k < t.simplex_count(); ++k) {
        const auto s = t.simplex(k);
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            face.clear();
            for (int i = 0; i < n; ++i) {
                if (mask & (std::uint32_t{1} << i)) face.push_back(s[i]);
            }
            auto it = face_vertex.find(face);
            if (it == face_vertex.end()) {
                RationalVector sum = RationalVector::Zero(n);
                for (VertexId v : face) sum += t.point(v).coords();
                sum /= Rational(static_cast<long>(face.size()));
                const VertexId id = out.add_vertex(Point(std::move(sum)));
                out.owner_dim_.push_back(static_cast<int>(face.size()) - 1);
                it = face_vertex.emplace(face, id).first;
            }
            ids_by_mask[mask] = it->second;
        }

        // One new simplex per ordering of the old vertices: the flag
        // {s[p0]} < {s[p0], s[p1]} < ... . Its chain-order determinant is
        // sign(p) * det(old) times a positive triangular factor.
        std::iota(order.begin(), order.end(), 0);
        do {
            std::uint32_t mask = 0;
            for (int i = 0; i < n; ++i) {
                mask |= std::uint32_t{1} << order[i];
                chain[i] = ids_by_mask[mask];
            }
            const int chain_sign = positions_sign(order) * t.orientation(k);
            const int sort_sign = permutation_parity_sign(chain);
            std::sort(chain.begin(), chain.end());
            out.simplices_.insert(out.simplices_.end(), chain.begin(), chain.end());
            out.orientation_.push_back(chain_sign * sort_sign);
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

std::uint64_t subdivision_simplex_count(int n, int depth) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t per_level = 1;
    for (int i = 2; i <= n; ++i) {
        if (per_level > kMax / static_cast<std::uint64_t>(i)) return kMax;
        per_level *= static_cast<std::uint64_t>(i);
    }
    std::uint64_t total = 1;
    for (int d = 0; d < depth; ++d) {
        if (per_level != 0 && total > kMax / per_level) return kMax;
        total *= per_level;
    }
    return total;
}

Triangulation sd_pow(int n, int depth, std::uint64_t simplex_budget) {
    if (n < 1) throw ArgumentError("sd_pow needs n >= 1");
    if (depth < 0) throw ArgumentError("sd_pow needs depth >= 0");
    const std::uint64_t count = subdivision_simplex_count(n, depth);
    if (count > simplex_budget) {
        throw BudgetError("sd^" + std::to_string(depth) + " of Delta^" + std::to_string(n - 1) + " needs " +
                          (count == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                               : std::to_string(count)) +
                          " simplices, above the budget of " + std::to_string(simplex_budget));
    }
    Triangulation t = standard_triangulation(n);
    for (int d = 0; d < depth; ++d) t = barycentric_subdivide(t);
    return t;
}

Rational mesh_size(const Triangulation& t) {
    Rational best(0);
    for (SimplexId k = 0; k < t.simplex_count(); ++k) {
        const auto s = t.simplex(k);
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                const RationalVector& pa = t.point(s[a]).coords();
                const RationalVector& pb = t.point(s[b]).coords();
                for (Eigen::Index i = 0; i < pa.size(); ++i) {
                    Rational d = abs(pa(i) - pb(i));
                    if (d > best) best = std::move(d);
                }
            }
        }
    }
    return best;
}

std::vector<std::vector<VertexId>> boundary_faces(const Triangulation& t) {
    const int n = t.n();
    const std::vector<IndexSet> zeros = zero_sets(t);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::unordered_set<std::vector<VertexId>, detail::IdVectorHash> seen;
    std::vector<VertexId> face;
    for (SimplexId k = 0; k < t.simplex_count(); ++k) {
        const auto s = t.simplex(k);
        bool touches = false;
        for (VertexId v : s) touches = touches || !zeros[v].empty();
        if (!touches) continue;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            face.clear();
            IndexSet common = IndexSet::full(n);
            for (int i = 0; i < n; ++i) {
                if (mask & (std::uint32_t{1} << i)) {
                    face.push_back(s[i]);
                    common = common & zeros[s[i]];
                }
            }
            if (!common.empty()) seen.insert(face);
        }
    }
    std::vector<std::vector<VertexId>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

CheckReport is_nice(const Triangulation& t) {
    const int n = t.n();
    const auto faces = boundary_faces(t);
    const std::unordered_set<std::vector<VertexId>, detail::IdVectorHash> lookup(faces.begin(), faces.end());
    std::vector<VertexId> image;
    for (const auto& face : faces) {
        const bool in_first_facet = std::all_of(face.begin(), face.end(), [&](VertexId v) {
            return t.point(v).at(1) == 0;
        });
        if (!in_first_facet) continue;
        for (int j = 2; j <= n; ++j) {
            image.clear();
            for (VertexId v : face) {
                auto w = t.find_vertex(r_apply(j, t.point(v).coords()));
                if (!w) return {Violation{face, j, "r^j maps a vertex of this simplex outside the vertex set"}};
                image.push_back(*w);
            }
            std::sort(image.begin(), image.end());
            if (!lookup.contains(image)) return {Violation{face, j, "r^j(simplex) is not a simplex of the triangulation"}};
        }
    }
    return {};
}

CheckReport supports_comparable(const Triangulation& t) {
    std::vector<IndexSet> supports;
    supports.reserve(t.vertex_count());
    for (const Point& p : t.points()) supports.push_back(support_face(p));
    for (SimplexId k = 0; k < t.simplex_count(); ++k) {
        const auto s = t.simplex(k);
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                const IndexSet& u = supports[s[a]];
                const IndexSet& v = supports[s[b]];
                if (!u.subset_of(v) && !v.subset_of(u)) {
                    return {Violation{{s[a], s[b]}, 0, "supporting faces " + u.to_string() + " and " + v.to_string() +
                                                           " are not comparable"}};
                }
            }
        }
    }
    return {};
}

OwnerLabeling owner_labeling(const Triangulation& t) {
    if (t.depth() < 1) throw UnsupportedError("owner labeling needs a triangulation of depth >= 1");
    std::vector<int> owners(t.vertex_count());
    for (VertexId v = 0; v < t.vertex_count(); ++v) owners[v] = *t.owner_dim(v) + 1;
    return OwnerLabeling(std::move(owners));
}

CheckReport check_owner(const Triangulation& t, const OwnerLabeling& o) {
    if (o.size() != t.vertex_count()) throw ArgumentError("owner labeling size differs from the vertex count");
    for (SimplexId k = 0; k < t.simplex_count(); ++k) {
        const auto s = t.simplex(k);
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                if (o(s[a]) == o(s[b])) return {Violation{{s[a], s[b]}, 0, "adjacent vertices share an owner"}};
            }
        }
    }
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        if (t.point(v).at(1) != 0) continue;
        for (int j = 2; j <= t.n(); ++j) {
            auto w = t.find_vertex(r_apply(j, t.point(v).coords()));
            if (!w) return {Violation{{v}, j, "r^j(v) is not a vertex"}};
            if (o(*w) != o(v)) return {Violation{{v, *w}, j, "owner not preserved by r^j"}};
        }
    }
    return {};
}

}  // namespace symsperner

#pragma once

// Face-to-face triangulations of the standard simplex Delta^{n-1}, built by
// iterated barycentric subdivision, together with the symmetry and owner
// checks the fully-labeled search relies on.

#include "symsperner/geometry.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace symsperner {

using VertexId = std::uint32_t;
using SimplexId = std::size_t;

inline constexpr std::uint64_t kDefaultSimplexBudget = 10'000'000;

/// Failing instance returned by the exhaustive checkers.
struct Violation {
    std::vector<VertexId> vertices;  // offending simplex, edge or vertex
    int j = 0;                       // symmetry index involved, 0 when not applicable
    std::string reason;
};

/// Outcome of an exhaustive check: ok, or the first violation in lexicographic order.
struct CheckReport {
    std::optional<Violation> violation;
    bool ok() const noexcept { return !violation.has_value(); }
    explicit operator bool() const noexcept { return ok(); }
};

class Triangulation {
public:
    /// Builds a triangulation from explicit data. Simplices are stored sorted by
    /// vertex id; each must span a nondegenerate n-vertex simplex.
    static Triangulation from_simplices(int n, std::vector<Point> vertices,
                                        std::vector<std::vector<VertexId>> simplices);

    int n() const noexcept { return n_; }
    int depth() const noexcept { return depth_; }
    std::size_t vertex_count() const noexcept { return points_.size(); }
    std::size_t simplex_count() const noexcept { return orientation_.size(); }

    const Point& point(VertexId v) const { return points_.at(v); }
    const std::vector<Point>& points() const noexcept { return points_; }
    std::optional<VertexId> find_vertex(const RationalVector& coords) const;

    /// Vertex ids of maximal simplex k, increasing.
    std::span<const VertexId> simplex(SimplexId k) const {
        return {simplices_.data() + k * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
    }
    /// Sign of det of the vertex coordinates of simplex k in stored order.
    int orientation(SimplexId k) const { return orientation_.at(k); }

    /// Dimension of the previous-level simplex whose barycenter v is; empty at depth 0.
    std::optional<int> owner_dim(VertexId v) const;

    /// Recomputes every orientation from exact determinants; throws
    /// InvariantViolation on a degenerate simplex or a stale sign.
    void validate_orientations() const;

private:
    Triangulation() = default;
    VertexId add_vertex(Point p);

    int n_ = 0;
    int depth_ = 0;
    std::vector<Point> points_;
    std::unordered_map<RationalVector, VertexId, RationalVectorHash, RationalVectorEqual> index_;
    std::vector<VertexId> simplices_;  // flat, stride n
    std::vector<int> orientation_;
    std::vector<int> owner_dim_;  // empty at depth 0

    friend Triangulation standard_triangulation(int n);
    friend Triangulation barycentric_subdivide(const Triangulation& t);
};

/// The single simplex with vertices e_1, ..., e_n.
Triangulation standard_triangulation(int n);

/// sd(T): vertices are the barycenters of all faces of T, maximal simplices the
/// chains of strictly nested faces.
Triangulation barycentric_subdivide(const Triangulation& t);

/// Number of maximal simplices of sd^depth(Delta^{n-1}), saturated at UINT64_MAX.
std::uint64_t subdivision_simplex_count(int n, int depth);

/// sd^depth of the standard simplex; throws BudgetError when (n!)^depth > budget.
Triangulation sd_pow(int n, int depth, std::uint64_t simplex_budget = kDefaultSimplexBudget);

/// Largest L-infinity distance between two vertices of a common simplex.
Rational mesh_size(const Triangulation& t);

/// All faces of t (sorted vertex tuples) lying in the boundary of Delta^{n-1}.
std::vector<std::vector<VertexId>> boundary_faces(const Triangulation& t);

/// r^j(sigma) is a simplex of t for every j and every simplex sigma of the 1^-facet.
CheckReport is_nice(const Triangulation& t);

/// Supporting faces of adjacent vertices are comparable by inclusion.
CheckReport supports_comparable(const Triangulation& t);

/// Player owning each vertex (values in [n]).
class OwnerLabeling {
public:
    explicit OwnerLabeling(std::vector<int> owners) : owners_(std::move(owners)) {}
    int operator()(VertexId v) const { return owners_.at(v); }
    std::size_t size() const noexcept { return owners_.size(); }
    const std::vector<int>& owners() const noexcept { return owners_; }

private:
    std::vector<int> owners_;
};

/// o(v) = owner_dim(v) + 1; requires depth >= 1.
OwnerLabeling owner_labeling(const Triangulation& t);

/// Adjacent vertices have distinct owners and o(r^j(v)) = o(v) on the 1^-facet.
CheckReport check_owner(const Triangulation& t, const OwnerLabeling& o);

}  // namespace symsperner

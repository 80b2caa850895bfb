#pragma once

#include "symsperner/triangulation.hpp"

#include <map>
#include <vector>

namespace symsperner {

/// Integer combination of oriented simplices. Terms are keyed by the sorted
/// vertex tuple; an oriented simplex [v_1, ..., v_k] is stored as
/// sign(sorting permutation) * [sorted tuple].
class Chain {
public:
    using Terms = std::map<std::vector<VertexId>, long long>;

    /// Adds coeff * [vertices] in the given orientation. Tuples with a repeated
    /// vertex are degenerate and contribute nothing.
    void add(std::vector<VertexId> vertices, long long coeff);
    /// Coefficient of the sorted tuple (0 when absent).
    long long coefficient(const std::vector<VertexId>& sorted) const;

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    Chain operator-() const;
    friend bool operator==(const Chain&, const Chain&) = default;

private:
    Terms terms_;
};

/// Sum of all maximal simplices, each oriented so its coordinate determinant is positive.
Chain positively_oriented_chain(const Triangulation& t);

/// d[v_1..v_k] = sum_i (-1)^(i-1) [v_1..^v_i..v_k], extended linearly.
Chain boundary_chain(const Chain& c);

/// Positively oriented chain of the triangulation induced on the j^-facet,
/// with orientation read from the coordinates other than j.
Chain facet_chain(const Triangulation& t, int j);

/// Terms of c whose simplices lie in the j^-facet.
Chain restrict_to_facet(const Triangulation& t, const Chain& c, int j);

}  // namespace symsperner

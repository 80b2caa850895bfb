#include "symsperner/chain.hpp"

#include <algorithm>

namespace symsperner {

void Chain::add(std::vector<VertexId> vertices, long long coeff) {
    if (coeff == 0) return;
    int inversions = 0;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (vertices[a] == vertices[b]) return;
            if (vertices[a] > vertices[b]) ++inversions;
        }
    }
    std::sort(vertices.begin(), vertices.end());
    const long long signed_coeff = inversions % 2 == 0 ? coeff : -coeff;
    auto [it, inserted] = terms_.try_emplace(std::move(vertices), signed_coeff);
    if (!inserted) {
        it->second += signed_coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

long long Chain::coefficient(const std::vector<VertexId>& sorted) const {
    auto it = terms_.find(sorted);
    return it == terms_.end() ? 0 : it->second;
}

Chain Chain::operator-() const {
    Chain out = *this;
    for (auto& [simplex, coeff] : out.terms_) coeff = -coeff;
    return out;
}

Chain positively_oriented_chain(const Triangulation& t) {
    Chain out;
    for (SimplexId k = 0; k < t.simplex_count(); ++k) {
        const int s = t.orientation(k);
        if (s == 0) throw InvariantViolation("degenerate maximal simplex " + std::to_string(k));
        const auto ids = t.simplex(k);
        out.add({ids.begin(), ids.end()}, s);
    }
    return out;
}

Chain boundary_chain(const Chain& c) {
    Chain out;
    for (const auto& [simplex, coeff] : c.terms()) {
        if (simplex.size() <= 1) continue;
        for (std::size_t i = 0; i < simplex.size(); ++i) {
            std::vector<VertexId> face;
            face.reserve(simplex.size() - 1);
            for (std::size_t k = 0; k < simplex.size(); ++k) {
                if (k != i) face.push_back(simplex[k]);
            }
            out.add(std::move(face), i % 2 == 0 ? coeff : -coeff);
        }
    }
    return out;
}

Chain facet_chain(const Triangulation& t, int j) {
    const int n = t.n();
    if (j < 1 || j > n || n < 2) throw ArgumentError("facet_chain: j outside [n] or n < 2");
    Chain out;
    for (const auto& face : boundary_faces(t)) {
        if (static_cast<int>(face.size()) != n - 1) continue;
        const bool on_facet = std::all_of(face.begin(), face.end(), [&](VertexId v) { return t.point(v).at(j) == 0; });
        if (!on_facet) continue;
        RationalMatrix m(n - 1, n - 1);
        for (int c = 0; c < n - 1; ++c) {
            const RationalVector& x = t.point(face[c]).coords();
            for (int r = 0, row = 0; r < n; ++r) {
                if (r != j - 1) m(row++, c) = x(r);
            }
        }
        const int s = sign(determinant(m));
        if (s == 0) throw InvariantViolation("degenerate facet simplex");
        out.add(face, s);
    }
    return out;
}

Chain restrict_to_facet(const Triangulation& t, const Chain& c, int j) {
    Chain out;
    for (const auto& [simplex, coeff] : c.terms()) {
        const bool on_facet = std::all_of(simplex.begin(), simplex.end(), [&](VertexId v) { return t.point(v).at(j) == 0; });
        if (on_facet) out.add(simplex, coeff);
    }
    return out;
}

}  // namespace symsperner

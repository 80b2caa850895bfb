#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the Rational type, so agreement is meaningful.

#include "symsperner/rational.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using symsperner::Rational;
using Matrix = std::vector<std::vector<Rational>>;  // m[row][col]

inline int inversion_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Leibniz expansion.
inline Rational leibniz_det(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total(0);
    do {
        Rational term(inversion_sign(p));
        for (int r = 0; r < n; ++r) term *= m[r][p[r]];
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Columns given as vectors.
inline Rational leibniz_det_columns(const std::vector<std::vector<Rational>>& cols) {
    const std::size_t n = cols.size();
    Matrix m(n, std::vector<Rational>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m[r][c] = cols[c][r];
    return leibniz_det(m);
}

// rho^j as the cycle 1 -> j -> j-1 -> ... -> 2 -> 1, built by walking the cycle.
inline std::vector<int> rho_by_cycle(int j, int n) {
    std::vector<int> image(n + 1);
    for (int i = 1; i <= n; ++i) image[i] = i;
    if (j >= 2) {
        image[1] = j;
        for (int k = j; k >= 2; --k) image[k] = k - 1;
    }
    return image;  // 1-based, image[0] unused
}

// Lexicographically smallest SDR over all permutations.
inline std::optional<std::vector<int>> brute_sdr(const std::vector<std::set<int>>& sets) {
    const int n = static_cast<int>(sets.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) ok = sets[k].count(p[k]) > 0;
        if (ok) return p;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

// Barycentric subdivision counted directly: each maximal simplex of sd^N is a
// chain of N flags, so the count is (n!)^N. Computed by multiplication of
// permutation counts enumerated explicitly.
inline std::uint64_t flag_count(int n, int depth) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t perms = 0;
    do ++perms;
    while (std::next_permutation(p.begin(), p.end()));
    std::uint64_t total = 1;
    for (int d = 0; d < depth; ++d) total *= perms;
    return total;
}

// Vertices of sd^2(Delta^{n-1}) enumerated as barycenters of chains of faces:
// for every chain S_1 < ... < S_k of nonempty subsets, the barycenter of the
// points b^{S_1}, ..., b^{S_k}. Returns the set of distinct coordinate vectors.
inline std::set<std::vector<Rational>> sd2_vertices(int n) {
    auto b = [n](unsigned mask) {
        std::vector<Rational> x(n, Rational(0));
        const int size = __builtin_popcount(mask);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) x[i] = Rational(1, size);
        return x;
    };
    std::set<std::vector<Rational>> out;
    const unsigned full = (1u << n) - 1;
    // depth-first over strictly increasing chains of masks
    std::vector<unsigned> chain;
    auto rec = [&](auto&& self, unsigned last) -> void {
        for (unsigned m = 1; m <= full; ++m) {
            if (!chain.empty() && ((m & last) != last || m == last)) continue;
            chain.push_back(m);
            std::vector<Rational> c(n, Rational(0));
            for (unsigned s : chain) {
                const auto p = b(s);
                for (int i = 0; i < n; ++i) c[i] += p[i];
            }
            for (auto& v : c) v /= Rational(static_cast<int>(chain.size()));
            out.insert(c);
            self(self, m);
            chain.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace oracle

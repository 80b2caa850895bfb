#include "symsperner/preferences.hpp"

#include "symsperner/triangulation.hpp"

#include <algorithm>

namespace symsperner {

Division::Division(const Point& x) {
    const int n = x.dim();
    cuts_.reserve(n + 1);
    cuts_.emplace_back(0);
    for (int j = 1; j <= n; ++j) cuts_.push_back(cuts_.back() + x.at(j));
    for (int j = 1; j <= n; ++j) {
        if (cuts_[j] > cuts_[j - 1]) {
            pieces_.push_back(Interval{cuts_[j - 1], cuts_[j]});
            piece_index_.push_back(j);
        }
    }
}

std::optional<std::size_t> Division::piece_at_index(int j) const {
    auto it = std::find(piece_index_.begin(), piece_index_.end(), j);
    if (it == piece_index_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - piece_index_.begin());
}

// Density -------------------------------------------------------------------

Density::Density(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw ArgumentError("density needs at least one segment");
    Rational expected_start(0);
    for (const Segment& s : segments_) {
        if (s.start != expected_start) throw ArgumentError("density segments must be contiguous, starting at 0");
        if (!(s.start < s.end)) throw ArgumentError("density segment with start >= end");
        if (s.value < 0) throw ArgumentError("density values must be nonnegative");
        expected_start = s.end;
    }
    if (expected_start != 1) throw ArgumentError("density segments must end at 1");
    if (total_mass() <= 0) throw ArgumentError("density must have positive total mass");
}

Density Density::uniform() { return Density({Segment{Rational(0), Rational(1), Rational(1)}}); }

Rational Density::total_mass() const {
    Rational mass(0);
    for (const Segment& s : segments_) mass += s.value * (s.end - s.start);
    return mass;
}

Rational Density::measure(const Interval& piece) const {
    Rational mass(0);
    for (const Segment& s : segments_) {
        const Rational& lo = std::max(piece.lo, s.start);
        const Rational& hi = std::min(piece.hi, s.end);
        if (lo < hi) mass += s.value * (hi - lo);
    }
    return mass;
}

Rational measure_of(const Density& d, const MaybeInterval& piece) {
    if (!piece) return Rational(0);
    if (piece->lo < 0 || piece->hi > 1 || piece->lo > piece->hi) {
        throw ArgumentError("measure_of: interval must satisfy 0 <= lo <= hi <= 1");
    }
    return d.measure(*piece);
}

Rational sym_diff_distance(const MaybeInterval& a, const MaybeInterval& b) {
    const Rational la = a ? a->length() : Rational(0);
    const Rational lb = b ? b->length() : Rational(0);
    Rational overlap(0);
    if (a && b) {
        const Rational lo = std::max(a->lo, b->lo);
        const Rational hi = std::min(a->hi, b->hi);
        if (lo < hi) overlap = hi - lo;
    }
    return la + lb - 2 * overlap;
}

// Built-in families -------------------------------------------------------------

namespace {
template <typename Better>
std::vector<std::size_t> extreme_pieces(const Density& d, const Division& division, Better better) {
    std::vector<std::size_t> out;
    Rational best;
    for (std::size_t k = 0; k < division.piece_count(); ++k) {
        Rational m = d.measure(division.pieces()[k]);
        if (out.empty() || better(m, best)) {
            out.assign(1, k);
            best = std::move(m);
        } else if (m == best) {
            out.push_back(k);
        }
    }
    return out;
}
}  // namespace

std::vector<std::size_t> attraction_accepts(const Density& d, const Division& division) {
    return extreme_pieces(d, division, [](const Rational& a, const Rational& b) { return a > b; });
}

Acceptance rejection_accepts(const Density& d, int n, const Division& division) {
    if (static_cast<int>(division.piece_count()) != n) return Acceptance{{}, true};
    return Acceptance{extreme_pieces(d, division, [](const Rational& a, const Rational& b) { return a < b; }), false};
}

PreferenceOracle PreferenceOracle::attraction(Density d, int n) {
    PreferenceOracle p;
    p.kind_ = Kind::attraction;
    p.n_ = n;
    p.name_ = "attraction";
    p.density_ = std::move(d);
    return p;
}

PreferenceOracle PreferenceOracle::rejection(Density d, int n) {
    PreferenceOracle p;
    p.kind_ = Kind::rejection;
    p.n_ = n;
    p.name_ = "rejection";
    p.density_ = std::move(d);
    return p;
}

PreferenceOracle PreferenceOracle::custom(Evaluator f, int n, std::string name) {
    if (!f) throw ArgumentError("custom oracle needs an evaluation function");
    PreferenceOracle p;
    p.kind_ = Kind::custom;
    p.n_ = n;
    p.name_ = std::move(name);
    p.custom_ = std::move(f);
    return p;
}

Acceptance PreferenceOracle::evaluate(const Division& division) const {
    switch (kind_) {
        case Kind::attraction:
            return Acceptance{attraction_accepts(*density_, division), false};
        case Kind::rejection:
            return rejection_accepts(*density_, n_, division);
        case Kind::custom: {
            Acceptance a = custom_(division);
            std::sort(a.pieces.begin(), a.pieces.end());
            a.pieces.erase(std::unique(a.pieces.begin(), a.pieces.end()), a.pieces.end());
            if (!a.pieces.empty() && a.pieces.back() >= division.piece_count()) {
                throw ArgumentError("oracle '" + name_ + "' accepted a piece that is not in the division");
            }
            return a;
        }
    }
    return {};
}

// Full division assumption ---------------------------------------------------------

std::vector<Point> default_full_division_samples(int n) {
    std::vector<Point> samples{barycenter(IndexSet::full(n), n)};
    const Triangulation t = barycentric_subdivide(standard_triangulation(n));
    for (const Point& p : t.points()) {
        if (facet_set(p).empty() && std::find(samples.begin(), samples.end(), p) == samples.end()) {
            samples.push_back(p);
        }
    }
    return samples;
}

FullDivisionReport validate_full_division(const PreferenceOracle& p, int n, std::span<const Point> samples) {
    for (const Point& x : samples) {
        if (x.dim() != n || !facet_set(x).empty()) {
            throw ArgumentError("full division samples must be interior points of Delta^{n-1}");
        }
        const Acceptance a = p.evaluate(Division(x));
        if (a.none()) return {false, x, "oracle '" + p.name() + "' accepted nothing"};
        if (a.empty_piece) return {false, x, "oracle '" + p.name() + "' accepted the empty piece on an n-piece division"};
    }
    return {};
}

}  // namespace symsperner

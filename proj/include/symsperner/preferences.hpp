#pragma once

// Cake divisions read off simplex points, piecewise-constant measures, and the
// player preference oracles (attraction, rejection, custom).

#include "symsperner/geometry.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symsperner {

/// Open interval (lo, hi) of the cake [0, 1]. Endpoint membership never matters.
struct Interval {
    Rational lo;
    Rational hi;
    Rational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A piece or the empty piece (nullopt).
using MaybeInterval = std::optional<Interval>;

/// Cuts X_0 = 0 <= X_1 <= ... <= X_n = 1 and the positive-length pieces between them.
class Division {
public:
    /// Cuts at the prefix sums of x.
    explicit Division(const Point& x);

    int n() const noexcept { return static_cast<int>(cuts_.size()) - 1; }
    /// X_0, ..., X_n.
    const std::vector<Rational>& cuts() const noexcept { return cuts_; }
    const std::vector<Interval>& pieces() const noexcept { return pieces_; }
    /// For each piece, the smallest j with X_j equal to its right endpoint.
    const std::vector<int>& piece_index() const noexcept { return piece_index_; }
    std::size_t piece_count() const noexcept { return pieces_.size(); }

    /// Position in pieces() of the piece (X_{j-1}, X_j), if it has positive length.
    std::optional<std::size_t> piece_at_index(int j) const;

    friend bool operator==(const Division&, const Division&) = default;

private:
    std::vector<Rational> cuts_;
    std::vector<Interval> pieces_;
    std::vector<int> piece_index_;
};

inline Division division_from_point(const Point& x) { return Division(x); }

/// Piecewise-constant density on [0, 1] with rational breakpoints.
class Density {
public:
    struct Segment {
        Rational start;
        Rational end;
        Rational value;
    };

    /// Validates: sorted, contiguous from 0 to 1, values >= 0, positive mass.
    explicit Density(std::vector<Segment> segments);
    static Density uniform();

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    Rational total_mass() const;
    /// Exact integral over [lo, hi].
    Rational measure(const Interval& piece) const;

private:
    std::vector<Segment> segments_;
};

/// Integral of d over the piece; 0 for the empty piece.
Rational measure_of(const Density& d, const MaybeInterval& piece);

/// Lebesgue measure of the symmetric difference of two intervals (or empty pieces).
Rational sym_diff_distance(const MaybeInterval& a, const MaybeInterval& b);

/// Answer of a preference oracle: accepted pieces (positions in Division::pieces(),
/// increasing) and whether the empty piece is accepted.
struct Acceptance {
    std::vector<std::size_t> pieces;
    bool empty_piece = false;
    bool none() const noexcept { return pieces.empty() && !empty_piece; }
    friend bool operator==(const Acceptance&, const Acceptance&) = default;
};

/// Pieces of maximal measure.
std::vector<std::size_t> attraction_accepts(const Density& d, const Division& division);
/// Pieces of minimal measure when there are n pieces; only the empty piece otherwise.
Acceptance rejection_accepts(const Density& d, int n, const Division& division);

class PreferenceOracle {
public:
    enum class Kind { attraction, rejection, custom };
    /// Must be pure: the same division always gets the same answer. Custom
    /// oracles are also expected to satisfy the closed preferences assumption,
    /// which is not checked.
    using Evaluator = std::function<Acceptance(const Division&)>;

    static PreferenceOracle attraction(Density d, int n);
    static PreferenceOracle rejection(Density d, int n);
    static PreferenceOracle custom(Evaluator f, int n, std::string name = "custom");

    Kind kind() const noexcept { return kind_; }
    int n() const noexcept { return n_; }
    const std::string& name() const noexcept { return name_; }
    /// Density of a built-in oracle; nullptr for custom ones.
    const Density* density() const noexcept { return density_ ? &*density_ : nullptr; }

    Acceptance evaluate(const Division& division) const;

private:
    PreferenceOracle() = default;
    Kind kind_ = Kind::custom;
    int n_ = 0;
    std::string name_;
    std::optional<Density> density_;
    Evaluator custom_;
};

struct FullDivisionReport {
    bool passed = true;
    std::optional<Point> witness;
    std::string reason;
};

/// Default samples: the barycenter and the interior vertices of sd^1.
std::vector<Point> default_full_division_samples(int n);

/// Spot check of the full division assumption at interior sample points:
/// the oracle must accept something, and never the empty piece.
FullDivisionReport validate_full_division(const PreferenceOracle& p, int n, std::span<const Point> samples);

}  // namespace symsperner

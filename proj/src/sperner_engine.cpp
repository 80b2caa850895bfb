#include "symsperner/sperner_engine.hpp"

#include "detail.hpp"
#include "symsperner/io.hpp"

#include <functional>

namespace symsperner {

PointLabeling lambda_from_labels(const Triangulation& t, const VertexLabeling& labels) {
    if (labels.size() != t.vertex_count()) throw ArgumentError("labeling size differs from the vertex count");
    PointLabeling out;
    out.reserve(labels.size());
    for (const LabelSet& l : labels) out.push_back(barycenter(l.set(), t.n()));
    return out;
}

std::vector<AffineHullViolation> affine_hull_violations(const Triangulation& t, const PointLabeling& lambda) {
    if (lambda.size() != t.vertex_count()) throw ArgumentError("point labeling size differs from the vertex count");
    std::vector<AffineHullViolation> out;
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        if (lambda[v].dim() != t.n()) throw ArgumentError("point label dimension differs from n");
        const IndexSet support = support_face(t.point(v));
        IndexSet nonzero;
        for (int i = 1; i <= t.n(); ++i) {
            if (lambda[v].at(i) != 0) nonzero.insert(i);
        }
        if (!nonzero.subset_of(support)) out.push_back({v, nonzero - support, support});
    }
    return out;
}

Rational det_sum(const Triangulation& t, const PointLabeling& lambda, unsigned jobs) {
    const auto violations = affine_hull_violations(t, lambda);
    if (!violations.empty()) {
        const auto& first = violations.front();
        throw InvariantViolation("lambda(v) leaves the affine hull of supp(v) at vertex " + std::to_string(first.vertex) +
                                 ": nonzero coordinates " + first.outside.to_string() + " outside supp(v) = " +
                                 first.support.to_string() + " (" + std::to_string(violations.size()) +
                                 " violating vertices)");
    }
    const int n = t.n();
    std::vector<Rational> terms(t.simplex_count());
    detail::parallel_for(t.simplex_count(), jobs, [&](std::size_t k) {
        const auto ids = t.simplex(k);
        RationalMatrix m(n, n);
        for (int c = 0; c < n; ++c) m.col(c) = lambda[ids[c]].coords();
        terms[k] = determinant(m) * t.orientation(k);
    });
    Rational total(0);
    for (const Rational& term : terms) total += term;
    return total;
}

bool boundary_identity_check(std::span<const RationalVector> columns) {
    const int n = static_cast<int>(columns.size());
    if (n < 1) throw ArgumentError("boundary_identity_check needs at least one column");
    for (const RationalVector& c : columns) {
        if (c.size() != n) throw ArgumentError("boundary_identity_check: column dimension differs from n");
        if (c.sum() != 1) throw ArgumentError("boundary_identity_check: columns must sum to 1");
    }
    const Rational lhs = det_points(columns);
    Rational rhs(0);
    for (int omit = 0; omit < n; ++omit) {
        RationalMatrix m(n - 1, n - 1);
        for (int c = 0, col = 0; c < n; ++c) {
            if (c == omit) continue;
            if (n > 1) m.col(col) = proj_point(columns[c]);
            ++col;
        }
        const Rational minor = determinant(m);
        rhs += omit % 2 == 0 ? minor : Rational(-minor);
    }
    if ((n - 1) % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

namespace {

// Kuhn augmenting path on the positions listed in `open`, using labels not in `used`.
bool perfect_matching_exists(std::span<const IndexSet> sets, const std::vector<std::size_t>& open, std::uint32_t used) {
    const int n = static_cast<int>(sets.size());
    std::vector<int> owner_of_label(n + 1, -1);
    for (std::size_t pos : open) {
        std::vector<bool> seen(n + 1, false);
        std::function<bool(std::size_t)> augment = [&](std::size_t p) -> bool {
            for (int label : sets[p].to_vector()) {
                if ((used >> (label - 1)) & 1u || seen[label]) continue;
                seen[label] = true;
                if (owner_of_label[label] < 0 || augment(static_cast<std::size_t>(owner_of_label[label]))) {
                    owner_of_label[label] = static_cast<int>(p);
                    return true;
                }
            }
            return false;
        };
        if (!augment(pos)) return false;
    }
    return true;
}

}  // namespace

std::optional<Permutation> sdr(std::span<const IndexSet> sets) {
    const int n = static_cast<int>(sets.size());
    if (n > kMaxSize) throw ArgumentError("sdr supports at most 32 sets");
    for (const IndexSet& s : sets) {
        if (s.max() > n) throw ArgumentError("sdr: every set must be a subset of [n]");
    }
    std::vector<int> picked(n, 0);
    std::uint32_t used = 0;
    std::vector<std::size_t> open;
    for (int pos = 0; pos < n; ++pos) {
        open.clear();
        for (int q = pos + 1; q < n; ++q) open.push_back(static_cast<std::size_t>(q));
        bool placed = false;
        for (int label : sets[pos].to_vector()) {
            const std::uint32_t bit = std::uint32_t{1} << (label - 1);
            if (used & bit) continue;
            if (perfect_matching_exists(sets, open, used | bit)) {
                picked[pos] = label;
                used |= bit;
                placed = true;
                break;
            }
        }
        if (!placed) return std::nullopt;
    }
    return Permutation(std::move(picked));
}

std::optional<Permutation> sdr(std::span<const LabelSet> sets) {
    std::vector<IndexSet> plain;
    plain.reserve(sets.size());
    for (const LabelSet& s : sets) plain.push_back(s.set());
    return sdr(std::span<const IndexSet>(plain));
}

Rational label_det(const Triangulation& t, const VertexLabeling& labels, SimplexId k) {
    const int n = t.n();
    const auto ids = t.simplex(k);
    // Column c is indicator(Lambda(v_c)) / |Lambda(v_c)|.
    Integer scale(1);
    for (VertexId v : ids) scale *= labels[v].size();
    auto fill = [&](auto& m) {
        for (int c = 0; c < n; ++c) {
            for (int r = 0; r < n; ++r) m(r, c) = labels[ids[c]].contains(r + 1) ? 1 : 0;
        }
    };
    Integer det01;
    if (n <= 12) {
        MatrixX<long long> m(n, n);
        fill(m);
        det01 = bareiss_determinant(m);
    } else {
        MatrixX<Integer> m(n, n);
        fill(m);
        det01 = bareiss_determinant(m);
    }
    return Rational(det01 * t.orientation(k), scale);
}

std::vector<FullyLabeledWitness> find_fully_labeled(const Triangulation& t, const VertexLabeling& labels,
                                                    SearchMode mode, unsigned jobs) {
    if (labels.size() != t.vertex_count()) throw ArgumentError("labeling size differs from the vertex count");
    std::vector<std::optional<FullyLabeledWitness>> slots(t.simplex_count());
    detail::parallel_for(t.simplex_count(), jobs, [&](std::size_t k) {
        Rational det = label_det(t, labels, k);
        if (mode == SearchMode::det && det == 0) return;
        std::vector<IndexSet> sets;
        for (VertexId v : t.simplex(k)) sets.push_back(labels[v].set());
        auto picked = sdr(std::span<const IndexSet>(sets));
        if (!picked) {
            if (mode == SearchMode::det) {
                throw InvariantViolation("nonzero label determinant without a system of distinct representatives");
            }
            return;
        }
        slots[k] = FullyLabeledWitness{k, std::move(*picked), std::move(det)};
    });
    std::vector<FullyLabeledWitness> out;
    for (auto& s : slots) {
        if (s) out.push_back(std::move(*s));
    }
    return out;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool existence_guaranteed(int n) { return is_prime(n) || n == 4; }

std::vector<FullyLabeledWitness> theorem_witnesses(const Triangulation& t, const VertexLabeling& labels, unsigned jobs) {
    const int n = t.n();
    if (!existence_guaranteed(n)) {
        throw PreconditionError("n prime or 4", "n = " + std::to_string(n));
    }
    auto fail_on = [](const CheckReport& report, const std::string& name) {
        if (!report.ok()) throw PreconditionError(name, report.violation->reason);
    };
    fail_on(is_nice(t), "nice triangulation");
    fail_on(check_proper_labels(t, labels), "nonempty proper labels");
    fail_on(check_nice_labeling(t, labels), "nice labeling");
    if (n == 4) {
        fail_on(supports_comparable(t), "comparable supporting faces");
        fail_on(check_restricted_form(t, labels), "labels J_v or singletons outside J_v");
    }
    auto witnesses = find_fully_labeled(t, labels, SearchMode::det, jobs);
    if (witnesses.empty()) {
        throw TheoremViolation("no simplex with nonzero label determinant although every hypothesis holds (n = " +
                                   std::to_string(n) + ", depth " + std::to_string(t.depth()) + ")",
                               instance_to_json(t, labels).dump());
    }
    return witnesses;
}

FullyLabeledWitness theorem_witness(const Triangulation& t, const VertexLabeling& labels, unsigned jobs) {
    return std::move(theorem_witnesses(t, labels, jobs).front());
}

Rational nonzero_scan(const Triangulation& t, const VertexLabeling& labels, unsigned jobs) {
    if (labels.size() != t.vertex_count()) throw ArgumentError("labeling size differs from the vertex count");
    std::vector<Rational> terms(t.simplex_count());
    detail::parallel_for(t.simplex_count(), jobs, [&](std::size_t k) { terms[k] = label_det(t, labels, k); });
    Rational total(0);
    for (const Rational& term : terms) total += term;
    return total;
}

}  // namespace symsperner

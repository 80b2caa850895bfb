#pragma once

// Determinant-sum invariant, the boundary projection identity, systems of
// distinct representatives, and the fully-labeled simplex search.

#include "symsperner/labeling.hpp"
#include "symsperner/triangulation.hpp"

#include <optional>
#include <span>
#include <vector>

namespace symsperner {

/// lambda: a point of the hyperplane sum = 1 per vertex.
using PointLabeling = std::vector<AffinePoint>;

struct AffineHullViolation {
    VertexId vertex;
    IndexSet outside;  // nonzero coordinates of lambda(v) outside supp(v)
    IndexSet support;
};

/// lambda(v) = b^{Lambda(v)}. The affine-hull condition is not implied; use
/// affine_hull_violations to find where it fails.
PointLabeling lambda_from_labels(const Triangulation& t, const VertexLabeling& labels);

/// Vertices whose lambda(v) has a nonzero coordinate outside supp(v), in id order.
std::vector<AffineHullViolation> affine_hull_violations(const Triangulation& t, const PointLabeling& lambda);

/// Sum of det(lambda(v_1), ..., lambda(v_n)) over the positively oriented maximal
/// simplices. Throws InvariantViolation unless every lambda(v) lies in the affine
/// hull of supp(v). The summation order is fixed, so `jobs` never changes the result.
Rational det_sum(const Triangulation& t, const PointLabeling& lambda, unsigned jobs = 1);

/// |value| = 1.
inline bool det_sum_is_unit(const Rational& value) { return abs(value) == 1; }

/// det(a_1..a_n) == (-1)^(n-1) * sum_i (-1)^(i-1) det(proj a_1, .., ^proj a_i, .., proj a_n)
/// for columns whose coordinates sum to 1.
bool boundary_identity_check(std::span<const RationalVector> columns);

/// Lexicographically smallest system of distinct representatives of n subsets
/// of [n]: element k of the result is picked from sets[k].
std::optional<Permutation> sdr(std::span<const IndexSet> sets);
std::optional<Permutation> sdr(std::span<const LabelSet> sets);

enum class SearchMode { det, matching };

struct FullyLabeledWitness {
    SimplexId simplex;
    Permutation sdr;     // picked label for each vertex, in stored vertex order
    Rational det_value;  // det(b^{Lambda(v)}) in positive orientation
};

/// det(b^{Lambda(v_1)}, ..., b^{Lambda(v_n)}) of simplex k in positive orientation.
Rational label_det(const Triangulation& t, const VertexLabeling& labels, SimplexId k);

/// det mode: every simplex with nonzero label determinant; matching mode: every
/// simplex whose label sets admit an SDR. Results are in simplex order.
std::vector<FullyLabeledWitness> find_fully_labeled(const Triangulation& t, const VertexLabeling& labels,
                                                    SearchMode mode, unsigned jobs = 1);

/// n is prime or 4.
bool existence_guaranteed(int n);
bool is_prime(int n);

/// Checks every hypothesis of the symmetric Sperner statement (nice
/// triangulation, nice proper labeling, n prime or 4, and for n = 4 comparable
/// supports with labels J_v or singletons outside J_v), then returns all
/// det-mode witnesses. Throws PreconditionError or, when none exists,
/// TheoremViolation carrying the serialized instance.
std::vector<FullyLabeledWitness> theorem_witnesses(const Triangulation& t, const VertexLabeling& labels,
                                                   unsigned jobs = 1);
/// First of theorem_witnesses.
FullyLabeledWitness theorem_witness(const Triangulation& t, const VertexLabeling& labels, unsigned jobs = 1);

/// Sum of label determinants over positively oriented maximal simplices.
Rational nonzero_scan(const Triangulation& t, const VertexLabeling& labels, unsigned jobs = 1);

}  // namespace symsperner

#pragma once

// Exact geometry of the standard simplex: index sets, points, the cyclic
// insertion maps rho^j / r^j, face barycenters and exact determinants.
//
// Indices that name players, labels, pieces or coordinates are 1-based
// (values in [n]); Eigen storage is 0-based.

#include "symsperner/errors.hpp"
#include "symsperner/rational.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace symsperner {

inline constexpr int kMaxSize = 32;

/// Subset of [n] for n <= 32, stored as a bit mask so that equality is structural.
class IndexSet {
public:
    constexpr IndexSet() = default;
    IndexSet(std::initializer_list<int> elements) {
        for (int e : elements) insert(e);
    }
    static constexpr IndexSet from_mask(std::uint32_t mask) {
        IndexSet s;
        s.mask_ = mask;
        return s;
    }
    /// [n] = {1, ..., n}.
    static IndexSet full(int n);

    void insert(int i) {
        check_index(i);
        mask_ |= bit(i);
    }
    void erase(int i) {
        check_index(i);
        mask_ &= ~bit(i);
    }
    bool contains(int i) const noexcept { return i >= 1 && i <= kMaxSize && (mask_ & bit(i)) != 0; }
    int size() const noexcept { return std::popcount(mask_); }
    bool empty() const noexcept { return mask_ == 0; }
    std::uint32_t mask() const noexcept { return mask_; }
    /// Smallest element; the set must be nonempty.
    int min() const;
    /// Largest element, or 0 when empty.
    int max() const noexcept { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

    bool subset_of(const IndexSet& other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    IndexSet operator|(const IndexSet& o) const noexcept { return from_mask(mask_ | o.mask_); }
    IndexSet operator&(const IndexSet& o) const noexcept { return from_mask(mask_ & o.mask_); }
    IndexSet operator-(const IndexSet& o) const noexcept { return from_mask(mask_ & ~o.mask_); }
    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet& a, const IndexSet& b) { return a.to_vector() <=> b.to_vector(); }

    /// Elements in increasing order.
    std::vector<int> to_vector() const;
    std::string to_string() const;

private:
    static constexpr std::uint32_t bit(int i) { return std::uint32_t{1} << (i - 1); }
    static void check_index(int i) {
        if (i < 1 || i > kMaxSize) throw ArgumentError("index " + std::to_string(i) + " outside [1, 32]");
    }
    std::uint32_t mask_ = 0;
};

/// Nonempty subset of [n] attached to a triangulation vertex.
class LabelSet {
public:
    explicit LabelSet(IndexSet elements) : set_(elements) {
        if (set_.empty()) throw ArgumentError("label sets must be nonempty");
    }
    LabelSet(std::initializer_list<int> elements) : LabelSet(IndexSet(elements)) {}

    const IndexSet& set() const noexcept { return set_; }
    operator const IndexSet&() const noexcept { return set_; }
    bool contains(int i) const noexcept { return set_.contains(i); }
    int size() const noexcept { return set_.size(); }
    int min() const { return set_.min(); }
    std::vector<int> to_vector() const { return set_.to_vector(); }
    std::string to_string() const { return set_.to_string(); }
    friend bool operator==(const LabelSet&, const LabelSet&) = default;

private:
    IndexSet set_;
};

/// Bijection of [n] stored as its image array: image()[i-1] = pi(i).
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const;
    const std::vector<int>& image() const noexcept { return image_; }
    /// +1 for even permutations, -1 for odd ones.
    int sign() const;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// Point of the affine hyperplane sum(x) = 1; negative coordinates allowed.
class AffinePoint {
public:
    explicit AffinePoint(RationalVector coords);
    int dim() const noexcept { return static_cast<int>(coords_.size()); }
    const RationalVector& coords() const noexcept { return coords_; }
    /// Coordinate i in 1-based indexing.
    const Rational& at(int i) const;
    friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
        return RationalVectorEqual{}(a.coords_, b.coords_);
    }

protected:
    struct Unchecked {};
    AffinePoint(RationalVector coords, Unchecked) : coords_(std::move(coords)) {}
    RationalVector coords_;
};

/// Point of the standard simplex: nonnegative coordinates summing to 1.
class Point : public AffinePoint {
public:
    explicit Point(RationalVector coords);
    /// Unit vector e_i.
    static Point unit(int i, int n);

private:
    Point(RationalVector coords, Unchecked u) : AffinePoint(std::move(coords), u) {}
    friend Point r_apply(int j, const Point& x);
    friend Point barycenter(const IndexSet& face, int n);
};

/// rho^j(i): j if i = 1, i-1 if 2 <= i <= j, i otherwise.
int rho_apply(int j, int i, int n);
/// (-1)^(j-1), the sign of rho^j.
int rho_sign(int j, int n);
/// rho^j as a permutation of [n].
Permutation rho_permutation(int j, int n);
/// Image of a subset of [n] under rho^j.
IndexSet rho_image(int j, const IndexSet& s, int n);
LabelSet rho_image(int j, const LabelSet& s, int n);

/// r^j: moves coordinate i to coordinate rho^j(i).
template <typename Derived>
VectorX<typename Derived::Scalar> r_apply(int j, const Eigen::MatrixBase<Derived>& x) {
    const int n = static_cast<int>(x.size());
    VectorX<typename Derived::Scalar> out(n);
    for (int i = 1; i <= n; ++i) out(rho_apply(j, i, n) - 1) = x(i - 1);
    return out;
}
Point r_apply(int j, const Point& x);
AffinePoint r_apply(int j, const AffinePoint& x);

/// b^S: 1/|S| on S, 0 elsewhere.
Point barycenter(const IndexSet& face, int n);

/// J_x = { j : x_j = 0 }.
IndexSet facet_set(const RationalVector& x);
inline IndexSet facet_set(const AffinePoint& x) { return facet_set(x.coords()); }
/// supp(x) = { j : x_j > 0 }.
IndexSet support_face(const RationalVector& x);
inline IndexSet support_face(const AffinePoint& x) { return support_face(x.coords()); }

/// Fraction-free (Bareiss) determinant over an exact integral domain.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = input.rows();
    if (input.cols() != n) throw ArgumentError("determinant of a non-square matrix");
    if (n == 0) return Scalar(1);
    MatrixX<Scalar> a = input;
    Scalar previous(1);
    int swaps = 0;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return Scalar(0);
            a.row(k).swap(a.row(pivot));
            ++swaps;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index c = k + 1; c < n; ++c) {
                a(i, c) = (a(i, c) * a(k, k) - a(i, k) * a(k, c)) / previous;
            }
        }
        previous = a(k, k);
    }
    Scalar det = a(n - 1, n - 1);
    return swaps % 2 == 0 ? det : Scalar(-det);
}

/// Exact determinant of a rational matrix: denominators are cleared column by
/// column and the integer matrix is reduced with bareiss_determinant.
Rational determinant(const RationalMatrix& m);

/// det of the matrix whose columns are the given points.
Rational det_points(std::span<const AffinePoint> columns);
Rational det_points(std::span<const RationalVector> columns);

/// Drops the last coordinate (proj(e_n) = 0).
RationalVector proj_point(const RationalVector& x);
inline RationalVector proj_point(const AffinePoint& x) { return proj_point(x.coords()); }

}  // namespace symsperner

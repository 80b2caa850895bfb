#include "symsperner/geometry.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace symsperner {

std::string to_string(const Rational& value) { return value.str(); }

Rational parse_rational(std::string_view text) {
    auto is_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num, true) || !is_integer(den, false)) {
        throw ArgumentError("malformed rational '" + std::string(text) + "' (expected \"p/q\" or \"p\")");
    }
    const Integer q{std::string(den)};
    if (q == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
    return Rational(Integer{std::string(num)}, q);
}

std::size_t RationalVectorHash::operator()(const RationalVector& v) const noexcept {
    std::size_t seed = static_cast<std::size_t>(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) boost::hash_combine(seed, boost::hash<Rational>{}(v(i)));
    return seed;
}

// IndexSet ----------------------------------------------------------------

IndexSet IndexSet::full(int n) {
    if (n < 0 || n > kMaxSize) throw ArgumentError("set size " + std::to_string(n) + " outside [0, 32]");
    return from_mask(n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
}

int IndexSet::min() const {
    if (mask_ == 0) throw ArgumentError("min of an empty index set");
    return std::countr_zero(mask_) + 1;
}

std::vector<int> IndexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::string IndexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : to_vector()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

// Permutation ---------------------------------------------------------------

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[v]) throw ArgumentError("image is not a permutation of [n]");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > size()) throw ArgumentError("permutation argument outside [n]");
    return image_[i - 1];
}

int Permutation::sign() const {
    std::vector<bool> visited(image_.size(), false);
    int parity = 0;
    for (std::size_t start = 0; start < image_.size(); ++start) {
        if (visited[start]) continue;
        int length = 0;
        for (std::size_t k = start; !visited[k]; k = image_[k] - 1) {
            visited[k] = true;
            ++length;
        }
        parity += length - 1;
    }
    return parity % 2 == 0 ? 1 : -1;
}

// Points --------------------------------------------------------------------

AffinePoint::AffinePoint(RationalVector coords) : coords_(std::move(coords)) {
    if (coords_.size() == 0) throw ArgumentError("points need at least one coordinate");
    if (coords_.sum() != 1) throw ArgumentError("affine point coordinates must sum to 1");
}

const Rational& AffinePoint::at(int i) const {
    if (i < 1 || i > dim()) throw ArgumentError("coordinate index outside [n]");
    return coords_(i - 1);
}

Point::Point(RationalVector coords) : AffinePoint(std::move(coords)) {
    for (Eigen::Index i = 0; i < coords_.size(); ++i) {
        if (coords_(i) < 0) throw ArgumentError("simplex points must have nonnegative coordinates");
    }
}

Point Point::unit(int i, int n) {
    if (n < 1 || i < 1 || i > n) throw ArgumentError("unit vector index outside [n]");
    RationalVector v = RationalVector::Zero(n);
    v(i - 1) = 1;
    return Point(std::move(v), Unchecked{});
}

// Symmetry maps ---------------------------------------------------------------

int rho_apply(int j, int i, int n) {
    if (n < 1 || j < 1 || j > n || i < 1 || i > n) {
        throw ArgumentError("rho_apply: indices must lie in [1, " + std::to_string(n) + "]");
    }
    if (i == 1) return j;
    if (i <= j) return i - 1;
    return i;
}

int rho_sign(int j, int n) {
    if (n < 1 || j < 1 || j > n) throw ArgumentError("rho_sign: j outside [n]");
    return (j - 1) % 2 == 0 ? 1 : -1;
}

Permutation rho_permutation(int j, int n) {
    std::vector<int> image(n);
    for (int i = 1; i <= n; ++i) image[i - 1] = rho_apply(j, i, n);
    return Permutation(std::move(image));
}

IndexSet rho_image(int j, const IndexSet& s, int n) {
    IndexSet out;
    for (int i : s.to_vector()) out.insert(rho_apply(j, i, n));
    return out;
}

LabelSet rho_image(int j, const LabelSet& s, int n) { return LabelSet(rho_image(j, s.set(), n)); }

Point r_apply(int j, const Point& x) {
    if (j < 1 || j > x.dim()) throw ArgumentError("r_apply: j outside [n]");
    return Point(r_apply(j, x.coords()), Point::Unchecked{});
}

AffinePoint r_apply(int j, const AffinePoint& x) {
    if (j < 1 || j > x.dim()) throw ArgumentError("r_apply: j outside [n]");
    return AffinePoint(r_apply(j, x.coords()));
}

Point barycenter(const IndexSet& face, int n) {
    if (face.empty()) throw ArgumentError("barycenter of an empty face");
    if (n < 1 || n > kMaxSize || face.max() > n) throw ArgumentError("barycenter: face is not a subset of [n]");
    RationalVector v = RationalVector::Zero(n);
    const Rational weight(1, face.size());
    for (int i : face.to_vector()) v(i - 1) = weight;
    return Point(std::move(v), Point::Unchecked{});
}

IndexSet facet_set(const RationalVector& x) {
    IndexSet out;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x(i) == 0) out.insert(static_cast<int>(i) + 1);
    }
    return out;
}

IndexSet support_face(const RationalVector& x) {
    IndexSet out;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x(i) > 0) out.insert(static_cast<int>(i) + 1);
    }
    return out;
}

// Determinants ----------------------------------------------------------------

Rational determinant(const RationalMatrix& m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw ArgumentError("determinant of a non-square matrix");
    MatrixX<Integer> scaled(n, n);
    Integer scale(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Integer lcm(1);
        for (Eigen::Index r = 0; r < n; ++r) lcm = boost::multiprecision::lcm(lcm, denominator(m(r, c)));
        for (Eigen::Index r = 0; r < n; ++r) {
            scaled(r, c) = numerator(m(r, c)) * (lcm / denominator(m(r, c)));
        }
        scale *= lcm;
    }
    return Rational(bareiss_determinant(scaled), scale);
}

namespace {
template <typename Range, typename Get>
Rational det_columns(const Range& columns, Get get) {
    const Eigen::Index n = static_cast<Eigen::Index>(columns.size());
    RationalMatrix m(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const RationalVector& col = get(columns[c]);
        if (col.size() != n) throw ArgumentError("det_points: every point must have dimension n = number of columns");
        m.col(c) = col;
    }
    return determinant(m);
}
}  // namespace

Rational det_points(std::span<const AffinePoint> columns) {
    return det_columns(columns, [](const AffinePoint& p) -> const RationalVector& { return p.coords(); });
}

Rational det_points(std::span<const RationalVector> columns) {
    return det_columns(columns, [](const RationalVector& p) -> const RationalVector& { return p; });
}

RationalVector proj_point(const RationalVector& x) {
    if (x.size() < 2) throw ArgumentError("proj_point needs n >= 2");
    return x.head(x.size() - 1);
}

}  // namespace symsperner

#include "oracles.hpp"
#include "symsperner/geometry.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace symsperner;

namespace {

RationalVector vec(std::initializer_list<Rational> xs) {
    RationalVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const Rational& x : xs) v(i++) = x;
    return v;
}

Rational q(int p, int d = 1) { return Rational(p, d); }

RationalMatrix random_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    RationalMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = Rational(num(rng), den(rng));
    return m;
}

oracle::Matrix to_rows(const RationalMatrix& m) {
    oracle::Matrix rows(m.rows(), std::vector<Rational>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return rows;
}

}  // namespace

TEST_CASE("rationals print and parse in lowest terms") {
    CHECK(to_string(q(2, 4)) == "1/2");
    CHECK(to_string(q(-6, 3)) == "-2");
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-7") == q(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
    CHECK_THROWS_AS(parse_rational("0.5"), ArgumentError);
    CHECK_THROWS_AS(parse_rational(""), ArgumentError);
}

TEST_CASE("index sets") {
    IndexSet s{3, 1};
    CHECK(s.to_vector() == std::vector<int>{1, 3});
    CHECK(s.to_string() == "{1,3}");
    CHECK(s.min() == 1);
    CHECK(s.max() == 3);
    CHECK((IndexSet::full(3) - s) == IndexSet{2});
    CHECK(IndexSet{1}.subset_of(s));
    CHECK_THROWS_AS(IndexSet{}.min(), ArgumentError);
    CHECK_THROWS_AS(IndexSet{33}, ArgumentError);
    CHECK_THROWS_AS(LabelSet(IndexSet{}), ArgumentError);
}

TEST_CASE("permutations validate their image") {
    CHECK_THROWS_AS(Permutation({1, 1}), ArgumentError);
    CHECK_THROWS_AS(Permutation({0, 1}), ArgumentError);
    CHECK(Permutation({2, 1, 3}).sign() == -1);
    CHECK(Permutation({2, 3, 1}).sign() == 1);
}

TEST_CASE("points check their simplex membership") {
    CHECK_NOTHROW(Point(vec({q(1, 2), q(1, 2)})));
    CHECK_THROWS_AS(Point(vec({q(1, 2), q(1, 3)})), ArgumentError);
    CHECK_THROWS_AS(Point(vec({q(3, 2), q(-1, 2)})), ArgumentError);
    CHECK_NOTHROW(AffinePoint(vec({q(3, 2), q(-1, 2)})));
}

TEST_CASE("rho examples") {
    CHECK(rho_apply(2, 1, 3) == 2);
    for (int k = 1; k <= 5; ++k) CHECK(rho_apply(1, k, 5) == k);
    CHECK(rho_permutation(3, 3).image() == std::vector<int>{3, 1, 2});
    CHECK_THROWS_AS(rho_apply(4, 1, 3), ArgumentError);
    CHECK_THROWS_AS(rho_apply(1, 0, 3), ArgumentError);
    CHECK(rho_sign(1, 4) == 1);
    CHECK(rho_sign(2, 4) == -1);
    CHECK(rho_sign(4, 4) == -1);
}

TEST_CASE("rho matches the cycle construction and its sign is the inversion parity") {
    for (int n = 1; n <= 8; ++n) {
        for (int j = 1; j <= n; ++j) {
            const auto cycle = oracle::rho_by_cycle(j, n);
            std::vector<int> image;
            for (int i = 1; i <= n; ++i) {
                CHECK(rho_apply(j, i, n) == cycle[i]);
                image.push_back(rho_apply(j, i, n));
            }
            std::vector<int> sorted = image;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 1; i <= n; ++i) CHECK(sorted[i - 1] == i);
            CHECK(rho_sign(j, n) == oracle::inversion_sign(image));
        }
    }
}

TEST_CASE("r_apply examples") {
    CHECK(r_apply(3, Point::unit(1, 3)) == Point::unit(3, 3));
    const Point half(vec({q(1, 2), q(1, 2), q(0)}));
    CHECK(r_apply(2, half) == half);
    const AffinePoint a(vec({q(2), q(-3), q(2)}));
    CHECK(r_apply(1, a) == a);
    CHECK(r_apply(3, a).coords() == vec({q(-3), q(2), q(2)}));
    CHECK_THROWS_AS(r_apply(4, half), ArgumentError);
}

TEST_CASE("barycenter, facet set and support face examples") {
    CHECK(barycenter({1, 2, 3}, 3).coords() == vec({q(1, 3), q(1, 3), q(1, 3)}));
    CHECK(barycenter({2}, 3) == Point::unit(2, 3));
    CHECK(barycenter({1, 3}, 3).coords() == vec({q(1, 2), q(0), q(1, 2)}));
    CHECK_THROWS_AS(barycenter({}, 3), ArgumentError);
    CHECK_THROWS_AS(barycenter({4}, 3), ArgumentError);

    CHECK(facet_set(vec({q(1, 2), q(1, 2), q(0)})) == IndexSet{3});
    CHECK(facet_set(vec({q(1, 3), q(1, 3), q(1, 3)})).empty());
    CHECK(facet_set(Point::unit(1, 3)) == IndexSet{2, 3});
    CHECK(support_face(vec({q(1, 2), q(1, 2), q(0)})) == IndexSet{1, 2});
    CHECK(support_face(Point::unit(1, 3)) == IndexSet{1});
}

TEST_CASE("facet set and support face partition [n]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> w(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 6;
        std::vector<int> weights(n);
        for (int& v : weights) v = w(rng);
        if (std::accumulate(weights.begin(), weights.end(), 0) == 0) weights[0] = 1;
        const int total = std::accumulate(weights.begin(), weights.end(), 0);
        RationalVector x(n);
        for (int i = 0; i < n; ++i) x(i) = Rational(weights[i], total);
        const IndexSet f = facet_set(x), s = support_face(x);
        CHECK((f | s) == IndexSet::full(n));
        CHECK((f & s).empty());
        CHECK(barycenter(s, n).coords().cwiseEqual(Rational(0)) == x.cwiseEqual(Rational(0)));
    }
}

TEST_CASE("det_points examples") {
    std::vector<AffinePoint> id{Point::unit(1, 3), Point::unit(2, 3), Point::unit(3, 3)};
    CHECK(det_points(id) == 1);
    std::vector<AffinePoint> flag{barycenter({1}, 3), barycenter({1, 2}, 3), barycenter({1, 2, 3}, 3)};
    // frozen from the Leibniz oracle
    CHECK(oracle::leibniz_det_columns({{q(1), q(0), q(0)}, {q(1, 2), q(1, 2), q(0)}, {q(1, 3), q(1, 3), q(1, 3)}}) ==
          q(1, 6));
    CHECK(det_points(flag) == q(1, 6));
    std::vector<AffinePoint> repeated{Point::unit(1, 3), Point::unit(1, 3), Point::unit(2, 3)};
    CHECK(det_points(repeated) == 0);
    std::vector<AffinePoint> bad{Point::unit(1, 3), Point::unit(1, 2), Point::unit(2, 3)};
    CHECK_THROWS_AS(det_points(bad), ArgumentError);
}

TEST_CASE("Bareiss determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            RationalMatrix m = random_matrix(n, rng);
            if (trial % 5 == 0 && n > 1) m.col(n - 1) = m.col(0) * Rational(3, 2);  // singular
            CHECK(determinant(m) == oracle::leibniz_det(to_rows(m)));
        }
    }
    MatrixX<long long> small(3, 3);
    small << 0, 1, 2, 3, 4, 5, 6, 7, 9;
    CHECK(bareiss_determinant(small) == -3);
}

TEST_CASE("determinant is multilinear and alternating") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 4;
        RationalMatrix a = random_matrix(n, rng), b = a;
        const RationalMatrix extra = random_matrix(n, rng);
        const int c = trial % n;
        b.col(c) = extra.col(0);
        RationalMatrix sum = a;
        const Rational s(trial - 20, 7);
        sum.col(c) = a.col(c) * s + extra.col(0);
        CHECK(determinant(sum) == s * determinant(a) + determinant(b));
        RationalMatrix swapped = a;
        swapped.col(0).swap(swapped.col(n - 1));
        CHECK(determinant(swapped) == -determinant(a));
    }
}

TEST_CASE("proj_point examples") {
    CHECK(proj_point(Point::unit(3, 3)) == vec({q(0), q(0)}));
    CHECK(proj_point(barycenter({1, 2, 3}, 3)) == vec({q(1, 3), q(1, 3)}));
    CHECK(proj_point(Point::unit(1, 3)) == vec({q(1), q(0)}));
    CHECK_THROWS_AS(proj_point(Point::unit(1, 1)), ArgumentError);
}

TEST_CASE("r^j maps b^S to b^{rho^j(S)} for every n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (int j = 1; j <= n; ++j) {
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                const IndexSet s = IndexSet::from_mask(mask);
                CHECK(r_apply(j, barycenter(s, n)) == barycenter(rho_image(j, s, n), n));
            }
        }
    }
}

TEST_CASE("det(r^j) = (-1)^(j-1) for every n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (int j = 1; j <= n; ++j) {
            RationalMatrix m(n, n);
            for (int i = 1; i <= n; ++i) m.col(i - 1) = r_apply(j, Point::unit(i, n)).coords();
            CHECK(determinant(m) == rho_sign(j, n));
            CHECK(oracle::leibniz_det(to_rows(m)) == ((j - 1) % 2 == 0 ? 1 : -1));
        }
    }
}

#include "oracles.hpp"
#include "symsperner/io.hpp"
#include "symsperner/sperner_engine.hpp"
#include "symsperner/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace symsperner;

namespace {

Rational q(int p, int d = 1) { return Rational(p, d); }

Point pt(std::initializer_list<Rational> xs) {
    RationalVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const Rational& x : xs) v(i++) = x;
    return Point(v);
}

std::vector<std::vector<Rational>> as_columns(const std::vector<RationalVector>& cols) {
    std::vector<std::vector<Rational>> out;
    for (const auto& c : cols) out.emplace_back(c.data(), c.data() + c.size());
    return out;
}

// A classical Sperner labeling: every vertex gets a random element of its support.
std::vector<int> sperner_labels(const Triangulation& t, std::mt19937_64& rng) {
    std::vector<int> out;
    for (const Point& x : t.points()) {
        const auto support = support_face(x).to_vector();
        std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
        out.push_back(support[pick(rng)]);
    }
    return out;
}

}  // namespace

TEST_CASE("lambda from label sets") {
    const Triangulation std3 = standard_triangulation(3);
    const VertexLabeling identity{LabelSet{1}, LabelSet{2}, LabelSet{3}};
    const PointLabeling lambda = lambda_from_labels(std3, identity);
    CHECK(lambda[1] == AffinePoint(Point::unit(2, 3)));
    CHECK(affine_hull_violations(std3, lambda).empty());
    CHECK(det_sum(std3, lambda) == 1);

    const Triangulation t = sd_pow(3, 1);
    VertexLabeling J;
    for (const Point& x : t.points()) {
        const IndexSet f = facet_set(x);
        J.push_back(f.empty() ? LabelSet{1} : LabelSet(f));
    }
    const auto violations = affine_hull_violations(t, lambda_from_labels(t, J));
    CHECK(violations.size() == 6);  // every boundary vertex
    for (const auto& v : violations) CHECK((v.outside & v.support).empty());
    CHECK_THROWS_AS(det_sum(t, lambda_from_labels(t, J)), InvariantViolation);
}

TEST_CASE("det_sum of the identity labeling is the total volume") {
    for (int n = 1; n <= 4; ++n) {
        for (int depth = 0; depth <= (n <= 3 ? 3 : 2); ++depth) {
            const Triangulation t = sd_pow(n, depth);
            CHECK(det_sum(t, identity_labeling(t)) == 1);
        }
    }
}

TEST_CASE("det_sum of a classical Sperner labeling is the signed count of fully labeled simplices") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 4; ++n) {
        for (int depth = 1; depth <= 2; ++depth) {
            const Triangulation t = sd_pow(n, depth);
            for (int trial = 0; trial < 10; ++trial) {
                const std::vector<int> labels = sperner_labels(t, rng);
                PointLabeling lambda;
                for (int l : labels) lambda.emplace_back(Point::unit(l, n));
                int signed_count = 0, unsigned_count = 0;
                for (SimplexId k = 0; k < t.simplex_count(); ++k) {
                    std::vector<int> picked;
                    for (VertexId v : t.simplex(k)) picked.push_back(labels[v]);
                    std::vector<int> sorted = picked;
                    std::sort(sorted.begin(), sorted.end());
                    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
                    for (int& p : picked) --p;
                    signed_count += oracle::inversion_sign(picked) * t.orientation(k);
                    ++unsigned_count;
                }
                const Rational value = det_sum(t, lambda);
                CHECK(value == signed_count);
                CHECK(det_sum_is_unit(value));
                CHECK(unsigned_count % 2 == 1);
            }
        }
    }
}

TEST_CASE("det_sum is a unit for random affine labelings") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 4; ++n) {
        for (int depth = 1; depth <= 2; ++depth) {
            const Triangulation t = sd_pow(n, depth);
            for (int trial = 0; trial < 5; ++trial) {
                const PointLabeling lambda = random_affine_labeling(t, rng);
                CHECK(affine_hull_violations(t, lambda).empty());
                CHECK(det_sum_is_unit(det_sum(t, lambda)));
            }
        }
    }
}

TEST_CASE("det_sum does not depend on the worker count") {
    std::mt19937_64 rng(29);
    const Triangulation t = sd_pow(4, 2);
    const PointLabeling lambda = random_affine_labeling(t, rng);
    const Rational serial = det_sum(t, lambda, 1);
    for (unsigned jobs : {2u, 3u, 8u}) CHECK(det_sum(t, lambda, jobs) == serial);
}

TEST_CASE("projection identity") {
    const std::vector<RationalVector> id{Point::unit(1, 3).coords(), Point::unit(2, 3).coords(),
                                         Point::unit(3, 3).coords()};
    CHECK(boundary_identity_check(id));
    const std::vector<RationalVector> repeated{Point::unit(1, 3).coords(), Point::unit(1, 3).coords(),
                                               pt({q(1, 3), q(1, 3), q(1, 3)}).coords()};
    CHECK(boundary_identity_check(repeated));
    CHECK(boundary_identity_check(std::vector<RationalVector>{Point::unit(1, 1).coords()}));

    std::mt19937_64 rng(31);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto cols = random_sum_one_columns(n, rng);
            CHECK(boundary_identity_check(cols));
            // both sides from the Leibniz oracle
            const Rational lhs = oracle::leibniz_det_columns(as_columns(cols));
            Rational rhs(0);
            for (int omit = 0; omit < n; ++omit) {
                std::vector<std::vector<Rational>> minor;
                for (int c = 0; c < n; ++c) {
                    if (c == omit) continue;
                    minor.emplace_back(cols[c].data(), cols[c].data() + n - 1);
                }
                const Rational m = n == 1 ? Rational(1) : oracle::leibniz_det_columns(minor);
                rhs += omit % 2 == 0 ? m : Rational(-m);
            }
            if ((n - 1) % 2 == 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
    std::vector<RationalVector> bad = id;
    bad[0](0) = 2;
    CHECK_THROWS_AS(boundary_identity_check(bad), ArgumentError);
}

TEST_CASE("systems of distinct representatives") {
    const std::vector<IndexSet> singletons{{1}, {2}, {3}};
    CHECK(sdr(singletons)->image() == std::vector<int>{1, 2, 3});
    const std::vector<IndexSet> hall{{1}, {1}, {2}};
    CHECK_FALSE(sdr(hall).has_value());
    const std::vector<IndexSet> cyclic{{1, 2}, {2, 3}, {1, 3}};
    CHECK(sdr(cyclic)->image() == std::vector<int>{1, 2, 3});
    const std::vector<IndexSet> forced{{1, 2}, {1}};
    CHECK(sdr(forced)->image() == std::vector<int>{2, 1});

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 5;
        std::uniform_int_distribution<std::uint32_t> mask(1, (1u << n) - 1);
        std::vector<IndexSet> sets;
        std::vector<std::set<int>> plain;
        for (int k = 0; k < n; ++k) {
            sets.push_back(IndexSet::from_mask(mask(rng)));
            const auto v = sets.back().to_vector();
            plain.emplace_back(v.begin(), v.end());
        }
        const auto mine = sdr(sets);
        const auto expected = oracle::brute_sdr(plain);
        REQUIRE(mine.has_value() == expected.has_value());
        if (mine) CHECK(mine->image() == *expected);
    }
}

TEST_CASE("the cyclic triple has an SDR and a nonzero determinant") {
    std::vector<AffinePoint> cols{barycenter({1, 2}, 3), barycenter({2, 3}, 3), barycenter({1, 3}, 3)};
    // frozen from the Leibniz oracle; the columns form a circulant matrix
    CHECK(oracle::leibniz_det_columns({{q(1, 2), q(1, 2), q(0)}, {q(0), q(1, 2), q(1, 2)}, {q(1, 2), q(0), q(1, 2)}}) ==
          q(1, 4));
    CHECK(det_points(cols) == q(1, 4));
    const Triangulation std3 = standard_triangulation(3);
    const VertexLabeling labels{LabelSet{1, 2}, LabelSet{2, 3}, LabelSet{1, 3}};
    CHECK(label_det(std3, labels, 0) == q(1, 4));
    const auto matching = find_fully_labeled(std3, labels, SearchMode::matching);
    REQUIRE(matching.size() == 1);
    CHECK(matching[0].sdr.image() == std::vector<int>{1, 2, 3});
    CHECK(find_fully_labeled(std3, labels, SearchMode::det).size() == 1);
}

TEST_CASE("an SDR can exist under a zero determinant") {
    CHECK(oracle::leibniz_det_columns({{q(1, 2), q(1, 2), q(0)}, {q(1, 2), q(1, 2), q(0)}, {q(0), q(0), q(1)}}) == 0);
    const Triangulation std3 = standard_triangulation(3);
    const VertexLabeling labels{LabelSet{1, 2}, LabelSet{1, 2}, LabelSet{3}};
    CHECK(label_det(std3, labels, 0) == 0);
    const auto matching = find_fully_labeled(std3, labels, SearchMode::matching);
    REQUIRE(matching.size() == 1);
    CHECK(matching[0].sdr.image() == std::vector<int>{1, 2, 3});
    CHECK(find_fully_labeled(std3, labels, SearchMode::det).empty());
}

TEST_CASE("fully labeled search examples") {
    const Triangulation std3 = standard_triangulation(3);
    const VertexLabeling identity{LabelSet{1}, LabelSet{2}, LabelSet{3}};
    const auto found = find_fully_labeled(std3, identity, SearchMode::det);
    REQUIRE(found.size() == 1);
    CHECK(found[0].sdr.image() == std::vector<int>{1, 2, 3});
    CHECK(found[0].det_value == 1);

    const Triangulation t = sd_pow(3, 2);
    const VertexLabeling ones(t.vertex_count(), LabelSet{1});
    CHECK(find_fully_labeled(t, ones, SearchMode::det).empty());
    CHECK(find_fully_labeled(t, ones, SearchMode::matching).empty());
}

TEST_CASE("label determinants match determinants of barycenters") {
    std::mt19937_64 rng(41);
    for (int n = 2; n <= 4; ++n) {
        const Triangulation t = sd_pow(n, n == 4 ? 1 : 2);
        for (int trial = 0; trial < 5; ++trial) {
            const VertexLabeling labels = random_nice_labeling(t, LabelShape::general, rng);
            const PointLabeling lambda = lambda_from_labels(t, labels);
            for (SimplexId k = 0; k < t.simplex_count(); ++k) {
                std::vector<AffinePoint> cols;
                for (VertexId v : t.simplex(k)) cols.push_back(lambda[v]);
                CHECK(label_det(t, labels, k) == det_points(cols) * t.orientation(k));
            }
            const auto det = find_fully_labeled(t, labels, SearchMode::det);
            const auto matching = find_fully_labeled(t, labels, SearchMode::matching);
            std::set<SimplexId> in_matching;
            for (const auto& w : matching) in_matching.insert(w.simplex);
            for (const auto& w : det) {
                CHECK(in_matching.count(w.simplex) == 1);
                CHECK(w.det_value != 0);
                const auto ids = t.simplex(w.simplex);
                for (std::size_t c = 0; c < ids.size(); ++c) CHECK(labels[ids[c]].contains(w.sdr(static_cast<int>(c) + 1)));
            }
            CHECK(find_fully_labeled(t, labels, SearchMode::det, 3).size() == det.size());
        }
    }
}

TEST_CASE("existence guarantee") {
    CHECK(is_prime(2));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(existence_guaranteed(4));
    CHECK_FALSE(existence_guaranteed(6));
}

TEST_CASE("theorem witnesses") {
    const auto att = [](int n) { return PreferenceOracle::attraction(Density::uniform(), n); };
    const auto rej = [](int n) { return PreferenceOracle::rejection(Density::uniform(), n); };

    const Triangulation t3 = sd_pow(3, 1);
    const std::vector<PreferenceOracle> three{att(3), att(3), att(3)};
    const FullyLabeledWitness w3 = theorem_witness(t3, build_labeling(t3, owner_labeling(t3), three));
    CHECK(w3.det_value != 0);

    const Triangulation t4 = sd_pow(4, 1);
    const std::vector<PreferenceOracle> mixed{att(4), rej(4), att(4), rej(4)};
    CHECK(theorem_witness(t4, build_labeling(t4, owner_labeling(t4), mixed)).det_value != 0);

    std::mt19937_64 rng(43);
    for (int depth = 1; depth <= 4; ++depth) {
        const Triangulation t2 = sd_pow(2, depth);
        for (int trial = 0; trial < 10; ++trial) {
            CHECK_NOTHROW(theorem_witness(t2, random_nice_labeling(t2, LabelShape::general, rng)));
        }
    }
}

TEST_CASE("theorem preconditions are named") {
    auto precondition_of = [](auto&& call) -> std::string {
        try {
            call();
        } catch (const PreconditionError& e) {
            return e.precondition();
        }
        return "";
    };
    std::mt19937_64 rng(47);
    const Triangulation t6 = sd_pow(6, 1);
    CHECK(precondition_of([&] { theorem_witness(t6, random_nice_labeling(t6, LabelShape::general, rng)); }) ==
          "n prime or 4");

    const Triangulation t3 = sd_pow(3, 1);
    VertexLabeling labels = random_nice_labeling(t3, LabelShape::general, rng);
    VertexLabeling full = labels;
    full[0] = LabelSet{1, 2, 3};
    CHECK(precondition_of([&] { theorem_witness(t3, full); }) == "nonempty proper labels");
    VertexLabeling broken = labels;
    const VertexId m = *t3.find_vertex(pt({q(0), q(1, 2), q(1, 2)}).coords());
    broken[m] = broken[m] == LabelSet{2} ? LabelSet{3} : LabelSet{2};
    CHECK(precondition_of([&] { theorem_witness(t3, broken); }) == "nice labeling");

    std::vector<Point> points{Point::unit(1, 3), Point::unit(2, 3), Point::unit(3, 3), pt({q(0), q(1, 2), q(1, 2)})};
    const Triangulation lopsided = Triangulation::from_simplices(3, points, {{0, 1, 3}, {0, 3, 2}});
    const VertexLabeling any(4, LabelSet{1});
    CHECK(precondition_of([&] { theorem_witness(lopsided, any); }) == "nice triangulation");

    const Triangulation t4 = sd_pow(4, 1);
    VertexLabeling general;
    for (int attempt = 0; attempt < 50; ++attempt) {
        general = random_nice_labeling(t4, LabelShape::general, rng);
        if (!check_restricted_form(t4, general).ok()) break;
    }
    REQUIRE_FALSE(check_restricted_form(t4, general).ok());
    CHECK(precondition_of([&] { theorem_witness(t4, general); }) == "labels J_v or singletons outside J_v");
}

TEST_CASE("nonzero scan") {
    std::mt19937_64 rng(53);
    for (int n : {2, 3, 5}) {
        const Triangulation t = sd_pow(n, n == 5 ? 1 : 2);
        for (int trial = 0; trial < 10; ++trial) {
            const VertexLabeling labels = random_nice_labeling(t, LabelShape::general, rng);
            Rational total(0);
            for (SimplexId k = 0; k < t.simplex_count(); ++k) total += label_det(t, labels, k);
            const Rational scan = nonzero_scan(t, labels);
            CHECK(scan == total);
            CHECK(scan != 0);
            CHECK(nonzero_scan(t, labels, 4) == scan);
        }
    }
    // no claim for n = 6; the scan just has to run
    const Triangulation t6 = sd_pow(6, 1);
    CHECK_NOTHROW(nonzero_scan(t6, random_nice_labeling(t6, LabelShape::general, rng)));
}

TEST_CASE("instance dumps replay by vertex id") {
    std::mt19937_64 rng(59);
    const Triangulation t = sd_pow(3, 2);
    const VertexLabeling labels = random_nice_labeling(t, LabelShape::general, rng);
    const Json dump = instance_to_json(t, labels);
    const auto [replayed, replayed_labels] = replay_instance(Json::parse(dump.dump()));
    CHECK(replayed.simplex_count() == t.simplex_count());
    CHECK(replayed_labels == labels);
    CHECK(nonzero_scan(replayed, replayed_labels) == nonzero_scan(t, labels));

    Json tampered = dump;
    tampered["vertices"][3]["coords"][0] = "1/7";
    CHECK_THROWS_AS(replay_instance(tampered), ArgumentError);
    CHECK_THROWS_AS(replay_instance(Json{{"n", 3}}), ArgumentError);
}

#include <doctest.h>

#include <random>

#include "attainment.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "generators.hpp"

using namespace freespace;
using testgen::square_space;

TEST_CASE("f_xy attains on its own pair when the segment is trivial") {
    MetricSpace square = square_space();
    LipFunction f = build_f_xy(square, 0, 1);
    AttainmentReport report = strongly_attains(f);
    CHECK(report.lip_norm == Rational(1));
    bool found = false;
    for (auto [u, v] : report.attaining_pairs) found |= (u == 0 && v == 1);
    CHECK(found);
    REQUIRE(report.trivial_segment_pair.has_value());
}

TEST_CASE("the distance-to-base function attains on a base pair") {
    MetricSpace square = square_space();
    std::vector<Rational> values;
    for (int t = 0; t < 4; ++t) values.push_back(square.distance(t, 0));
    AttainmentReport report = strongly_attains(LipFunction(square, std::move(values)));
    CHECK(report.lip_norm == Rational(1));
    bool base_pair = false;
    for (auto [u, v] : report.attaining_pairs) base_pair |= (u == 0);
    CHECK(base_pair);
}

TEST_CASE("the zero function is rejected") {
    MetricSpace square = square_space();
    LipFunction zero(square, {Rational(0), Rational(0), Rational(0), Rational(0)});
    CHECK_THROWS_AS((void)strongly_attains(zero), Error);
}

TEST_CASE("random nonzero functions always attain") {
    testgen::Rng rng(6001);
    for (int trial = 0; trial < 40; ++trial) {
        MetricSpace space = testgen::random_space(rng, 6);
        LipFunction f = testgen::random_function(rng, space);
        if (lip_norm(f).norm == 0) continue;
        CHECK_FALSE(strongly_attains(f).attaining_pairs.empty());
    }
}

TEST_CASE("norm attainment passes on samples over random spaces") {
    testgen::Rng rng(6002);
    for (int trial = 0; trial < 6; ++trial) {
        MetricSpace space = testgen::random_space(rng, 5);
        NormAttainmentResult result = verify_na_equals_sna(space, 25, 900 + static_cast<std::uint64_t>(trial));
        CHECK(result.all_passed);
        CHECK_FALSE(result.counterexample.has_value());
        CHECK(result.samples.size() == 25);
        for (const auto& sample : result.samples) {
            // the functional norm is attained at the reported vertex molecule
            CHECK(abs(pair_molecule(sample.function, sample.vertex_molecule.x,
                                    sample.vertex_molecule.y)) == sample.norm);
        }
    }
}

TEST_CASE("f_xy attains its functional norm at its own vertex molecule") {
    MetricSpace square = square_space();
    LipFunction f = build_f_xy(square, 0, 1);  // trivial segment: m_01 is a vertex
    CHECK(lip_norm(f).norm == Rational(1));
    CHECK(pair_molecule(f, 0, 1) == Rational(1));
    bool vertex = false;
    for (const Molecule& m : oracle_extreme_points(square)) vertex |= (m.x == 0 && m.y == 1);
    CHECK(vertex);
}

TEST_CASE("molecules are norming: the vertex maximum equals the Lipschitz norm") {
    testgen::Rng rng(6003);
    for (int trial = 0; trial < 20; ++trial) {
        MetricSpace space = testgen::random_space(rng, 5);
        LipFunction f = testgen::random_function(rng, space);
        Rational norm = lip_norm(f).norm;
        Rational best(0);
        for (int u = 0; u < space.point_count(); ++u)
            for (int v = 0; v < space.point_count(); ++v) {
                if (u == v) continue;
                best = std::max(best, Rational(abs(pair_molecule(f, u, v))));
            }
        CHECK(best == norm);
    }
}

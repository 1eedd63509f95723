#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "extremal.hpp"
#include "generators.hpp"
#include "kr_norm.hpp"

using namespace freespace;
using testgen::square_space;

namespace {

std::set<std::pair<int, int>> as_set(const std::vector<Molecule>& molecules) {
    std::set<std::pair<int, int>> out;
    for (const Molecule& m : molecules) out.insert({m.x, m.y});
    return out;
}

}  // namespace

TEST_CASE("square space: sides are extreme, diagonals are not") {
    MetricSpace square = square_space();
    CHECK(is_extreme(square, 0, 1).status == Status::Proven);
    Verdict diagonal = is_extreme(square, 0, 2);
    CHECK(diagonal.status == Status::Refuted);
    REQUIRE(diagonal.evidence.size() == 1);
    CHECK(diagonal.evidence.front().witness == "a");
}

TEST_CASE("square space oracle finds exactly the eight side molecules") {
    MetricSpace square = square_space();
    auto vertices = as_set(oracle_extreme_points(square));
    std::set<std::pair<int, int>> expected;
    for (auto [x, y] : {std::pair<int, int>{0, 1}, {1, 2}, {2, 3}, {0, 3}}) {
        expected.insert({x, y});
        expected.insert({y, x});
    }
    CHECK(vertices == expected);
}

TEST_CASE("two-point spaces expose both molecules") {
    MetricSpace pair_space({"0", "a"}, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    CHECK(as_set(oracle_extreme_points(pair_space)).size() == 2);
    CHECK(is_exposed_by_fxy(pair_space, 0, 1).status == Status::Proven);
}

TEST_CASE("snowflaked square: all twelve molecules become extreme") {
    MetricSpace flaked = snowflake(square_space(), Rational(1, 2));
    CHECK(oracle_extreme_points(flaked).size() == 12);
    auto rows = classify_all(flaked, ClassifyOptions{});
    for (const auto& row : rows) {
        CHECK(row.extreme.status == Status::Proven);
        CHECK(row.strongly_exposed.status == Status::Proven);
        REQUIRE(row.oracle_extreme.has_value());
        CHECK(*row.oracle_extreme);
    }
}

TEST_CASE("the oracle cap is enforced") {
    testgen::Rng rng(1);
    MetricSpace space = testgen::random_range_space(rng, 6);
    CHECK_THROWS_AS((void)oracle_extreme_points(space, 5), Error);
}

TEST_CASE("oracle equals the segment rule on random spaces") {
    testgen::Rng rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        MetricSpace space = testgen::random_space(rng, 5);
        auto vertices = as_set(oracle_extreme_points(space));
        std::set<std::pair<int, int>> metric_rule;
        for (int x = 0; x < space.point_count(); ++x)
            for (int y = 0; y < space.point_count(); ++y)
                if (x != y && metric_segment(space, x, y).size() == 2) metric_rule.insert({x, y});
        CHECK(vertices == metric_rule);
    }
}

TEST_CASE("square space exposure: sides yes, diagonals no") {
    MetricSpace square = square_space();
    CHECK(is_exposed_by_fxy(square, 0, 1).status == Status::Proven);
    Verdict diagonal = is_exposed_by_fxy(square, 0, 2);
    CHECK(diagonal.status == Status::Refuted);
    // the enumeration sees m_{0a} and m_{ab} as rival maximizers
    std::set<std::string> rivals;
    for (const auto& item : diagonal.evidence) rivals.insert(item.witness);
    CHECK(rivals.count("0|a") == 1);
    CHECK(rivals.count("a|b") == 1);
}

TEST_CASE("finite spaces collapse: denting and strong exposure equal extremality") {
    testgen::Rng rng(97);
    for (int trial = 0; trial < 12; ++trial) {
        MetricSpace space = testgen::random_space(rng, 5);
        auto rows = classify_all(space, ClassifyOptions{});
        for (const auto& row : rows) {
            CHECK(row.extreme.status == row.denting.status);
            CHECK(row.extreme.status == row.strongly_exposed.status);
            REQUIRE(row.oracle_extreme.has_value());
            CHECK(*row.oracle_extreme == (row.extreme.status == Status::Proven));
            if (row.extreme.status == Status::Proven)
                CHECK(row.exposed_by_fxy.status == Status::Proven);
        }
    }
}

TEST_CASE("classification of the square space: eight all-proven, four all-refuted rows") {
    auto rows = classify_all(square_space(), ClassifyOptions{});
    int proven = 0, refuted = 0;
    for (const auto& row : rows) {
        if (row.extreme.status == Status::Proven) {
            ++proven;
            CHECK(row.denting.status == Status::Proven);
            CHECK(row.strongly_exposed.status == Status::Proven);
        } else {
            ++refuted;
            CHECK(row.denting.status == Status::Refuted);
            CHECK(row.strongly_exposed.status == Status::Refuted);
        }
    }
    CHECK(proven == 8);
    CHECK(refuted == 4);
}

TEST_CASE("ag gallery, pair (0,x1): extreme but not denting, not strongly exposed") {
    MetricSpace ag = make_gallery("ag", 20);
    Verdict extreme = is_extreme(ag, 0, 1);
    CHECK(extreme.status == Status::Proven);
    CHECK(extreme.certificate.has_value());

    Verdict denting = is_denting(ag, 0, 1, default_eps_grid());
    CHECK(denting.status == Status::Refuted);
    REQUIRE(!denting.evidence.empty());
    for (const auto& item : denting.evidence) {
        // witnesses z = x_m carry excess 2/m and min-distance 1 + 1/m
        REQUIRE(item.witness.size() > 1);
        long m = std::stol(item.witness.substr(1));
        CHECK(item.lhs - item.rhs == Rational(2) / m);
        CHECK(*item.eps == Rational(1));
    }

    Verdict z = has_property_z(ag, 0, 1, 10);
    CHECK(z.status == Status::Proven);
    CHECK(is_strongly_exposed(ag, 0, 1, 10).status == Status::Refuted);
    // schedule witnesses are x_{2n}
    for (const auto& item : z.evidence) {
        REQUIRE(item.level.has_value());
        CHECK(item.witness == "x" + std::to_string(2 * *item.level));
    }
}

TEST_CASE("tree gallery, pair (xinf,0): denting but not strongly exposed") {
    MetricSpace tree = make_gallery("tree_omega", 40);
    Verdict denting = is_denting(tree, 1, 0, default_eps_grid());
    CHECK(denting.status == Status::Proven);
    // the delta table: eps = 1/2 -> 1/3, 1/4 -> 1/9, 1/8 -> 1/33, 1/16 -> 1/129
    std::map<Rational, Rational> expected{{Rational(1, 2), Rational(1, 3)},
                                          {Rational(1, 4), Rational(1, 9)},
                                          {Rational(1, 8), Rational(1, 33)},
                                          {Rational(1, 16), Rational(1, 129)}};
    for (const auto& item : denting.evidence) {
        if (item.kind == "denting_vacuous") {
            CHECK(*item.eps == Rational(1));  // nothing keeps distance 1 from both ends
            continue;
        }
        REQUIRE(item.eps.has_value());
        REQUIRE(item.delta.has_value());
        auto found = expected.find(*item.eps);
        REQUIRE(found != expected.end());
        CHECK(*item.delta == found->second);
    }
    Verdict z = has_property_z(tree, 1, 0, 10);
    CHECK(z.status == Status::Proven);
    CHECK(is_strongly_exposed(tree, 1, 0, 10).status == Status::Refuted);
    // witnesses follow the m = 2n - 1 schedule (level 1 clamps to x_2)
    for (const auto& item : z.evidence) {
        REQUIRE(item.level.has_value());
        long expected_index = std::max(2 * *item.level - 1, 2L);
        CHECK(item.witness == "x" + std::to_string(expected_index));
    }
    // extreme as well, so this molecule separates denting from strong exposure
    CHECK(is_extreme(tree, 1, 0).status == Status::Proven);
}

TEST_CASE("star gallery: hub pairs collapse, spoke pairs are fully extremal") {
    MetricSpace star = make_gallery("star", 8);
    // (0, n): everything proven
    CHECK(is_extreme(star, 0, 3).status == Status::Proven);
    CHECK(is_denting(star, 0, 3, default_eps_grid()).status == Status::Proven);
    CHECK(is_strongly_exposed(star, 0, 3, 10).status == Status::Proven);
    // (n, m): the base point sits inside the segment
    Verdict extreme = is_extreme(star, 2, 5);
    CHECK(extreme.status == Status::Refuted);
    CHECK(extreme.evidence.front().witness == "0");
    CHECK(is_denting(star, 2, 5, default_eps_grid()).status == Status::Refuted);
    CHECK(is_strongly_exposed(star, 2, 5, 10).status == Status::Refuted);
}

TEST_CASE("nondual gallery: hub molecules are extreme but not denting") {
    MetricSpace nd = make_gallery("nondual", 20);
    for (auto [x, y] : {std::pair<int, int>{0, 1}, {0, 2}, {1, 2}}) {
        CHECK(is_extreme(nd, x, y).status == Status::Proven);
        CHECK(is_denting(nd, x, y, default_eps_grid()).status == Status::Refuted);
        CHECK(is_strongly_exposed(nd, x, y, 10).status == Status::Refuted);
    }
    // hub to a deep integer point: uniform gap, so everything is proven
    CHECK(is_denting(nd, 1, 5, default_eps_grid()).status == Status::Proven);
    CHECK(is_strongly_exposed(nd, 1, 5, 10).status == Status::Proven);
}

TEST_CASE("two_row gallery: every molecule is strongly exposed") {
    MetricSpace rows = make_gallery("two_row", 10);
    auto classified = classify_all(rows, ClassifyOptions{});
    for (const auto& row : classified) {
        CHECK(row.extreme.status == Status::Proven);
        CHECK(row.denting.status == Status::Proven);
        CHECK(row.strongly_exposed.status == Status::Proven);
    }
}

TEST_CASE("gallery classification keeps the verdict chain") {
    for (const char* name : {"ag", "tree_omega", "star", "nondual"}) {
        MetricSpace space = make_gallery(name, 8);
        auto rows = classify_all(space, ClassifyOptions{});
        auto rank = [](Status s) { return s == Status::Proven ? 2 : s == Status::Inconclusive ? 1 : 0; };
        for (const auto& row : rows) {
            CHECK(rank(row.strongly_exposed.status) <= rank(row.denting.status));
            CHECK(rank(row.denting.status) <= rank(row.extreme.status));
            CHECK_FALSE(row.oracle_extreme.has_value());
            CHECK(row.exposed_by_fxy.status == Status::Inconclusive);
        }
    }
}

TEST_CASE("reported denting moduli satisfy the eps-delta implication verbatim") {
    // semantic check, independent of how the table was computed: for every
    // reported (eps, delta) and every z, (1-delta)(d(x,z)+d(z,y)) < d(x,y)
    // forces min(d(x,z),d(y,z)) < eps
    testgen::Rng rng(733);
    auto check_table = [](const MetricSpace& space, int x, int y, const Verdict& verdict) {
        for (const auto& item : verdict.evidence) {
            REQUIRE(item.eps.has_value());
            REQUIRE(item.delta.has_value());
            CHECK(*item.delta > 0);
            for (int z = 0; z < space.point_count(); ++z) {
                if (z == x || z == y) continue;
                Rational sum = space.distance(x, z) + space.distance(z, y);
                if ((1 - *item.delta) * sum < space.distance(x, y))
                    CHECK(min_distance(space, x, y, z) < *item.eps);
            }
        }
    };
    for (int trial = 0; trial < 15; ++trial) {
        MetricSpace space = testgen::random_space(rng, 6);
        for (int x = 0; x < space.point_count(); ++x)
            for (int y = x + 1; y < space.point_count(); ++y) {
                if (metric_segment(space, x, y).size() != 2) continue;
                Verdict verdict = is_denting(space, x, y, default_eps_grid());
                REQUIRE(verdict.status == Status::Proven);
                check_table(space, x, y, verdict);
            }
    }
    // gallery tables cover the truncation the same way
    MetricSpace tree = make_gallery("tree_omega", 30);
    check_table(tree, 1, 0, is_denting(tree, 1, 0, default_eps_grid()));
    MetricSpace star = make_gallery("star", 12);
    check_table(star, 0, 3, is_denting(star, 0, 3, default_eps_grid()));
}

TEST_CASE("deep truncations keep every certificate honest") {
    for (const char* name : {"ag", "tree_omega", "star", "nondual", "two_row"}) {
        MetricSpace space = make_gallery(name, 200);
        const int last = space.point_count() - 1;
        // constructing a certificate validates its closed forms against the
        // whole truncation; cover each pair kind
        for (auto [x, y] : {std::pair<int, int>{0, 1}, {0, 2}, {1, 2}, {0, last}, {1, last},
                            {2, last}, {last - 1, last}, {5, last}})
            CHECK(tail_certificate(space, x, y).has_value());
    }
}

TEST_CASE("property (Z) witnesses verify their inequality on finite spaces") {
    MetricSpace square = square_space();
    Verdict z = has_property_z(square, 0, 2, 6);  // nontrivial segment
    CHECK(z.status == Status::Proven);
    CHECK(z.evidence.size() == 6);
    for (const auto& item : z.evidence) CHECK(evidence_relation_holds(item));
    Verdict no_z = has_property_z(square, 0, 1, 6);  // trivial segment
    CHECK(no_z.status == Status::Refuted);
    for (const auto& item : no_z.evidence) CHECK(evidence_relation_holds(item));
}

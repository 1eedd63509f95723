#include <doctest.h>

#include "errors.hpp"
#include "gallery.hpp"

using namespace freespace;

namespace {

Rational inv(long m) { return Rational(1, m); }

}  // namespace

TEST_CASE("ag gallery distances match the closed forms") {
    MetricSpace ag = make_gallery("ag", 8);
    REQUIRE(ag.point_count() == 9);
    CHECK(ag.label(0) == "0");
    CHECK(ag.label(1) == "x1");
    CHECK(ag.distance(0, 1) == Rational(2));
    for (int n = 2; n <= 8; ++n) {
        CHECK(ag.distance(0, n) == 1 + inv(n));
        CHECK(ag.distance(1, n) == 1 + inv(n));
    }
    CHECK(ag.distance(3, 5) == 1 + inv(3));  // max(1+1/3, 1+1/5)
    CHECK(validate(ag).empty());
}

TEST_CASE("tree_omega distances match the real-tree path lengths") {
    MetricSpace tree = make_gallery("tree_omega", 7);
    REQUIRE(tree.point_count() == 8);
    CHECK(tree.label(1) == "xinf");
    CHECK(tree.distance(0, 1) == Rational(1));
    for (int m = 2; m <= 7; ++m) {
        CHECK(tree.distance(0, m) == (1 - inv(m)) + inv(m) * inv(m));
        CHECK(tree.distance(1, m) == inv(m) + inv(m) * inv(m));
    }
    CHECK(tree.distance(2, 5) == (inv(2) - inv(5)) + inv(2) * inv(2) + inv(5) * inv(5));
    CHECK(validate(tree).empty());
}

TEST_CASE("star, nondual and two_row match their printed distance lists") {
    MetricSpace star = make_gallery("star", 5);
    CHECK(star.distance(0, 3) == Rational(1));
    CHECK(star.distance(2, 4) == Rational(2));
    CHECK(validate(star).empty());

    MetricSpace nd = make_gallery("nondual", 6);
    REQUIRE(nd.point_count() == 7);
    CHECK(nd.label(1) == "a");
    CHECK(nd.label(2) == "b");
    CHECK(nd.label(3) == "1");
    CHECK(nd.distance(0, 1) == Rational(2));
    CHECK(nd.distance(1, 2) == Rational(2));
    for (int i = 3; i < 7; ++i) {
        long m = i - 2;
        CHECK(nd.distance(0, i) == 1 + inv(m));
        CHECK(nd.distance(1, i) == 1 + inv(m));
        CHECK(nd.distance(2, i) == 1 + inv(m));
    }
    CHECK(nd.distance(3, 5) == Rational(1));
    CHECK(validate(nd).empty());

    MetricSpace rows = make_gallery("two_row", 6);
    CHECK(rows.label(0) == "0");
    CHECK(rows.label(1) == "b1");
    CHECK(rows.label(2) == "a2");
    CHECK(rows.distance(0, 2) == Rational(1));  // same row
    CHECK(rows.distance(0, 1) == Rational(2));  // across rows
    CHECK(rows.distance(1, 3) == Rational(1));  // b1, b2
    CHECK(validate(rows).empty());
}

TEST_CASE("unknown names and tiny depths are rejected") {
    CHECK_THROWS_AS((void)make_gallery("moebius", 5), Error);
    CHECK_THROWS_AS((void)make_gallery("ag", 2), Error);
}

TEST_CASE("truncation coherence: depth N is the restriction of depth N+1") {
    for (const char* name : {"ag", "tree_omega", "star", "nondual", "two_row"}) {
        MetricSpace small = make_gallery(name, 6);
        MetricSpace large = make_gallery(name, 7);
        for (int i = 0; i < small.point_count(); ++i) {
            CHECK(small.label(i) == large.label(i));
            for (int j = 0; j < small.point_count(); ++j)
                CHECK(small.distance(i, j) == large.distance(i, j));
        }
    }
}

TEST_CASE("certificates exist and validate for every pair of every family") {
    for (const char* name : {"ag", "tree_omega", "star", "nondual", "two_row"}) {
        MetricSpace space = make_gallery(name, 12);
        for (int x = 0; x < space.point_count(); ++x)
            for (int y = x + 1; y < space.point_count(); ++y) {
                auto cert = tail_certificate(space, x, y);
                REQUIRE(cert.has_value());
                CHECK(cert->tail_excess_positive());
            }
    }
}

TEST_CASE("certificate predictions survive a deep truncation") {
    // construction validates prediction == matrix for every modeled point
    for (const char* name : {"ag", "tree_omega", "star", "nondual", "two_row"}) {
        MetricSpace space = make_gallery(name, 60);
        CHECK(tail_certificate(space, 0, 1).has_value());
        CHECK(tail_certificate(space, 1, space.point_count() - 1).has_value());
        CHECK(tail_certificate(space, space.point_count() - 2, space.point_count() - 1).has_value());
    }
}

TEST_CASE("ag pair (0,x1): the featured certificate behaviour") {
    MetricSpace ag = make_gallery("ag", 10);
    TailCertificate cert(ag, 0, 1);
    CHECK(cert.tail_excess_positive());
    CHECK_FALSE(cert.positive_gap_all_eps());
    CHECK(cert.denting_refutation_eps() == Rational(1));
    CHECK_FALSE(cert.z_fail_threshold().has_value());
    // schedule m(n) = 2n
    CHECK(cert.z_witness_index(1) == 2);
    CHECK(cert.z_witness_index(5) == 10);
    // below eps = 1 every tail point qualifies and the excess infimum is 0
    CHECK(cert.excess_lower_bound(Rational(1)) == Rational(0));
    // eps = 1 + 1/20: qualifying tail indices end at 20, bound 2/20
    CHECK(cert.excess_lower_bound(Rational(21, 20)) == Rational(1, 10));
    // beyond 1 + 1/11 no tail point qualifies
    CHECK_FALSE(cert.excess_lower_bound(Rational(13, 11)).has_value());
}

TEST_CASE("tree pair (xinf,0): qualifying tail is finite for every eps") {
    MetricSpace tree = make_gallery("tree_omega", 10);
    TailCertificate cert(tree, 1, 0);
    CHECK(cert.positive_gap_all_eps());
    CHECK_FALSE(cert.z_fail_threshold().has_value());
    CHECK(cert.z_witness_index(1) == 2);
    CHECK(cert.z_witness_index(7) == 13);
    // eps = 1/16: indices up to 16 qualify, the tail part is 11..16, bound 2/256
    CHECK(cert.excess_lower_bound(Rational(1, 16)) == Rational(1, 128));
    // eps = 1/2: only index 2 qualifies, which is inside the truncation
    CHECK_FALSE(cert.excess_lower_bound(Rational(1, 2)).has_value());
}

TEST_CASE("two_row pairs have a uniform tail gap") {
    MetricSpace rows = make_gallery("two_row", 8);
    TailCertificate same(rows, 0, 2);
    CHECK(same.positive_gap_all_eps());
    CHECK(same.excess_lower_bound(Rational(1)) == Rational(1));
    CHECK(same.excess_lower_bound(Rational(3, 2)) == Rational(3));
    TailCertificate cross(rows, 0, 1);
    CHECK(cross.excess_lower_bound(Rational(1)) == Rational(1));
    CHECK(cross.z_fail_threshold() == Rational(1));
}

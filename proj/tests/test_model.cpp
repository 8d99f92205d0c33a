#include "symquot/errors.hpp"
#include "symquot/model.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace symquot;

namespace {

SphereProductModel diagonal(int n, const Rational& shift = 0) {
    SphereProductModel m;
    m.radii.assign(static_cast<std::size_t>(n), 1);
    m.speeds.assign(static_cast<std::size_t>(n), 1);
    m.shift = shift;
    return m;
}

} // namespace

TEST_CASE("model validation") {
    CHECK_THROWS_AS(enumerate_fixed_points(SphereProductModel{}), ValidationError);
    SphereProductModel zero_speed = diagonal(2);
    zero_speed.speeds[1] = 0;
    CHECK_THROWS_AS(enumerate_fixed_points(zero_speed), ValidationError);
    SphereProductModel bad_radius = diagonal(2);
    bad_radius.radii[0] = -1;
    CHECK_THROWS_AS(enumerate_fixed_points(bad_radius), ValidationError);
    CHECK_THROWS_AS(projective_fixed_components(WeightedProjectiveModel{{1, 0}}),
                    ValidationError);
}

TEST_CASE("two diagonal spheres: values and zero-level weights") {
    const auto points = enumerate_fixed_points(diagonal(2));
    REQUIRE(points.size() == 4);
    std::multiset<std::string> values;
    for (const auto& f : points)
        values.insert(rational_str(f.value));
    CHECK(values == std::multiset<std::string>{"-2", "0", "0", "2"});
    for (const auto& f : points)
        if (f.value == 0)
            CHECK(f.weights == std::vector<int>{-1, 1});
}

TEST_CASE("single sphere") {
    const auto points = enumerate_fixed_points(diagonal(1));
    REQUIRE(points.size() == 2);
    CHECK(points[0].value == -1); // south pole first in label order
    CHECK(points[0].weights == std::vector<int>{1});
    CHECK(points[1].value == 1);
    CHECK(points[1].weights == std::vector<int>{-1});
    CHECK(is_regular(diagonal(1), 0) == Regularity::Regular);
}

TEST_CASE("four diagonal spheres: six middle points with balanced weights") {
    int middle = 0;
    for (const auto& f : enumerate_fixed_points(diagonal(4)))
        if (f.value == 0) {
            ++middle;
            CHECK(f.ell_plus == 2);
            CHECK(f.ell_minus == 2);
        }
    CHECK(middle == 6);
}

TEST_CASE("critical values") {
    const auto four = critical_values(diagonal(4));
    REQUIRE(four.size() == 5);
    const std::vector<std::string> expected_values{"-4", "-2", "0", "2", "4"};
    const std::vector<std::size_t> expected_counts{1, 4, 6, 4, 1};
    for (std::size_t i = 0; i < four.size(); ++i) {
        CHECK(rational_str(four[i].value) == expected_values[i]);
        CHECK(four[i].fixed_points.size() == expected_counts[i]);
    }

    const auto three = critical_values(diagonal(3, 1));
    REQUIRE(three.size() == 4);
    CHECK(rational_str(three[0].value) == "-2");
    CHECK(rational_str(three[1].value) == "0");
    CHECK(rational_str(three[2].value) == "2");
    CHECK(rational_str(three[3].value) == "4");

    SphereProductModel mixed = diagonal(2);
    mixed.speeds = {1, 2};
    const auto vals = critical_values(mixed);
    REQUIRE(vals.size() == 4);
    CHECK(rational_str(vals[0].value) == "-3");
    CHECK(rational_str(vals[1].value) == "-1");
    CHECK(rational_str(vals[2].value) == "1");
    CHECK(rational_str(vals[3].value) == "3");
}

TEST_CASE("regularity classification") {
    const auto m = diagonal(2);
    CHECK(is_regular(m, 0) == Regularity::Critical);
    CHECK(is_regular(m, 1) == Regularity::Regular);
    CHECK(is_regular(m, 5) == Regularity::OutsideImage);
    CHECK(is_regular(m, -5) == Regularity::OutsideImage);
    CHECK(is_regular(m, 2) == Regularity::Critical); // boundary of the image
    CHECK(is_regular(m, Rational(-1, 2)) == Regularity::Regular);
}

TEST_CASE("is_regular marks exactly the critical values as critical") {
    oracle::ModelGen gen(101);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = gen.model(5);
        std::set<Rational> critical;
        for (const auto& cl : critical_values(m))
            critical.insert(cl.value);
        for (const auto& cl : critical_values(m))
            CHECK(is_regular(m, cl.value) == Regularity::Critical);
        // midpoints of consecutive critical values are regular
        std::vector<Rational> sorted(critical.begin(), critical.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            const Rational mid = (sorted[i] + sorted[i + 1]) / 2;
            CHECK(is_regular(m, mid) == Regularity::Regular);
        }
    }
}

TEST_CASE("fixed point counts and weight splits") {
    oracle::ModelGen gen(7);
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = gen.model(6);
        const auto points = enumerate_fixed_points(m);
        CHECK(points.size() == (std::size_t{1} << m.radii.size()));
        for (const auto& f : points) {
            CHECK(f.ell_plus + f.ell_minus == m.size());
            CHECK(f.isolated());
        }
    }
}

TEST_CASE("negating the momentum map negates values and swaps weight signs") {
    oracle::ModelGen gen(99);
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = gen.model(6);
        SphereProductModel neg = m;
        for (auto& a : neg.speeds)
            a = -a;
        neg.shift = -neg.shift;
        const auto points = enumerate_fixed_points(m);
        const auto neg_points = enumerate_fixed_points(neg);
        REQUIRE(points.size() == neg_points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            CHECK(points[i].label == neg_points[i].label);
            CHECK(points[i].value == -neg_points[i].value);
            CHECK(points[i].ell_plus == neg_points[i].ell_minus);
            CHECK(points[i].ell_minus == neg_points[i].ell_plus);
        }
    }
}

TEST_CASE("projective fixed components") {
    SUBCASE("balanced weights (1,1,-1,-1)") {
        const auto comps = projective_fixed_components(WeightedProjectiveModel{{1, 1, -1, -1}});
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].value == -1);
        CHECK(comps[0].component_poincare == gs(2));
        CHECK(comps[0].weights == std::vector<int>{2, 2});
        CHECK(comps[1].value == 1);
        CHECK(comps[1].component_poincare == gs(2));
        CHECK(comps[1].weights == std::vector<int>{-2, -2});
    }
    SUBCASE("single weight (5)") {
        const auto comps = projective_fixed_components(WeightedProjectiveModel{{5}});
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].value == 5);
        CHECK(comps[0].component_poincare == PoincarePolynomial::unit());
        CHECK(comps[0].weights.empty());
    }
    SUBCASE("distinct weights (1,2,3)") {
        const auto comps = projective_fixed_components(WeightedProjectiveModel{{1, 2, 3}});
        REQUIRE(comps.size() == 3);
        CHECK(comps[0].weights == std::vector<int>{1, 2});
        CHECK(comps[1].weights == std::vector<int>{-1, 1});
        CHECK(comps[2].weights == std::vector<int>{-2, -1});
        for (const auto& c : comps)
            CHECK(c.isolated());
    }
}

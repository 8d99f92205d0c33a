#include "symquot/errors.hpp"
#include "symquot/polygon.hpp"
#include "symquot/wallcross.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace symquot;

namespace {

PolygonSpec spec(std::vector<Rational> lengths) { return PolygonSpec{std::move(lengths)}; }

} // namespace

TEST_CASE("polygon spec validation") {
    CHECK_THROWS_AS(apol_model(spec({1, 1})), ValidationError);
    CHECK_THROWS_AS(apol_model(spec({1, -1, 1})), ValidationError);
}

TEST_CASE("apol model translation") {
    const auto [m, level] = apol_model(spec({1, 1, 1, 1, 1}));
    CHECK(m.radii.size() == 4);
    CHECK(m.speeds == std::vector<int>{1, 1, 1, 1});
    CHECK(m.shift == 0);
    CHECK(level == 1);
    CHECK(is_regular(m, level) == Regularity::Regular);

    // three unit sides reduced at 1: a sign sum hits the level
    const auto [m2, level2] = apol_model(spec({1, 1, 1, 1}));
    CHECK(is_regular(m2, level2) == Regularity::Critical);

    // sums of +-2 +-1 +-1 never reach 3
    const auto [m3, level3] = apol_model(spec({2, 1, 1, 3}));
    CHECK(is_regular(m3, level3) == Regularity::Regular);
}

TEST_CASE("regular pentagon-type space") {
    const auto report = apol_report(spec({1, 1, 1, 1, 1}));
    CHECK(report.verdict == PolygonVerdict::Regular);
    CHECK(report.betti.dims(6) == std::vector<std::int64_t>{1, 0, 5, 0, 5, 0, 1});
    CHECK(report.poincare_duality);
    CHECK(report.betti_provenance == BettiProvenance::Regular);
    CHECK_FALSE(report.les.has_value());
}

TEST_CASE("singular abelian polygon space with five unit sides") {
    // sums of five +-1 are odd, so reducing at 1 is singular
    const auto report = apol_report(spec({1, 1, 1, 1, 1, 1}));
    CHECK(report.verdict == PolygonVerdict::Singular);
    REQUIRE(report.les.has_value());
    REQUIRE(report.collapse.has_value());
    CHECK(report.betti.coeff(0) == 1);
    CHECK(report.betti == report.collapse->dims);
    CHECK_FALSE(report.singular_points.empty());
    for (const auto& s : report.singular_points) {
        CHECK(s.link.ell_plus >= 1);
        CHECK(s.link.ell_minus >= 1);
        CHECK(s.link_dims.coeff(0) == 1);
    }
    REQUIRE(report.kirwan.has_value());
}

TEST_CASE("degenerate and empty levels") {
    const auto point = apol_report(spec({1, 1, 1, 3}));
    CHECK(point.verdict == PolygonVerdict::DegeneratePoint);
    CHECK(point.betti == PoincarePolynomial::unit());

    const auto empty = apol_report(spec({1, 1, 1, 4}));
    CHECK(empty.verdict == PolygonVerdict::Empty);
    CHECK(empty.betti.is_zero());
}

TEST_CASE("permuting the sides changes nothing") {
    oracle::ModelGen gen(313);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> lengths;
        const int sides = 3 + static_cast<int>(gen.rng() % 4);
        for (int i = 0; i < sides; ++i)
            lengths.push_back(gen.positive_rational());
        lengths.push_back(gen.positive_rational()); // level
        const auto base = apol_report(spec(lengths));

        std::vector<Rational> shuffled(lengths.begin(), lengths.end() - 1);
        std::shuffle(shuffled.begin(), shuffled.end(), gen.rng);
        shuffled.push_back(lengths.back());
        const auto permuted = apol_report(spec(shuffled));
        CHECK(base.verdict == permuted.verdict);
        CHECK(base.betti == permuted.betti);
    }
}

TEST_CASE("positive scaling changes nothing") {
    oracle::ModelGen gen(717);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> lengths;
        const int sides = 3 + static_cast<int>(gen.rng() % 4);
        for (int i = 0; i <= sides; ++i)
            lengths.push_back(gen.positive_rational());
        const auto base = apol_report(spec(lengths));

        const Rational factor = gen.positive_rational();
        std::vector<Rational> scaled;
        for (const auto& r : lengths)
            scaled.push_back(r * factor);
        const auto rescaled = apol_report(spec(scaled));
        CHECK(base.verdict == rescaled.verdict);
        CHECK(base.betti == rescaled.betti);
    }
}

TEST_CASE("regular spaces satisfy duality, singular ones may fail it") {
    oracle::ModelGen gen(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> lengths;
        const int sides = 3 + static_cast<int>(gen.rng() % 4);
        for (int i = 0; i <= sides; ++i)
            lengths.push_back(gen.positive_rational());
        const auto report = apol_report(spec(lengths));
        if (report.verdict == PolygonVerdict::Regular)
            CHECK(report.poincare_duality);
    }
    // the six-unit-sides space has odd cohomology in one degree only: no duality
    const auto singular = apol_report(spec({1, 1, 1, 1, 1, 1}));
    CHECK(singular.verdict == PolygonVerdict::Singular);
}

#include "symquot/desing.hpp"
#include "symquot/errors.hpp"
#include "symquot/les.hpp"
#include "symquot/wallcross.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace symquot;

namespace {

SphereProductModel diagonal(int n, const Rational& shift = 0) {
    SphereProductModel m;
    m.radii.assign(static_cast<std::size_t>(n), 1);
    m.speeds.assign(static_cast<std::size_t>(n), 1);
    m.shift = shift;
    return m;
}

// Gysin-sequence reference for the link, using the independent elimination:
// dimensions of kernel and cokernel of multiplication by u+v on
// R[u,v]/(u^a, v^b).
PoincarePolynomial link_oracle(int a, int b) {
    auto slice = [&](int m) {
        std::vector<std::pair<int, int>> basis;
        for (int i = 0; i <= m; ++i)
            if (i < a && m - i < b)
                basis.emplace_back(i, m - i);
        return basis;
    };
    auto euler_rank = [&](int m) {
        const auto dom = slice(m), cod = slice(m + 1);
        if (dom.empty() || cod.empty())
            return std::size_t{0};
        std::vector<std::vector<Rational>> rows(dom.size(),
                                                std::vector<Rational>(cod.size()));
        for (std::size_t r = 0; r < dom.size(); ++r)
            for (std::size_t c = 0; c < cod.size(); ++c) {
                const auto [i, j] = dom[r];
                if ((cod[c].first == i + 1 && cod[c].second == j) ||
                    (cod[c].first == i && cod[c].second == j + 1))
                    rows[r][c] = 1;
            }
        return oracle::gauss_rank(rows);
    };
    PoincarePolynomial p;
    const int top = 2 * (a + b) - 3;
    for (int m = 0; 2 * m <= top; ++m) {
        const std::int64_t dim = static_cast<std::int64_t>(slice(m).size());
        const std::int64_t below = m == 0 ? 0 : static_cast<std::int64_t>(euler_rank(m - 1));
        p.add_term(2 * m, dim - below);
        if (2 * m + 1 <= top)
            p.add_term(2 * m + 1, dim - static_cast<std::int64_t>(euler_rank(m)));
    }
    return p;
}

} // namespace

TEST_CASE("link cohomology frozen values") {
    CHECK(link_cohomology(LinkData{1, 1}).str() == "1 + t");
    CHECK(link_cohomology(LinkData{2, 2}).str() == "1 + t^2 + t^3 + t^5");
    CHECK(link_cohomology(LinkData{2, 1}).str() == "1 + t^3");
    CHECK(link_cohomology(LinkData{1, 2}).str() == "1 + t^3");
    CHECK_THROWS_AS(link_cohomology(LinkData{0, 1}), ValidationError);
}

TEST_CASE("link cohomology: duality, connectivity and oracle agreement") {
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            const auto p = link_cohomology(LinkData{a, b});
            const int top = 2 * (a + b) - 3;
            CHECK(p.coeff(0) == 1);
            CHECK(p.palindromic(top));
            CHECK(p == link_oracle(a, b));
        }
    }
}

TEST_CASE("collapse route on the named models") {
    CHECK(singular_betti_collapse(diagonal(4)).dims.dims(6) ==
          std::vector<std::int64_t>{1, 0, 1, 2, 5, 0, 1});
    CHECK(singular_betti_collapse(diagonal(3, 1)).dims.dims(4) ==
          std::vector<std::int64_t>{1, 0, 1, 0, 1});
    CHECK(singular_betti_collapse(diagonal(2)).dims.dims(2) ==
          std::vector<std::int64_t>{1, 0, 1});
    CHECK_THROWS_AS(singular_betti_collapse(diagonal(3)), ValidationError);
}

TEST_CASE("collapse provenance and connectivity") {
    const auto table = singular_betti_collapse(diagonal(4));
    CHECK(table.dims.coeff(0) == 1);
    for (const auto& [degree, prov] : table.provenance)
        CHECK(prov == BettiProvenance::CollapseRoute);
}

TEST_CASE("les assembly: two spheres, everything exact") {
    const auto report = les_assemble(diagonal(2));
    CHECK_FALSE(report.level_regular);
    CHECK(report.cokernel.is_zero());
    for (const auto& row : report.rows) {
        CHECK(row.status == DegreeStatus::Exact);
        REQUIRE(row.m0.has_value());
        CHECK(*row.m0 == row.desing_dim);
    }
    CHECK(report.splitting_hypothesis_holds);
    CHECK(report.solved_dims()->dims(2) == std::vector<std::int64_t>{1, 0, 1});
}

TEST_CASE("les assembly: three spheres split") {
    const auto report = les_assemble(diagonal(3, 1));
    CHECK(report.desing.dims(4) == std::vector<std::int64_t>{1, 0, 4, 0, 1});
    CHECK(report.cokernel.str() == "3 t^2");
    CHECK(report.splitting_hypothesis_holds);
    CHECK(report.rows[2].status == DegreeStatus::SplitEven);
    CHECK(report.solved_dims()->dims(4) == std::vector<std::int64_t>{1, 0, 1, 0, 1});
    CHECK(report.euler_consistent.has_value());
    CHECK(*report.euler_consistent);
}

TEST_CASE("les assembly: four spheres do not split") {
    const auto report = les_assemble(diagonal(4));
    CHECK_FALSE(report.splitting_hypothesis_holds);
    CHECK(report.desing.coeff(2) == 11);
    CHECK(report.cokernel.coeff(2) == 12);
    // exactness alone already forces nontrivial odd cohomology
    CHECK(report.rows[3].m0_lower >= 1);
    REQUIRE(report.rows[2].m0.has_value());
    REQUIRE(report.rows[3].m0.has_value());
    CHECK(*report.rows[3].m0 == *report.rows[2].m0 + 1);
    CHECK(report.rows[2].status == DegreeStatus::Underdetermined);
    CHECK(report.rows[2].assumption_used);
    CHECK(*report.euler_consistent);
}

TEST_CASE("solved betti tables credit the right route") {
    const auto three = solved_betti(les_assemble(diagonal(3, 1)));
    CHECK(three.provenance.at(0) == BettiProvenance::SplitRoute);
    CHECK(three.provenance.at(2) == BettiProvenance::SplitRoute);
    const auto four = solved_betti(les_assemble(diagonal(4)));
    CHECK(four.provenance.at(2) == BettiProvenance::CollapseRoute);
    CHECK(four.provenance.at(3) == BettiProvenance::CollapseRoute);
    CHECK(four.provenance.at(0) == BettiProvenance::SplitRoute);
    CHECK(four.dims == singular_betti_collapse(diagonal(4)).dims);
    const auto regular = solved_betti(les_assemble(diagonal(3)));
    CHECK(regular.provenance.at(0) == BettiProvenance::Regular);
}

TEST_CASE("les assembly at a regular level is trivial") {
    const auto report = les_assemble(diagonal(3));
    CHECK(report.level_regular);
    for (const auto& row : report.rows) {
        CHECK(row.status == DegreeStatus::Exact);
        CHECK(row.cokernel_dim == 0);
    }
    CHECK(*report.solved_dims() == reduced_poincare(diagonal(3), 0));
}

TEST_CASE("les segments are exact and bounded on random singular models") {
    oracle::ModelGen gen(555);
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = gen.singular_model(6);
        const auto report = les_assemble(m);
        const auto dims = report.solved_dims();
        REQUIRE(dims.has_value());
        CHECK(dims->coeff(0) == 1);
        const int top = 2 * m.size() - 2;
        for (int degree = 0; degree <= top; degree += 2) {
            const std::int64_t a = dims->coeff(degree);
            const std::int64_t b = report.desing.coeff(degree);
            const std::int64_t c = report.cokernel.coeff(degree);
            const std::int64_t d = degree + 1 <= top ? dims->coeff(degree + 1) : 0;
            CHECK(a <= b);            // the quotient injects into the resolution
            CHECK(b - a <= c);        // and the cokernel absorbs the rest
            CHECK(a - b + c - d == 0);
        }
        if (report.splitting_hypothesis_holds)
            for (const auto& row : report.rows)
                CHECK(row.desing_dim == *row.m0 + row.cokernel_dim);
        CHECK(*report.euler_consistent);
    }
}

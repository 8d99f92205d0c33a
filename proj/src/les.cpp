#include "symquot/les.hpp"

#include "symquot/desing.hpp"
#include "symquot/equiv.hpp"
#include "symquot/errors.hpp"
#include "symquot/matrix.hpp"
#include "symquot/wallcross.hpp"

#include <string>

namespace symquot {

namespace {

// Multiplication by u + v from the degree-2m slice to the degree-2(m+1)
// slice of R[u,v]/(u^a, v^b), in the monomial basis {u^i v^{m-i}}.
RationalMatrix euler_multiplication(int a, int b, int m) {
    std::vector<std::pair<int, int>> dom, cod;
    for (int i = 0; i <= m; ++i)
        if (i < a && m - i < b)
            dom.emplace_back(i, m - i);
    for (int i = 0; i <= m + 1; ++i)
        if (i < a && m + 1 - i < b)
            cod.emplace_back(i, m + 1 - i);
    RationalMatrix mat(dom.size(), cod.size());
    for (std::size_t r = 0; r < dom.size(); ++r) {
        for (std::size_t c = 0; c < cod.size(); ++c) {
            const bool from_u = cod[c].first == dom[r].first + 1 && cod[c].second == dom[r].second;
            const bool from_v = cod[c].first == dom[r].first && cod[c].second == dom[r].second + 1;
            if (from_u || from_v)
                mat.at(r, c) = 1;
        }
    }
    return mat;
}

std::int64_t base_slice_dim(int a, int b, int m) {
    std::int64_t d = 0;
    for (int i = 0; i <= m; ++i)
        if (i < a && m - i < b)
            ++d;
    return d;
}

} // namespace

PoincarePolynomial link_cohomology(const LinkData& l) {
    if (l.ell_plus < 1 || l.ell_minus < 1)
        throw ValidationError("link data needs ell_plus, ell_minus >= 1");
    const int a = l.ell_plus;
    const int b = l.ell_minus;
    const int top = 2 * (a + b) - 3;
    PoincarePolynomial p;
    for (int m = 0; 2 * m <= top; ++m) {
        const std::int64_t rank_in =
            m == 0 ? 0 : static_cast<std::int64_t>(euler_multiplication(a, b, m - 1).rank());
        const std::int64_t rank_out =
            static_cast<std::int64_t>(euler_multiplication(a, b, m).rank());
        // pulled-back classes: cokernel of the Euler multiplication below
        p.add_term(2 * m, base_slice_dim(a, b, m) - rank_in);
        // classes integrating down the fiber: kernel of the one above
        if (2 * m + 1 <= top)
            p.add_term(2 * m + 1, base_slice_dim(a, b, m) - rank_out);
    }
    return p;
}

namespace {

struct Segment {
    // 0 -> A -> B -> C -> D -> 0 in degrees (2k, 2k, 2k, 2k+1)
    std::int64_t desing = 0;   // B
    std::int64_t cokernel = 0; // C
};

void verify_segment(int degree, std::int64_t a, std::int64_t b, std::int64_t c,
                    std::int64_t d) {
    const bool ok = a >= 0 && d >= 0 && a <= b && b - a <= c && a - b + c - d == 0;
    if (!ok)
        throw InconsistencyError(
            "long exact sequence fails at degree " + std::to_string(degree) + ": 0 -> " +
            std::to_string(a) + " -> " + std::to_string(b) + " -> " + std::to_string(c) +
            " -> " + std::to_string(d) + " -> 0");
}

std::vector<FixedPointData> singular_level_points(const SphereProductModel& m) {
    std::vector<FixedPointData> out;
    for (auto& f : enumerate_fixed_points(m))
        if (f.value == 0)
            out.push_back(std::move(f));
    return out;
}

} // namespace

BettiTable singular_betti_collapse(const SphereProductModel& m) {
    m.validate();
    if (is_regular(m, 0) != Regularity::Critical)
        throw ValidationError("level 0 is regular; use the wall-crossing chamber value");

    const auto points = singular_level_points(m);
    for (const auto& f : points)
        if (!f.two_sided())
            throw OneSidedWeightsError("one-sided fixed point in the zero level");

    const int n = m.size();
    const int top = 2 * n - 2;

    // chamber immediately below the singular level
    PoincarePolynomial chamber;
    for (const auto& f : enumerate_fixed_points(m))
        if (f.value < 0)
            chamber += crossing_delta(f);
    if (!chamber.nonnegative())
        throw InconsistencyError("negative Betti number in the chamber below the level");

    BettiTable table;
    table.dims.add_term(0, 1); // momentum fibers are connected
    table.provenance[0] = BettiProvenance::CollapseRoute;
    table.provenance[1] = BettiProvenance::CollapseRoute;
    for (int k = 1; 2 * k <= top; ++k) {
        const std::int64_t rho = static_cast<std::int64_t>(restriction_rank(m, k));
        std::int64_t cones = 0; // collapsed projective spaces with cohomology in degree 2k
        for (const auto& f : points)
            if (f.ell_minus >= k + 1)
                ++cones;
        const std::int64_t even = chamber.coeff(2 * k) - rho;
        const std::int64_t odd = cones - rho;
        if (even < 0 || odd < 0)
            throw InconsistencyError("collapse route produced a negative dimension in degree " +
                                     std::to_string(2 * k));
        table.dims.add_term(2 * k, even);
        table.provenance[2 * k] = BettiProvenance::CollapseRoute;
        if (2 * k + 1 <= top) {
            table.dims.add_term(2 * k + 1, odd);
            table.provenance[2 * k + 1] = BettiProvenance::CollapseRoute;
        } else if (odd != 0) {
            throw InconsistencyError("collapse route produced cohomology above the top degree");
        }
    }

    // cross-check against the exact sequence of the desingularization
    const PoincarePolynomial desing = desing_poincare(m);
    PoincarePolynomial coker;
    for (const auto& f : points)
        coker += cokernel_term(f).graded_dims;
    for (int degree = 0; degree <= top; degree += 2) {
        const std::int64_t d_next = degree + 1 <= top ? table.dims.coeff(degree + 1) : 0;
        verify_segment(degree, table.dims.coeff(degree), desing.coeff(degree),
                       coker.coeff(degree), d_next);
    }
    return table;
}

BettiTable solved_betti(const LesReport& report) {
    BettiTable table;
    for (const auto& row : report.rows) {
        if (!row.m0)
            throw InconsistencyError("report is not fully solved");
        table.dims.add_term(row.degree, *row.m0);
        if (report.level_regular)
            table.provenance[row.degree] = BettiProvenance::Regular;
        else if (row.status == DegreeStatus::Underdetermined)
            table.provenance[row.degree] = BettiProvenance::CollapseRoute;
        else
            table.provenance[row.degree] = BettiProvenance::SplitRoute;
    }
    return table;
}

std::optional<PoincarePolynomial> LesReport::solved_dims() const {
    PoincarePolynomial p;
    for (const auto& row : rows) {
        if (!row.m0)
            return std::nullopt;
        p.add_term(row.degree, *row.m0);
    }
    return p;
}

LesReport les_assemble(const SphereProductModel& m) {
    m.validate();
    const int n = m.size();
    const int top = 2 * n - 2;
    LesReport report;

    if (is_regular(m, 0) != Regularity::Critical) {
        // nothing is blown up; the sequence degenerates to an isomorphism
        report.level_regular = true;
        report.desing = desing_poincare(m);
        for (int degree = 0; degree <= top; ++degree) {
            LesRow row;
            row.degree = degree;
            row.desing_dim = report.desing.coeff(degree);
            row.m0_lower = row.m0_upper = row.desing_dim;
            row.m0 = row.desing_dim;
            row.status = DegreeStatus::Exact;
            report.rows.push_back(row);
        }
        report.splitting_hypothesis_holds = report.desing.even_only();
        report.euler_consistent = true;
        return report;
    }

    const auto points = singular_level_points(m);
    report.desing = desing_poincare(m);
    for (const auto& f : points)
        report.cokernel += cokernel_term(f).graded_dims;

    // exactness intervals per segment 0 -> A -> B -> C -> D -> 0
    for (int degree = 0; degree <= top; ++degree) {
        LesRow row;
        row.degree = degree;
        row.desing_dim = report.desing.coeff(degree);
        row.cokernel_dim = report.cokernel.coeff(degree);
        if (degree % 2 == 0) {
            const std::int64_t b = row.desing_dim;
            const std::int64_t c = row.cokernel_dim;
            row.m0_lower = b - c > 0 ? b - c : 0;
            row.m0_upper = b;
        } else {
            const std::int64_t b = report.desing.coeff(degree - 1);
            const std::int64_t c = report.cokernel.coeff(degree - 1);
            row.m0_lower = c - b > 0 ? c - b : 0;
            row.m0_upper = c;
        }
        if (row.m0_lower == row.m0_upper) {
            row.m0 = row.m0_lower;
            row.status = DegreeStatus::Exact;
        }
        report.rows.push_back(row);
    }

    // the collapse route solves every degree; substitute and verify
    const BettiTable collapse = singular_betti_collapse(m);
    for (auto& row : report.rows) {
        const std::int64_t solved = collapse.dims.coeff(row.degree);
        if (solved < row.m0_lower || solved > row.m0_upper)
            throw InconsistencyError("collapse route leaves the exactness interval in degree " +
                                     std::to_string(row.degree));
        row.m0 = solved;
        const int k = row.degree / 2;
        row.assumption_used =
            row.status != DegreeStatus::Exact && restriction_matrix(m, k).rows() > 0;
    }
    for (int degree = 0; degree <= top; degree += 2) {
        const std::int64_t d_next =
            degree + 1 <= top ? collapse.dims.coeff(degree + 1) : 0;
        verify_segment(degree, collapse.dims.coeff(degree), report.desing.coeff(degree),
                       report.cokernel.coeff(degree), d_next);
    }

    bool isolated = true;
    for (const auto& f : points)
        isolated = isolated && f.isolated();
    bool odd_vanishes = true;
    for (const auto& row : report.rows)
        if (row.degree % 2 == 1 && *row.m0 != 0)
            odd_vanishes = false;
    report.splitting_hypothesis_holds = isolated && odd_vanishes;

    if (report.splitting_hypothesis_holds) {
        for (auto& row : report.rows) {
            if (row.status == DegreeStatus::Exact)
                continue;
            if (*row.m0 + row.cokernel_dim != row.desing_dim)
                throw InconsistencyError("splitting fails in degree " +
                                         std::to_string(row.degree));
            row.status = DegreeStatus::SplitEven;
        }
    }

    std::int64_t alternating = 0;
    for (const auto& row : report.rows) {
        const std::int64_t term = *row.m0 - row.desing_dim + row.cokernel_dim;
        alternating += row.degree % 2 == 0 ? term : -term;
    }
    report.euler_consistent = alternating == 0;
    return report;
}

} // namespace symquot

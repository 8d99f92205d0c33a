#include "symquot/desing.hpp"

#include "symquot/errors.hpp"
#include "symquot/wallcross.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace symquot {

namespace {

std::string weight_list(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

void require_isolated_two_sided(const FixedPointData& f) {
    if (!f.isolated())
        throw ValidationError("blow-up bookkeeping needs an isolated fixed point");
    if (!f.two_sided())
        throw OneSidedWeightsError("fixed point with one-sided weights " +
                                   weight_list(f.weights) +
                                   " is the entire level set; nothing to blow up");
}

} // namespace

std::vector<ExceptionalComponent> blowup_components(const FixedPointData& f) {
    require_isolated_two_sided(f);
    std::set<int> distinct(f.weights.begin(), f.weights.end());
    std::vector<ExceptionalComponent> out;
    out.reserve(distinct.size());
    for (int mu : distinct) {
        ExceptionalComponent c;
        c.parent = f;
        c.mu = mu;
        for (int w : f.weights) {
            if (w == mu)
                ++c.multiplicity;
            else
                c.tangent_weights.push_back(w - mu);
        }
        c.tangent_weights.push_back(mu);
        std::sort(c.tangent_weights.begin(), c.tangent_weights.end());
        c.component_poincare = gs(c.multiplicity);
        for (int w : c.tangent_weights)
            (w > 0 ? c.ell_plus : c.ell_minus)++;
        out.push_back(std::move(c));
    }
    return out;
}

PoincarePolynomial crossing_delta(const ExceptionalComponent& c) {
    return c.component_poincare * (gs(c.ell_plus) - gs(c.ell_minus));
}

PoincarePolynomial desing_poincare(const SphereProductModel& m, ApproachSide side) {
    const Rational zero = 0;
    if (is_regular(m, zero) != Regularity::Critical)
        return reduced_poincare(m, zero);

    const auto points = enumerate_fixed_points(m);
    PoincarePolynomial p;
    if (side == ApproachSide::Below) {
        // chamber just below 0, then cross the exceptional components that
        // the blow-up places infinitesimally below the level
        for (const auto& f : points)
            if (f.value < 0)
                p += crossing_delta(f);
        for (const auto& f : points)
            if (f.value == 0)
                for (const auto& c : blowup_components(f))
                    if (c.mu < 0)
                        p += crossing_delta(c);
    } else {
        // chamber just above 0, crossed back down over the components above
        for (const auto& f : points)
            if (f.value <= 0)
                p += crossing_delta(f);
        for (const auto& f : points)
            if (f.value == 0)
                for (const auto& c : blowup_components(f))
                    if (c.mu > 0)
                        p -= crossing_delta(c);
    }
    if (!p.nonnegative())
        throw InconsistencyError("negative Betti number in the desingularized quotient");
    return p;
}

PoincarePolynomial fiber_poincare(const FixedPointData& f) {
    if (!f.two_sided())
        throw OneSidedWeightsError("exceptional fiber needs weights of both signs, got " +
                                   weight_list(f.weights));
    WeightedProjectiveModel fiber_model{f.weights};
    return projective_reduced_poincare(fiber_model, 0);
}

CokernelTerm cokernel_term(const FixedPointData& f) {
    require_isolated_two_sided(f);
    PoincarePolynomial dims = fiber_poincare(f);
    dims.add_term(0, -dims.coeff(0));
    return CokernelTerm{std::move(dims)};
}

GradedQuotientRing equal_weight_ideal(int ell_plus, int ell_minus) {
    if (ell_plus < 1 || ell_minus < 1)
        throw OneSidedWeightsError("equal-weight ideal needs ell_plus, ell_minus >= 1");
    const Rational half(1, 2);
    const BivariatePoly plus = BivariatePoly::linear(1, half);
    const BivariatePoly minus = BivariatePoly::linear(-1, half);
    return GradedQuotientRing{{plus.pow(static_cast<unsigned>(ell_plus)),
                               minus.pow(static_cast<unsigned>(ell_minus))}};
}

GradedQuotientRing equal_weight_ideal(const FixedPointData& f) {
    for (int w : f.weights)
        if (std::abs(w) != std::abs(f.weights.front()))
            throw UnequalWeightsError(
                "no two-generator ideal presentation for mixed weight magnitudes " +
                weight_list(f.weights));
    return equal_weight_ideal(f.ell_plus, f.ell_minus);
}

PoincarePolynomial leray_hirsch(const PoincarePolynomial& fiber,
                                const PoincarePolynomial& base) {
    return fiber * base;
}

} // namespace symquot

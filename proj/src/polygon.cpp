#include "symquot/polygon.hpp"

#include "symquot/desing.hpp"
#include "symquot/errors.hpp"
#include "symquot/wallcross.hpp"

namespace symquot {

void PolygonSpec::validate() const {
    if (lengths.size() < 3)
        throw ValidationError("polygon spec needs at least three lengths");
    for (const auto& r : lengths)
        if (r <= 0)
            throw ValidationError("polygon lengths must be positive, got " + rational_str(r));
}

std::pair<SphereProductModel, Rational> apol_model(const PolygonSpec& p) {
    p.validate();
    SphereProductModel m;
    m.radii.assign(p.lengths.begin(), p.lengths.end() - 1);
    m.speeds.assign(m.radii.size(), 1);
    m.shift = 0;
    return {std::move(m), p.lengths.back()};
}

ApolReport apol_report(const PolygonSpec& p) {
    auto [model, level] = apol_model(p);
    ApolReport report;
    report.model = model;
    report.level = level;

    const Rational max = momentum_max(model);
    if (level > max) {
        report.verdict = PolygonVerdict::Empty;
        report.poincare_duality = true;
        return report;
    }
    if (level == max) {
        // the level set is the single all-north configuration
        report.verdict = PolygonVerdict::DegeneratePoint;
        report.betti = PoincarePolynomial::unit();
        report.poincare_duality = true;
        return report;
    }

    const int top = 2 * model.size() - 2;
    if (is_regular(model, level) == Regularity::Regular) {
        report.verdict = PolygonVerdict::Regular;
        report.betti = reduced_poincare(model, level);
        report.betti_provenance = BettiProvenance::Regular;
        report.poincare_duality = report.betti.palindromic(top);
        if (!report.poincare_duality)
            throw InconsistencyError("regular polygon space fails Poincare duality");
        return report;
    }

    // singular level: shift the momentum map so the level sits at zero
    SphereProductModel shifted = model;
    shifted.shift = -level;
    report.verdict = PolygonVerdict::Singular;
    report.desing = desing_poincare(shifted);
    report.les = les_assemble(shifted);
    report.collapse = solved_betti(*report.les);
    report.betti = report.collapse->dims;
    report.betti_provenance = BettiProvenance::CollapseRoute;
    report.poincare_duality = report.betti.palindromic(top); // allowed to fail here
    for (const auto& f : enumerate_fixed_points(shifted)) {
        if (f.value != 0)
            continue;
        SingularPointReport s;
        s.point = f;
        s.link = LinkData{f.ell_plus, f.ell_minus};
        s.link_dims = link_cohomology(s.link);
        report.singular_points.push_back(std::move(s));
    }
    report.kirwan = kirwan_report(shifted);
    return report;
}

} // namespace symquot

#include "symquot/wallcross.hpp"

#include "symquot/errors.hpp"

namespace symquot {

PoincarePolynomial crossing_delta(const FixedPointData& f) {
    return f.component_poincare * (gs(f.ell_plus) - gs(f.ell_minus));
}

namespace {

PoincarePolynomial accumulate_below(const std::vector<FixedPointData>& points,
                                    const Rational& level, const char* what) {
    PoincarePolynomial p;
    for (const auto& f : points)
        if (f.value < level)
            p += crossing_delta(f);
    if (!p.nonnegative())
        throw InconsistencyError(std::string("negative Betti number in ") + what +
                                 " at level " + rational_str(level));
    return p;
}

} // namespace

PoincarePolynomial reduced_poincare(const SphereProductModel& m, const Rational& level) {
    if (is_regular(m, level) == Regularity::Critical)
        throw CriticalLevelError("level " + rational_str(level) +
                                 " is a critical value of the momentum map");
    return accumulate_below(enumerate_fixed_points(m), level, "reduced space");
}

PoincarePolynomial reduced_poincare(const ChamberQuery& q) {
    return reduced_poincare(q.model, q.level);
}

PoincarePolynomial projective_reduced_poincare(const WeightedProjectiveModel& m,
                                               const Rational& level) {
    const auto components = projective_fixed_components(m);
    for (const auto& c : components)
        if (c.value == level)
            throw CriticalLevelError("level " + rational_str(level) +
                                     " is a critical value (weight " +
                                     rational_str(c.value) + ")");
    return accumulate_below(components, level, "projective reduced space");
}

} // namespace symquot

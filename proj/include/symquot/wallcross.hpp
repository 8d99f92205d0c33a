#pragma once

#include "symquot/model.hpp"
#include "symquot/poincare.hpp"
#include "symquot/rational.hpp"

namespace symquot {

/// A reduced-space query at a fixed level of the momentum map. The level
/// must be regular or outside the momentum image.
struct ChamberQuery {
    SphereProductModel model;
    Rational level;
};

// Signed change of the reduced Poincare polynomial when the level crosses
// the fixed point's momentum value from below to above:
//     component_poincare * (gs(ell_plus) - gs(ell_minus)).
PoincarePolynomial crossing_delta(const FixedPointData& f);

// Poincare polynomial of the reduced space at the queried level, accumulated
// over all fixed points below it. Throws CriticalLevelError on critical
// levels; the result is checked to be coefficient-wise nonnegative.
PoincarePolynomial reduced_poincare(const ChamberQuery& q);
PoincarePolynomial reduced_poincare(const SphereProductModel& m, const Rational& level);

// The same accumulation for the weighted projective model; the walls are the
// distinct weight values.
PoincarePolynomial projective_reduced_poincare(const WeightedProjectiveModel& m,
                                               const Rational& level);

} // namespace symquot

#pragma once

#include "symquot/bivariate.hpp"
#include "symquot/model.hpp"
#include "symquot/poincare.hpp"

#include <vector>

namespace symquot {

/// Fixed-point data of one component of the exceptional divisor over an
/// isolated fixed point F, after blowing up F: the projectivized
/// mu-eigenspace of the isotropy representation. Its tangent weights are the
/// weights lambda_j - mu along the exceptional projective space together
/// with mu itself along the tautological line direction.
struct ExceptionalComponent {
    FixedPointData parent;
    int mu = 0;
    int multiplicity = 0;
    PoincarePolynomial component_poincare; // gs(multiplicity)
    std::vector<int> tangent_weights;      // sorted ascending
    int ell_plus = 0;                      // sign counts of tangent_weights
    int ell_minus = 0;
};

/// Graded dimensions of the degree >= 1 part of the exceptional fiber ring
/// over an isolated F; what the blow-up adds to the cohomology of the
/// quotient.
struct CokernelTerm {
    PoincarePolynomial graded_dims;
};

// One component per distinct weight value of f. Requires f isolated with
// weights of both signs; throws OneSidedWeightsError otherwise.
std::vector<ExceptionalComponent> blowup_components(const FixedPointData& f);

PoincarePolynomial crossing_delta(const ExceptionalComponent& c);

enum class ApproachSide { Below, Above };

// Poincare polynomial of the regular reduced space of the blow-up at level
// 0. If 0 is a regular level this is just reduced_poincare at 0; otherwise
// the chamber next to 0 is corrected by the wall-crossing increments of the
// exceptional components on the chosen side. Both sides give the same
// answer; the parameter exists for cross-checking.
PoincarePolynomial desing_poincare(const SphereProductModel& m,
                                   ApproachSide side = ApproachSide::Below);

// Poincare polynomial of the exceptional fiber CP^{k-1} // S^1 of an
// isolated two-sided fixed point with the given weights, via wall-crossing
// on the projective space at level 0.
PoincarePolynomial fiber_poincare(const FixedPointData& f);

// fiber_poincare with the unit removed: the dimensions the fiber contributes
// beyond the cohomology of the point F itself.
CokernelTerm cokernel_term(const FixedPointData& f);

// The exceptional fiber ring presentation when all weights share one
// absolute value: the ideal ((xi/2 + sigma)^{ell_plus},
// (xi/2 - sigma)^{ell_minus}) in the degree-2 generators sigma, xi. The two
// generators are the truncation relations of the two factor spaces, written
// in the symplectic and curvature classes.
GradedQuotientRing equal_weight_ideal(int ell_plus, int ell_minus);

// Checks |weights| all equal first; throws UnequalWeightsError otherwise
// (graded dimensions remain available through fiber_poincare).
GradedQuotientRing equal_weight_ideal(const FixedPointData& f);

// H(total space) = H(base) (x) H(fiber) for the exceptional bundles:
// coefficient-wise polynomial product.
PoincarePolynomial leray_hirsch(const PoincarePolynomial& fiber,
                                const PoincarePolynomial& base);

} // namespace symquot

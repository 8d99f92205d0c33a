#pragma once

#include "symquot/poincare.hpp"
#include "symquot/rational.hpp"

#include <vector>

namespace symquot {

/// A product of 2-spheres of radii r_i, the circle rotating the i-th factor
/// with integer speed a_i != 0, and momentum map
///     J = sum_i a_i z_i + shift.
/// The fixed set is the 2^n pole combinations and coincides with the
/// critical set of J.
struct SphereProductModel {
    std::vector<Rational> radii;
    std::vector<int> speeds;
    Rational shift = 0;

    int size() const { return static_cast<int>(radii.size()); }
    // Throws ValidationError unless n >= 1, all radii > 0, all speeds != 0.
    void validate() const;
};

/// Projective space CP^{k-1} with the circle acting on homogeneous
/// coordinates by integer weights lambda_1..lambda_k and momentum map
/// J([l]) = sum lambda_i |l_i|^2 / sum |l_i|^2.
struct WeightedProjectiveModel {
    std::vector<int> weights;

    void validate() const;
};

/// One connected component of the fixed set together with its isotropy data:
/// momentum value, normal weight multiset, the counts ell_plus / ell_minus of
/// positive and negative weights (the half-dimensions of the positive and
/// negative Hessian eigenspaces of J), and the component's own Poincare
/// polynomial (1 for isolated points).
struct FixedPointData {
    std::vector<int> label; // sign vector (sphere model) or {mu} (projective model)
    Rational value;
    std::vector<int> weights; // sorted ascending
    int ell_plus = 0;
    int ell_minus = 0;
    PoincarePolynomial component_poincare;

    bool isolated() const { return component_poincare == PoincarePolynomial::unit(); }
    bool two_sided() const { return ell_plus >= 1 && ell_minus >= 1; }
};

// Test and report helper: an isolated fixed point at momentum value 0 with
// the given normal weights.
FixedPointData isolated_fixed_point(std::vector<int> weights);

struct CriticalLevel {
    Rational value;
    std::vector<FixedPointData> fixed_points;
};

enum class Regularity { Regular, Critical, OutsideImage };

// All 2^n pole combinations in lexicographic label order (-1 before +1).
// The point labelled s has momentum value sum_i a_i r_i s_i + shift and
// weight multiset { -a_i s_i }, so that locally
// J = J(F) + (1/2) sum_j lambda_j |z_j|^2.
std::vector<FixedPointData> enumerate_fixed_points(const SphereProductModel& m);

// Fixed points grouped by momentum value, sorted ascending.
std::vector<CriticalLevel> critical_values(const SphereProductModel& m);

Rational momentum_min(const SphereProductModel& m);
Rational momentum_max(const SphereProductModel& m);

Regularity is_regular(const SphereProductModel& m, const Rational& level);

// One component per distinct weight value mu: the projectivized
// mu-eigenspace, a CP^{mult-1} at momentum value mu with normal weight
// multiset { lambda_j - mu : lambda_j != mu }.
std::vector<FixedPointData> projective_fixed_components(const WeightedProjectiveModel& m);

} // namespace symquot

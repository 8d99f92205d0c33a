#pragma once

#include "symquot/equiv.hpp"
#include "symquot/les.hpp"
#include "symquot/model.hpp"
#include "symquot/poincare.hpp"
#include "symquot/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace symquot {

/// Side lengths r_1..r_n of an abelian polygon space; the last entry is the
/// level at which the product of the first n-1 spheres is reduced.
struct PolygonSpec {
    std::vector<Rational> lengths;

    void validate() const; // n >= 3, all lengths positive
};

// The sphere-product model underlying the polygon space: radii r_1..r_{n-1},
// unit speeds, no shift; reduction level r_n.
std::pair<SphereProductModel, Rational> apol_model(const PolygonSpec& p);

enum class PolygonVerdict { Regular, Singular, DegeneratePoint, Empty };

struct SingularPointReport {
    FixedPointData point;
    LinkData link;
    PoincarePolynomial link_dims;
};

struct ApolReport {
    SphereProductModel model;
    Rational level;
    PolygonVerdict verdict = PolygonVerdict::Regular;
    PoincarePolynomial betti;
    BettiProvenance betti_provenance = BettiProvenance::Regular;
    bool poincare_duality = false;
    // singular branch only
    std::optional<PoincarePolynomial> desing;
    std::optional<LesReport> les;
    std::optional<BettiTable> collapse;
    std::vector<SingularPointReport> singular_points;
    std::optional<KirwanReport> kirwan;
};

// Classifies the level and runs the appropriate pipeline: wall-crossing at
// regular levels, the full desingularization / exact-sequence / collapse
// machinery at singular ones. Levels at the boundary of the momentum image
// are reported as degenerate rather than reduced.
ApolReport apol_report(const PolygonSpec& p);

} // namespace symquot

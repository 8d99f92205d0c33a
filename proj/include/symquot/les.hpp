#pragma once

#include "symquot/model.hpp"
#include "symquot/poincare.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace symquot {

/// Sign counts of a cone singularity; the link of the singular point is
/// S^{2 ell_plus - 1} x_{S^1} S^{2 ell_minus - 1}.
struct LinkData {
    int ell_plus = 0;
    int ell_minus = 0;
};

// Rational cohomology of the link, computed degree by degree from the Gysin
// sequence of the circle bundle over CP^{ell_plus - 1} x CP^{ell_minus - 1}
// whose Euler class is the sum of the two hyperplane classes.
PoincarePolynomial link_cohomology(const LinkData& l);

enum class DegreeStatus { Exact, SplitEven, Underdetermined };

enum class BettiProvenance { CollapseRoute, SplitRoute, Regular };

/// Betti numbers of a singular (or regular) quotient with a per-degree record
/// of which route produced each value.
struct BettiTable {
    PoincarePolynomial dims;
    std::map<int, BettiProvenance> provenance;
};

/// One degree of the long exact sequence relating the singular quotient, its
/// desingularization and the exceptional cokernel terms. The m0 interval is
/// what exactness alone allows; m0 carries the solved value when a solving
/// route pinned it down.
struct LesRow {
    int degree = 0;
    std::int64_t desing_dim = 0;
    std::int64_t cokernel_dim = 0;
    std::int64_t m0_lower = 0;
    std::int64_t m0_upper = 0;
    std::optional<std::int64_t> m0;
    DegreeStatus status = DegreeStatus::Underdetermined;
    // true when the value rests on the restriction-rank identification
    // rather than on exactness alone
    bool assumption_used = false;
};

struct LesReport {
    std::vector<LesRow> rows; // degrees 0 .. dim(quotient)
    bool level_regular = false;
    bool splitting_hypothesis_holds = false;
    // set once all degrees are solved: alternating sum over the sequence is 0
    std::optional<bool> euler_consistent;
    PoincarePolynomial desing;
    PoincarePolynomial cokernel;

    std::optional<PoincarePolynomial> solved_dims() const;
};

// Assembles the sequence for the level-0 quotient: desingularization
// dimensions, cokernel terms, per-degree exactness intervals, and solved
// values via the collapse route where available. Throws InconsistencyError
// if the routes disagree.
LesReport les_assemble(const SphereProductModel& m);

// The solved dimensions of a report as a BettiTable. Degrees the sequence
// pins down by itself are credited to the sequence; the rest to the
// collapse route. Requires a fully solved report.
BettiTable solved_betti(const LesReport& report);

// Betti numbers of the level-0 quotient through the collapse description:
// the singular quotient is the regular quotient just below the level with
// the projectivized negative cones collapsed to points. Even degrees lose
// the restriction rank of the chamber cohomology onto the collapsed
// projective spaces; odd degrees pick up the cokernel of that restriction.
BettiTable singular_betti_collapse(const SphereProductModel& m);

} // namespace symquot

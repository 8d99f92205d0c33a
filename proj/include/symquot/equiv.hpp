#pragma once

#include "symquot/matrix.hpp"
#include "symquot/model.hpp"
#include "symquot/rational.hpp"

#include <cstdint>
#include <vector>

namespace symquot {

/// Graded dimensions of the equivariant cohomology of a sphere product. The
/// action is equivariantly formal, so the degree-2k dimension is the partial
/// binomial sum sum_{j<=k} C(n, j); odd degrees vanish.
struct EquivariantDims {
    int n = 0;
    std::vector<std::int64_t> even_dims; // index k: dimension in degree 2k

    std::int64_t dim(int degree) const;
};

EquivariantDims equivariant_dims(const SphereProductModel& m, int max_degree);

// Evaluation matrix of the degree-2k equivariant monomial basis
// { x^{k-|I|} prod_{i in I} u_i : |I| <= k } at the level-0 fixed points
// with ell_minus >= k+1, reading off the coefficient of x^k. The gauge fixes
// u_i to restrict to a_i x at the positive pole and 0 at the negative one;
// gauge[i] shifts u_i by gauge[i] * x, which only mixes columns.
RationalMatrix restriction_matrix(const SphereProductModel& m, int k,
                                  const std::vector<Rational>& gauge = {});

// Rank of the restriction matrix; 0 when the row set is empty.
std::size_t restriction_rank(const SphereProductModel& m, int k);
std::size_t restriction_rank(const SphereProductModel& m, int k,
                             const std::vector<Rational>& gauge);

struct KirwanRow {
    int degree = 0;
    std::int64_t equivariant_dim = 0;
    std::int64_t quotient_dim = 0;
    std::int64_t margin = 0; // equivariant_dim - quotient_dim, always >= 0
};

/// A degree in which the quotient has cohomology but the equivariant
/// cohomology of the manifold is zero, so no degree-preserving surjection
/// onto the quotient's cohomology can exist.
struct OddObstruction {
    int degree = 0;
    std::int64_t betti = 0;
};

struct KirwanReport {
    std::vector<KirwanRow> even_rows;
    std::vector<OddObstruction> obstructions;
};

// Dimension-level audit of surjectivity onto the cohomology of the level-0
// quotient: every even degree must satisfy the dimension inequality (a hard
// InconsistencyError otherwise); odd degrees with nonzero quotient
// cohomology are reported as obstructions.
KirwanReport kirwan_report(const SphereProductModel& m);

} // namespace symquot

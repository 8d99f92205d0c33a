#pragma once

#include "symquot/poincare.hpp"
#include "symquot/rational.hpp"

#include <vector>

namespace symquot {

/// A homogeneous polynomial in two generators sigma, xi of cohomological
/// degree 2 each. A polynomial of order d (all terms sigma^i xi^j with
/// i + j = d) sits in cohomological degree 2d.
class BivariatePoly {
public:
    // The zero polynomial of order 0.
    BivariatePoly() : coeff_(1) {}

    static BivariatePoly linear(const Rational& sigma_c, const Rational& xi_c);
    // coeffs[i] is the coefficient of sigma^i xi^{order-i}.
    static BivariatePoly from_coeffs(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    int cohomological_degree() const { return 2 * order(); }
    // Coefficient of sigma^i xi^j; zero unless i + j == order().
    const Rational& coeff(int i, int j) const;
    bool is_zero() const;

    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator*(const Rational& s) const;
    // Defined for equal orders only.
    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    bool operator==(const BivariatePoly& o) const { return coeff_ == o.coeff_; }

    BivariatePoly pow(unsigned e) const;

private:
    std::vector<Rational> coeff_; // index i: coefficient of sigma^i xi^{order-i}
};

/// R[sigma, xi] / (ideal_generators), graded by cohomological degree.
struct GradedQuotientRing {
    std::vector<BivariatePoly> ideal_generators;
};

// Graded dimensions of the quotient up to max_degree (inclusive). The
// coefficient at degree 2d is (d+1) minus the rank of the degree-2d slice of
// the ideal, the slice being spanned by all monomial multiples of the
// generators; odd degrees are zero.
PoincarePolynomial hilbert_dims(const GradedQuotientRing& ring, int max_degree);

} // namespace symquot

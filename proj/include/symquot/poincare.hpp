#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symquot {

/// A finitely supported map degree -> dimension. Cohomology results have all
/// coefficients >= 0; intermediate wall-crossing increments may be signed.
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;

    static PoincarePolynomial unit() { return monomial(0, 1); }
    static PoincarePolynomial monomial(int degree, std::int64_t c);

    std::int64_t coeff(int degree) const;
    void add_term(int degree, std::int64_t c);

    bool is_zero() const { return coeff_.empty(); }
    // Largest degree with nonzero coefficient; -1 for the zero polynomial.
    int max_degree() const;

    PoincarePolynomial& operator+=(const PoincarePolynomial& o);
    PoincarePolynomial& operator-=(const PoincarePolynomial& o);
    PoincarePolynomial operator+(const PoincarePolynomial& o) const;
    PoincarePolynomial operator-(const PoincarePolynomial& o) const;
    PoincarePolynomial operator*(const PoincarePolynomial& o) const;
    PoincarePolynomial operator*(std::int64_t s) const;
    bool operator==(const PoincarePolynomial& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const PoincarePolynomial& o) const { return !(*this == o); }

    // Drops all terms of degree > bound.
    PoincarePolynomial truncate(int bound) const;

    bool nonnegative() const;
    bool even_only() const;
    // b_k == b_{top-k} for 0 <= k <= top.
    bool palindromic(int top) const;

    // Dense coefficient vector for degrees 0..top.
    std::vector<std::int64_t> dims(int top) const;

    const std::map<int, std::int64_t>& terms() const { return coeff_; }

    // Human-readable form, e.g. "1 + 5 t^2 + 5 t^4 + t^6"; "0" when zero.
    std::string str() const;

private:
    std::map<int, std::int64_t> coeff_; // zero coefficients are elided
};

// Truncated geometric series 1 + t^2 + ... + t^{2m-2}: the Poincare
// polynomial of projective (m-1)-space. gs(0) = 0.
PoincarePolynomial gs(int m);

} // namespace symquot

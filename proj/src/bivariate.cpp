#include "symquot/bivariate.hpp"

#include "symquot/errors.hpp"
#include "symquot/matrix.hpp"

#include <stdexcept>

namespace symquot {

BivariatePoly BivariatePoly::linear(const Rational& sigma_c, const Rational& xi_c) {
    // order 1: coeff_[0] = xi coefficient, coeff_[1] = sigma coefficient
    return from_coeffs({xi_c, sigma_c});
}

BivariatePoly BivariatePoly::from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("empty coefficient vector");
    BivariatePoly p;
    p.coeff_ = std::move(coeffs);
    return p;
}

const Rational& BivariatePoly::coeff(int i, int j) const {
    static const Rational zero = 0;
    if (i < 0 || j < 0 || i + j != order())
        return zero;
    return coeff_[static_cast<std::size_t>(i)];
}

bool BivariatePoly::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0)
            return false;
    return true;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    std::vector<Rational> r(coeff_.size() + o.coeff_.size() - 1);
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        for (std::size_t j = 0; j < o.coeff_.size(); ++j)
            r[i + j] += coeff_[i] * o.coeff_[j];
    return from_coeffs(std::move(r));
}

BivariatePoly BivariatePoly::operator*(const Rational& s) const {
    std::vector<Rational> r = coeff_;
    for (auto& c : r)
        c *= s;
    return from_coeffs(std::move(r));
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    if (order() != o.order())
        throw std::invalid_argument("sum of inhomogeneous bivariate polynomials");
    std::vector<Rational> r = coeff_;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += o.coeff_[i];
    return from_coeffs(std::move(r));
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    return *this + o * Rational(-1);
}

BivariatePoly BivariatePoly::pow(unsigned e) const {
    BivariatePoly r = from_coeffs({Rational(1)});
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

PoincarePolynomial hilbert_dims(const GradedQuotientRing& ring, int max_degree) {
    if (max_degree < 0)
        throw std::invalid_argument("negative degree bound");
    PoincarePolynomial result;
    for (int d = 0; 2 * d <= max_degree; ++d) {
        // Rows: monomial multiples m * g landing in order d, expressed in the
        // basis sigma^i xi^{d-i}. Multiplying by sigma^p xi^q shifts the
        // sigma exponent by p.
        std::vector<std::vector<Rational>> rows;
        for (const auto& g : ring.ideal_generators) {
            const int e = g.order();
            if (g.is_zero() || e > d)
                continue;
            for (int p = 0; p <= d - e; ++p) {
                std::vector<Rational> row(static_cast<std::size_t>(d) + 1);
                for (int i = 0; i <= e; ++i)
                    row[static_cast<std::size_t>(i + p)] = g.coeff(i, e - i);
                rows.push_back(std::move(row));
            }
        }
        RationalMatrix m(rows.size(), static_cast<std::size_t>(d) + 1);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j)
                m.at(i, j) = rows[i][j];
        const std::int64_t dim = d + 1 - static_cast<std::int64_t>(m.rank());
        result.add_term(2 * d, dim);
    }
    return result;
}

} // namespace symquot

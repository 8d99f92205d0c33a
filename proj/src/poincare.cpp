#include "symquot/poincare.hpp"

#include <sstream>

namespace symquot {

PoincarePolynomial PoincarePolynomial::monomial(int degree, std::int64_t c) {
    PoincarePolynomial p;
    p.add_term(degree, c);
    return p;
}

std::int64_t PoincarePolynomial::coeff(int degree) const {
    auto it = coeff_.find(degree);
    return it == coeff_.end() ? 0 : it->second;
}

void PoincarePolynomial::add_term(int degree, std::int64_t c) {
    if (c == 0)
        return;
    auto [it, inserted] = coeff_.emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeff_.erase(it);
    }
}

int PoincarePolynomial::max_degree() const {
    return coeff_.empty() ? -1 : coeff_.rbegin()->first;
}

PoincarePolynomial& PoincarePolynomial::operator+=(const PoincarePolynomial& o) {
    for (const auto& [d, c] : o.coeff_)
        add_term(d, c);
    return *this;
}

PoincarePolynomial& PoincarePolynomial::operator-=(const PoincarePolynomial& o) {
    for (const auto& [d, c] : o.coeff_)
        add_term(d, -c);
    return *this;
}

PoincarePolynomial PoincarePolynomial::operator+(const PoincarePolynomial& o) const {
    PoincarePolynomial r = *this;
    r += o;
    return r;
}

PoincarePolynomial PoincarePolynomial::operator-(const PoincarePolynomial& o) const {
    PoincarePolynomial r = *this;
    r -= o;
    return r;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& o) const {
    PoincarePolynomial r;
    for (const auto& [d1, c1] : coeff_)
        for (const auto& [d2, c2] : o.coeff_)
            r.add_term(d1 + d2, c1 * c2);
    return r;
}

PoincarePolynomial PoincarePolynomial::operator*(std::int64_t s) const {
    PoincarePolynomial r;
    for (const auto& [d, c] : coeff_)
        r.add_term(d, c * s);
    return r;
}

PoincarePolynomial PoincarePolynomial::truncate(int bound) const {
    PoincarePolynomial r;
    for (const auto& [d, c] : coeff_)
        if (d <= bound)
            r.add_term(d, c);
    return r;
}

bool PoincarePolynomial::nonnegative() const {
    for (const auto& [d, c] : coeff_)
        if (c < 0)
            return false;
    return true;
}

bool PoincarePolynomial::even_only() const {
    for (const auto& [d, c] : coeff_)
        if (d % 2 != 0)
            return false;
    return true;
}

bool PoincarePolynomial::palindromic(int top) const {
    if (max_degree() > top)
        return false;
    for (int k = 0; k <= top; ++k)
        if (coeff(k) != coeff(top - k))
            return false;
    return true;
}

std::vector<std::int64_t> PoincarePolynomial::dims(int top) const {
    std::vector<std::int64_t> v(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& [d, c] : coeff_)
        if (d >= 0 && d <= top)
            v[static_cast<std::size_t>(d)] = c;
    return v;
}

std::string PoincarePolynomial::str() const {
    if (coeff_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeff_) {
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || d == 0)
            os << a;
        if (d != 0) {
            if (a != 1)
                os << " ";
            os << "t";
            if (d != 1)
                os << "^" << d;
        }
    }
    return os.str();
}

PoincarePolynomial gs(int m) {
    PoincarePolynomial p;
    for (int j = 0; j < m; ++j)
        p.add_term(2 * j, 1);
    return p;
}

} // namespace symquot

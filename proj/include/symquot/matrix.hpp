#pragma once

#include "symquot/rational.hpp"

#include <cstddef>
#include <vector>

namespace symquot {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    // Exact rank over the rationals. Rows are scaled to integers, then
    // reduced by fraction-free (Bareiss) elimination.
    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> e_;
};

} // namespace symquot

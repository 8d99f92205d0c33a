#include "symquot/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace symquot {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

Rational& RationalMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("matrix index");
    return e_[i * cols_ + j];
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("matrix index");
    return e_[i * cols_ + j];
}

std::size_t RationalMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0)
        return 0;

    // Scale each row to integers; row scaling preserves the rank.
    std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < cols_; ++j)
            scale = lcm(scale, denominator(e_[i * cols_ + j]));
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational v = e_[i * cols_ + j] * scale;
            m[i][j] = numerator(v);
        }
    }

    // Bareiss condensation: every division below is exact.
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            for (std::size_t j = col + 1; j < cols_; ++j)
                m[i][j] = (m[i][j] * m[r][col] - m[i][col] * m[r][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return r;
}

} // namespace symquot

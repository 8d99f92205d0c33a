#include "symquot/equiv.hpp"

#include "symquot/errors.hpp"
#include "symquot/les.hpp"
#include "symquot/wallcross.hpp"

#include <string>

namespace symquot {

std::int64_t EquivariantDims::dim(int degree) const {
    if (degree < 0 || degree % 2 != 0)
        return 0;
    const std::size_t k = static_cast<std::size_t>(degree / 2);
    if (k < even_dims.size())
        return even_dims[k];
    // stable range: the full binomial sum 2^n
    return even_dims.empty() ? 0 : even_dims.back();
}

EquivariantDims equivariant_dims(const SphereProductModel& m, int max_degree) {
    m.validate();
    const int n = m.size();
    EquivariantDims d;
    d.n = n;
    std::int64_t binom = 1; // C(n, k)
    std::int64_t sum = 0;
    for (int k = 0; 2 * k <= max_degree; ++k) {
        if (k <= n) {
            sum += binom;
            binom = binom * (n - k) / (k + 1);
        }
        d.even_dims.push_back(sum);
    }
    return d;
}

namespace {

// Subsets of {0..n-1} of size <= k, ordered by size then lexicographically.
std::vector<std::vector<int>> small_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> current{{}};
    out.push_back({});
    for (int size = 1; size <= k && size <= n; ++size) {
        std::vector<std::vector<int>> next;
        for (const auto& s : current) {
            const int start = s.empty() ? 0 : s.back() + 1;
            for (int i = start; i < n; ++i) {
                auto t = s;
                t.push_back(i);
                out.push_back(t);
                next.push_back(std::move(t));
            }
        }
        current = std::move(next);
    }
    return out;
}

} // namespace

RationalMatrix restriction_matrix(const SphereProductModel& m, int k,
                                  const std::vector<Rational>& gauge) {
    m.validate();
    if (k < 0)
        throw ValidationError("negative degree index");
    const int n = m.size();
    if (!gauge.empty() && gauge.size() != static_cast<std::size_t>(n))
        throw ValidationError("gauge vector must have one entry per sphere factor");

    std::vector<FixedPointData> rows;
    for (auto& f : enumerate_fixed_points(m))
        if (f.value == 0 && f.ell_minus >= k + 1)
            rows.push_back(std::move(f));

    const auto columns = small_subsets(n, k);
    RationalMatrix mat(rows.size(), columns.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            Rational entry = 1;
            for (int i : columns[c]) {
                Rational u = rows[r].label[static_cast<std::size_t>(i)] == 1
                                 ? Rational(m.speeds[static_cast<std::size_t>(i)])
                                 : Rational(0);
                if (!gauge.empty())
                    u += gauge[static_cast<std::size_t>(i)];
                entry *= u;
            }
            mat.at(r, c) = entry;
        }
    }
    return mat;
}

std::size_t restriction_rank(const SphereProductModel& m, int k) {
    return restriction_matrix(m, k).rank();
}

std::size_t restriction_rank(const SphereProductModel& m, int k,
                             const std::vector<Rational>& gauge) {
    return restriction_matrix(m, k, gauge).rank();
}

KirwanReport kirwan_report(const SphereProductModel& m) {
    const int n = m.size();
    const int top = 2 * n - 2;

    PoincarePolynomial quotient;
    if (is_regular(m, 0) == Regularity::Critical)
        quotient = singular_betti_collapse(m).dims;
    else
        quotient = reduced_poincare(m, 0);

    const EquivariantDims eq = equivariant_dims(m, top);
    KirwanReport report;
    for (int degree = 0; degree <= top; degree += 2) {
        KirwanRow row;
        row.degree = degree;
        row.equivariant_dim = eq.dim(degree);
        row.quotient_dim = quotient.coeff(degree);
        row.margin = row.equivariant_dim - row.quotient_dim;
        if (row.margin < 0)
            throw InconsistencyError(
                "equivariant dimension " + std::to_string(row.equivariant_dim) +
                " below quotient dimension " + std::to_string(row.quotient_dim) +
                " in degree " + std::to_string(degree));
        report.even_rows.push_back(row);
    }
    for (int degree = 1; degree <= top; degree += 2) {
        const std::int64_t b = quotient.coeff(degree);
        // equivariant cohomology of a sphere product vanishes in odd degrees
        if (b > 0)
            report.obstructions.push_back(OddObstruction{degree, b});
    }
    return report;
}

} // namespace symquot

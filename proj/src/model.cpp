#include "symquot/model.hpp"

#include "symquot/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace symquot {

void SphereProductModel::validate() const {
    if (radii.empty())
        throw ValidationError("sphere product model needs at least one factor");
    if (speeds.size() != radii.size())
        throw ValidationError("speeds and radii must have equal length");
    for (const auto& r : radii)
        if (r <= 0)
            throw ValidationError("radii must be positive, got " + rational_str(r));
    for (int a : speeds)
        if (a == 0)
            throw ValidationError("zero speeds are not supported: the fixed set would not be isolated");
}

void WeightedProjectiveModel::validate() const {
    if (weights.empty())
        throw ValidationError("projective model needs at least one weight");
    for (int w : weights)
        if (w == 0)
            throw ValidationError("projective weights must be nonzero");
}

namespace {

void fill_sign_counts(FixedPointData& f) {
    f.ell_plus = 0;
    f.ell_minus = 0;
    for (int w : f.weights)
        (w > 0 ? f.ell_plus : f.ell_minus)++;
}

} // namespace

FixedPointData isolated_fixed_point(std::vector<int> weights) {
    FixedPointData f;
    f.value = 0;
    f.weights = std::move(weights);
    std::sort(f.weights.begin(), f.weights.end());
    f.component_poincare = PoincarePolynomial::unit();
    fill_sign_counts(f);
    return f;
}

std::vector<FixedPointData> enumerate_fixed_points(const SphereProductModel& m) {
    m.validate();
    const int n = m.size();
    std::vector<FixedPointData> out;
    out.reserve(std::size_t{1} << n);
    std::vector<int> s(n, -1);
    for (;;) {
        FixedPointData f;
        f.label = s;
        f.value = m.shift;
        f.weights.reserve(n);
        for (int i = 0; i < n; ++i) {
            f.value += m.radii[i] * m.speeds[i] * s[i];
            f.weights.push_back(-m.speeds[i] * s[i]);
        }
        std::sort(f.weights.begin(), f.weights.end());
        fill_sign_counts(f);
        f.component_poincare = PoincarePolynomial::unit();
        out.push_back(std::move(f));

        // next sign vector in lexicographic order, -1 < +1
        int i = n - 1;
        while (i >= 0 && s[i] == 1)
            s[i--] = -1;
        if (i < 0)
            break;
        s[i] = 1;
    }
    return out;
}

std::vector<CriticalLevel> critical_values(const SphereProductModel& m) {
    std::map<Rational, std::vector<FixedPointData>> by_value;
    for (auto& f : enumerate_fixed_points(m))
        by_value[f.value].push_back(std::move(f));
    std::vector<CriticalLevel> out;
    out.reserve(by_value.size());
    for (auto& [v, pts] : by_value)
        out.push_back(CriticalLevel{v, std::move(pts)});
    return out;
}

Rational momentum_min(const SphereProductModel& m) {
    m.validate();
    Rational v = m.shift;
    for (int i = 0; i < m.size(); ++i)
        v -= m.radii[i] * std::abs(m.speeds[i]);
    return v;
}

Rational momentum_max(const SphereProductModel& m) {
    m.validate();
    Rational v = m.shift;
    for (int i = 0; i < m.size(); ++i)
        v += m.radii[i] * std::abs(m.speeds[i]);
    return v;
}

Regularity is_regular(const SphereProductModel& m, const Rational& level) {
    if (level < momentum_min(m) || level > momentum_max(m))
        return Regularity::OutsideImage;
    for (const auto& cl : critical_values(m))
        if (cl.value == level)
            return Regularity::Critical;
    return Regularity::Regular;
}

std::vector<FixedPointData> projective_fixed_components(const WeightedProjectiveModel& m) {
    m.validate();
    std::set<int> distinct(m.weights.begin(), m.weights.end());
    std::vector<FixedPointData> out;
    out.reserve(distinct.size());
    for (int mu : distinct) {
        FixedPointData f;
        f.label = {mu};
        f.value = mu;
        int mult = 0;
        for (int w : m.weights) {
            if (w == mu)
                ++mult;
            else
                f.weights.push_back(w - mu);
        }
        std::sort(f.weights.begin(), f.weights.end());
        fill_sign_counts(f);
        f.component_poincare = gs(mult);
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace symquot

#include "symquot/report.hpp"

#include "symquot/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace symquot {

namespace {

using nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) { return rational_str(r); }

ordered_json rational_array(const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& r : v)
        a.push_back(rational_json(r));
    return a;
}

ordered_json dims_array(const PoincarePolynomial& p, int top) {
    ordered_json a = ordered_json::array();
    for (auto d : p.dims(top))
        a.push_back(d);
    return a;
}

std::string label_str(const std::vector<int>& label) {
    // sign vectors render as "+-+-"; a single weight value as "mu=<w>"
    const bool signs = std::all_of(label.begin(), label.end(),
                                   [](int v) { return v == 1 || v == -1; });
    if (signs && !label.empty()) {
        std::string s;
        for (int v : label)
            s += v == 1 ? '+' : '-';
        return s;
    }
    std::string s = "mu=";
    for (std::size_t i = 0; i < label.size(); ++i)
        s += (i ? "," : "") + std::to_string(label[i]);
    return s;
}

ordered_json spec_echo(const ModelSpec& spec) {
    ordered_json j = ordered_json::object();
    switch (spec.kind) {
    case ModelKind::SphereProduct:
        j["kind"] = "sphere_product";
        j["radii"] = rational_array(spec.radii);
        j["speeds"] = spec.speeds;
        j["shift"] = rational_json(spec.shift);
        break;
    case ModelKind::WeightedProjective:
        j["kind"] = "weighted_projective";
        j["weights"] = spec.weights;
        break;
    case ModelKind::Apol:
        j["kind"] = "apol";
        j["lengths"] = rational_array(spec.lengths);
        break;
    }
    if (spec.level)
        j["level"] = rational_json(*spec.level);
    return j;
}

} // namespace

ResultDocument::ResultDocument(const ModelSpec& spec) {
    doc_["tool"] = ordered_json{{"name", kToolName}, {"version", kToolVersion}};
    doc_["input"] = spec_echo(spec);
}

void ResultDocument::add_fixed_points(const std::vector<FixedPointData>& points) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : points) {
        ordered_json j;
        j["label"] = label_str(f.label);
        j["value"] = rational_json(f.value);
        j["weights"] = f.weights;
        j["ell_plus"] = f.ell_plus;
        j["ell_minus"] = f.ell_minus;
        if (!f.isolated())
            j["component_betti"] = dims_array(f.component_poincare,
                                              f.component_poincare.max_degree());
        arr.push_back(std::move(j));
    }
    doc_["fixed_points"] = std::move(arr);
}

void ResultDocument::add_critical_values(const std::vector<CriticalLevel>& levels) {
    ordered_json arr = ordered_json::array();
    for (const auto& cl : levels)
        arr.push_back(ordered_json{{"value", rational_json(cl.value)},
                                   {"count", cl.fixed_points.size()}});
    doc_["critical_values"] = std::move(arr);
}

void ResultDocument::add_regularity(const Rational& level, Regularity r) {
    const char* s = r == Regularity::Regular      ? "regular"
                    : r == Regularity::Critical   ? "critical"
                                                  : "outside_image";
    doc_["level"] = ordered_json{{"value", rational_json(level)}, {"regularity", s}};
}

void ResultDocument::add_reduced(const Rational& level, const PoincarePolynomial& p, int top) {
    doc_["reduced"] = ordered_json{{"level", rational_json(level)},
                                   {"betti", dims_array(p, top)}};
}

void ResultDocument::add_desing(const PoincarePolynomial& p, int top) {
    doc_["desing"] = ordered_json{{"betti", dims_array(p, top)}};
}

DerivationFlag derivation_flag(const LesRow& row) {
    if (row.status == DegreeStatus::Exact)
        return {"forced", std::nullopt};
    if (row.assumption_used)
        return {"derived",
                "collapse restriction rank, cross-checked against the exactness of the "
                "resolution sequence"};
    return {"paper-anchored", std::nullopt};
}

void ResultDocument::add_singular_betti(const BettiTable& table, const LesReport& les,
                                        int top) {
    ordered_json j;
    j["betti"] = dims_array(table.dims, top);
    ordered_json flags = ordered_json::array();
    for (const auto& row : les.rows) {
        const DerivationFlag f = derivation_flag(row);
        ordered_json e{{"degree", row.degree}, {"flag", f.flag}};
        if (f.oracle)
            e["oracle"] = *f.oracle;
        flags.push_back(std::move(e));
    }
    j["flags"] = std::move(flags);
    doc_["singular_betti"] = std::move(j);
}

void ResultDocument::add_les_table(const LesReport& les) {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const auto& row : les.rows) {
        ordered_json e;
        e["degree"] = row.degree;
        if (row.m0)
            e["m0"] = *row.m0;
        else
            e["m0_interval"] = ordered_json::array({row.m0_lower, row.m0_upper});
        e["desing"] = row.desing_dim;
        e["cokernel"] = row.cokernel_dim;
        e["status"] = status_str(row.status);
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    j["splitting"] = les.splitting_hypothesis_holds;
    if (les.euler_consistent)
        j["euler_consistent"] = *les.euler_consistent;
    doc_["les"] = std::move(j);
}

void ResultDocument::add_links(const std::vector<SingularPointReport>& points) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : points) {
        ordered_json e;
        e["label"] = label_str(s.point.label);
        e["ell_plus"] = s.link.ell_plus;
        e["ell_minus"] = s.link.ell_minus;
        e["link_betti"] = dims_array(s.link_dims, s.link_dims.max_degree());
        arr.push_back(std::move(e));
    }
    doc_["links"] = std::move(arr);
}

void ResultDocument::add_link(const LinkData& link, const PoincarePolynomial& dims) {
    doc_["link"] = ordered_json{{"ell_plus", link.ell_plus},
                                {"ell_minus", link.ell_minus},
                                {"betti", dims_array(dims, dims.max_degree())}};
}

void ResultDocument::add_kirwan(const KirwanReport& report) {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.even_rows)
        rows.push_back(ordered_json{{"degree", r.degree},
                                    {"equivariant", r.equivariant_dim},
                                    {"quotient", r.quotient_dim},
                                    {"margin", r.margin}});
    j["even_degrees"] = std::move(rows);
    ordered_json obs = ordered_json::array();
    for (const auto& o : report.obstructions)
        obs.push_back(ordered_json{{"degree", o.degree}, {"betti", o.betti}});
    j["odd_obstructions"] = std::move(obs);
    doc_["kirwan"] = std::move(j);
}

void ResultDocument::add_polygon_verdict(PolygonVerdict verdict, bool poincare_duality) {
    doc_["polygon"] = ordered_json{{"verdict", verdict_str(verdict)},
                                   {"poincare_duality", poincare_duality}};
}

std::string ResultDocument::dump() const { return doc_.dump(2) + "\n"; }

std::string verdict_str(PolygonVerdict v) {
    switch (v) {
    case PolygonVerdict::Regular:
        return "regular";
    case PolygonVerdict::Singular:
        return "singular";
    case PolygonVerdict::DegeneratePoint:
        return "degenerate_point";
    case PolygonVerdict::Empty:
        return "empty";
    }
    return "unknown";
}

std::string status_str(DegreeStatus s) {
    switch (s) {
    case DegreeStatus::Exact:
        return "exact";
    case DegreeStatus::SplitEven:
        return "split_even";
    case DegreeStatus::Underdetermined:
        return "underdetermined";
    }
    return "unknown";
}

std::string format_fixed_points(const std::vector<FixedPointData>& points) {
    std::ostringstream os;
    os << "label        value      weights            l+  l-\n";
    for (const auto& f : points) {
        std::string w = "{";
        for (std::size_t i = 0; i < f.weights.size(); ++i)
            w += (i ? "," : "") + std::to_string(f.weights[i]);
        w += "}";
        os << std::left << std::setw(13) << label_str(f.label) << std::setw(11)
           << rational_str(f.value) << std::setw(19) << w << std::setw(4) << f.ell_plus
           << f.ell_minus << "\n";
    }
    return os.str();
}

std::string format_critical_values(const std::vector<CriticalLevel>& levels) {
    std::ostringstream os;
    os << "critical value   fixed points\n";
    for (const auto& cl : levels)
        os << std::left << std::setw(17) << rational_str(cl.value)
           << cl.fixed_points.size() << "\n";
    return os.str();
}

std::string format_poincare_line(const std::string& name, const PoincarePolynomial& p,
                                 int top) {
    std::ostringstream os;
    os << name << ": " << p.str() << "\n" << name << " dims (deg 0.." << top << "):";
    for (auto d : p.dims(top))
        os << " " << d;
    os << "\n";
    return os.str();
}

std::string format_les_table(const LesReport& les) {
    std::ostringstream os;
    os << "deg  H(M0)      H(desing)  cokernel   status\n";
    for (const auto& row : les.rows) {
        std::string m0 = row.m0 ? std::to_string(*row.m0)
                                : "[" + std::to_string(row.m0_lower) + "," +
                                      std::to_string(row.m0_upper) + "]";
        os << std::left << std::setw(5) << row.degree << std::setw(11) << m0
           << std::setw(11) << row.desing_dim << std::setw(11) << row.cokernel_dim
           << status_str(row.status) << "\n";
    }
    os << "splitting hypothesis: " << (les.splitting_hypothesis_holds ? "holds" : "fails")
       << "\n";
    if (les.euler_consistent)
        os << "euler consistency: " << (*les.euler_consistent ? "ok" : "BROKEN") << "\n";
    return os.str();
}

std::string format_kirwan(const KirwanReport& report) {
    std::ostringstream os;
    os << "deg  equivariant  quotient  margin\n";
    for (const auto& r : report.even_rows)
        os << std::left << std::setw(5) << r.degree << std::setw(13) << r.equivariant_dim
           << std::setw(10) << r.quotient_dim << r.margin << "\n";
    for (const auto& o : report.obstructions)
        os << "ODD-OBSTRUCTION at degree " << o.degree << ": quotient has dimension "
           << o.betti << " but the equivariant cohomology vanishes\n";
    if (report.obstructions.empty())
        os << "no odd-degree obstruction\n";
    return os.str();
}

std::string format_singular_betti(const BettiTable& table, const LesReport& les, int top) {
    std::ostringstream os;
    os << format_poincare_line("singular betti", table.dims, top);
    os << "deg  flag            oracle\n";
    for (const auto& row : les.rows) {
        const DerivationFlag f = derivation_flag(row);
        os << std::left << std::setw(5) << row.degree << std::setw(16) << f.flag
           << (f.oracle ? *f.oracle : "-") << "\n";
    }
    return os.str();
}

std::string momentum_diagram_svg(const std::vector<CriticalLevel>& levels,
                                 const Rational& min, const Rational& max,
                                 const std::optional<Rational>& level) {
    const double width = 720.0, margin = 60.0, axis_y = 80.0;
    const double span = static_cast<double>(max - min);
    auto x_of = [&](const Rational& v) {
        if (span == 0.0)
            return width / 2;
        return margin + (width - 2 * margin) * static_cast<double>(v - min) / span;
    };
    std::ostringstream os;
    os << std::fixed << std::setprecision(1);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"160\" viewBox=\"0 0 " << width << " 160\">\n";
    os << "  <line x1=\"" << margin << "\" y1=\"" << axis_y << "\" x2=\"" << width - margin
       << "\" y2=\"" << axis_y << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const auto& cl : levels) {
        const double x = x_of(cl.value);
        os << "  <line x1=\"" << x << "\" y1=\"" << axis_y - 8 << "\" x2=\"" << x
           << "\" y2=\"" << axis_y + 8 << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        os << "  <text x=\"" << x << "\" y=\"" << axis_y + 28
           << "\" text-anchor=\"middle\" font-size=\"14\">" << rational_str(cl.value)
           << "</text>\n";
        os << "  <text x=\"" << x << "\" y=\"" << axis_y - 16
           << "\" text-anchor=\"middle\" font-size=\"12\">" << cl.fixed_points.size()
           << "</text>\n";
    }
    if (level) {
        const double x = x_of(*level);
        os << "  <circle cx=\"" << x << "\" cy=\"" << axis_y
           << "\" r=\"5\" fill=\"crimson\"/>\n";
        os << "  <text x=\"" << x << "\" y=\"" << axis_y + 48
           << "\" text-anchor=\"middle\" font-size=\"13\" fill=\"crimson\">level "
           << rational_str(*level) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace symquot

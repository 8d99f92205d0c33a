#include "symquot/desing.hpp"
#include "symquot/equiv.hpp"
#include "symquot/errors.hpp"
#include "symquot/les.hpp"
#include "symquot/model.hpp"
#include "symquot/polygon.hpp"
#include "symquot/report.hpp"
#include "symquot/spec_io.hpp"
#include "symquot/wallcross.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace symquot;

constexpr int kExitValidation = 2;
constexpr int kExitInconsistency = 3;

struct CliOptions {
    std::string spec_path;
    std::string json_path;
    std::string svg_path;
    std::optional<std::string> level_text;
    int lplus = 0;
    int lminus = 0;
    std::vector<std::string> apol_lengths;
};

Rational query_level(const CliOptions& opt, const ModelSpec& spec) {
    if (opt.level_text)
        return parse_rational(*opt.level_text);
    if (spec.level)
        return *spec.level;
    return 0;
}

// Reduction at level q is the zero-level reduction of the shifted momentum map.
SphereProductModel shifted_model(const SphereProductModel& m, const Rational& level) {
    SphereProductModel s = m;
    s.shift -= level;
    return s;
}

std::vector<CriticalLevel> projective_critical_levels(const WeightedProjectiveModel& m) {
    std::vector<CriticalLevel> out;
    for (auto& c : projective_fixed_components(m))
        out.push_back(CriticalLevel{c.value, {c}});
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot write file '" + path + "'");
    out << content;
}

int top_degree(const SphereProductModel& m) { return 2 * m.size() - 2; }

void emit(const ResultDocument& doc, const CliOptions& opt) {
    if (!opt.json_path.empty())
        write_file(opt.json_path, doc.dump());
}

void print_apol_report(const ApolReport& rep, ResultDocument& doc) {
    const int top = top_degree(rep.model);
    std::cout << "abelian polygon space at level " << rational_str(rep.level) << ": "
              << verdict_str(rep.verdict) << "\n";
    doc.add_polygon_verdict(rep.verdict, rep.poincare_duality);
    doc.add_critical_values(critical_values(rep.model));
    switch (rep.verdict) {
    case PolygonVerdict::Empty:
        std::cout << "level set is empty\n";
        return;
    case PolygonVerdict::DegeneratePoint:
        std::cout << "level set is a single fixed configuration; the quotient is a point\n";
        doc.add_reduced(rep.level, rep.betti, 0);
        return;
    case PolygonVerdict::Regular:
        std::cout << format_poincare_line("betti", rep.betti, top);
        std::cout << "poincare duality: " << (rep.poincare_duality ? "ok" : "FAILS") << "\n";
        doc.add_reduced(rep.level, rep.betti, top);
        return;
    case PolygonVerdict::Singular:
        break;
    }
    std::cout << format_poincare_line("desing", *rep.desing, top);
    std::cout << format_singular_betti(*rep.collapse, *rep.les, top);
    std::cout << "poincare duality: " << (rep.poincare_duality ? "ok" : "fails") << "\n";
    std::cout << format_les_table(*rep.les);
    for (const auto& s : rep.singular_points)
        std::cout << "link of " << format_poincare_line(
                         "singular point", s.link_dims, s.link_dims.max_degree());
    std::cout << format_kirwan(*rep.kirwan);
    doc.add_desing(*rep.desing, top);
    doc.add_singular_betti(*rep.collapse, *rep.les, top);
    doc.add_les_table(*rep.les);
    doc.add_links(rep.singular_points);
    doc.add_kirwan(*rep.kirwan);
}

int run_fixed_points(const CliOptions& opt) {
    const ModelSpec spec = parse_spec_file(opt.spec_path);
    ResultDocument doc(spec);
    std::vector<FixedPointData> points;
    if (spec.kind == ModelKind::WeightedProjective)
        points = projective_fixed_components(spec.projective_model());
    else if (spec.kind == ModelKind::Apol)
        points = enumerate_fixed_points(apol_model(spec.polygon_spec()).first);
    else
        points = enumerate_fixed_points(spec.sphere_model());
    std::cout << format_fixed_points(points);
    doc.add_fixed_points(points);
    emit(doc, opt);
    return 0;
}

int run_critical_values(const CliOptions& opt) {
    const ModelSpec spec = parse_spec_file(opt.spec_path);
    ResultDocument doc(spec);
    std::vector<CriticalLevel> levels;
    if (spec.kind == ModelKind::WeightedProjective)
        levels = projective_critical_levels(spec.projective_model());
    else if (spec.kind == ModelKind::Apol)
        levels = critical_values(apol_model(spec.polygon_spec()).first);
    else
        levels = critical_values(spec.sphere_model());
    std::cout << format_critical_values(levels);
    doc.add_critical_values(levels);
    emit(doc, opt);
    return 0;
}

int run_reduce(const CliOptions& opt) {
    const ModelSpec spec = parse_spec_file(opt.spec_path);
    ResultDocument doc(spec);
    const Rational level = query_level(opt, spec);
    PoincarePolynomial p;
    int top = 0;
    if (spec.kind == ModelKind::WeightedProjective) {
        const auto m = spec.projective_model();
        p = projective_reduced_poincare(m, level);
        top = std::max(2 * static_cast<int>(m.weights.size()) - 4, 0);
    } else {
        const auto m = spec.kind == ModelKind::Apol ? apol_model(spec.polygon_spec()).first
                                                    : spec.sphere_model();
        p = reduced_poincare(m, level);
        top = top_degree(m);
    }
    std::cout << format_poincare_line("betti", p, top);
    doc.add_reduced(level, p, top);
    emit(doc, opt);
    return 0;
}

SphereProductModel sphere_or_apol(const ModelSpec& spec, const char* command) {
    if (spec.kind == ModelKind::SphereProduct)
        return spec.sphere_model();
    if (spec.kind == ModelKind::Apol)
        return apol_model(spec.polygon_spec()).first;
    throw ValidationError(std::string(command) + " needs a sphere_product or apol model");
}

int run_desing(const CliOptions& opt) {
    const ModelSpec spec = parse_spec_file(opt.spec_path);
    ResultDocument doc(spec);
    const auto m = shifted_model(sphere_or_apol(spec, "desing"), query_level(opt, spec));
    const auto p = desing_poincare(m);
    std::cout << format_poincare_line("desing", p, top_degree(m));
    doc.add_desing(p, top_degree(m));
    emit(doc, opt);
    return 0;
}

int run_singular_betti(const CliOptions& opt) {
    const ModelSpec spec = parse_spec_file(opt.spec_path);
    ResultDocument doc(spec);
    const auto m = shifted_model(sphere_or_apol(spec, "singular-betti"), query_level(opt, spec));
    const auto table = singular_betti_collapse(m);
    const auto les = les_assemble(m);
    std::cout << format_singular_betti(table, les, top_degree(m));
    doc.add_singular_betti(table, les, top_degree(m));
    emit(doc, opt);
    return 0;
}

int run_les_table(const CliOptions& opt) {
    const ModelSpec spec = parse_spec_file(opt.spec_path);
    ResultDocument doc(spec);
    const auto m = shifted_model(sphere_or_apol(spec, "les-table"), query_level(opt, spec));
    const auto les = les_assemble(m);
    std::cout << format_les_table(les);
    doc.add_les_table(les);
    emit(doc, opt);
    return 0;
}

int run_link(const CliOptions& opt) {
    const LinkData link{opt.lplus, opt.lminus};
    const auto p = link_cohomology(link);
    std::cout << format_poincare_line("link betti", p, 2 * (link.ell_plus + link.ell_minus) - 3);
    if (!opt.json_path.empty()) {
        ModelSpec dummy;
        ResultDocument doc(dummy);
        doc.add_link(link, p);
        write_file(opt.json_path, doc.dump());
    }
    return 0;
}

int run_apol(const CliOptions& opt) {
    ModelSpec spec;
    spec.kind = ModelKind::Apol;
    for (const auto& s : opt.apol_lengths)
        spec.lengths.push_back(parse_rational(s));
    const auto rep = apol_report(PolygonSpec{spec.lengths});
    spec.level = rep.level;
    ResultDocument doc(spec);
    print_apol_report(rep, doc);
    emit(doc, opt);
    return 0;
}

int run_report(const CliOptions& opt) {
    const ModelSpec spec = parse_spec_file(opt.spec_path);
    ResultDocument doc(spec);

    if (spec.kind == ModelKind::Apol) {
        const auto rep = apol_report(spec.polygon_spec());
        print_apol_report(rep, doc);
        emit(doc, opt);
        return 0;
    }

    if (spec.kind == ModelKind::WeightedProjective) {
        const auto m = spec.projective_model();
        const auto points = projective_fixed_components(m);
        std::cout << format_fixed_points(points);
        doc.add_fixed_points(points);
        doc.add_critical_values(projective_critical_levels(m));
        if (spec.level) {
            const int top = std::max(2 * static_cast<int>(m.weights.size()) - 4, 0);
            const auto p = projective_reduced_poincare(m, *spec.level);
            std::cout << format_poincare_line("betti", p, top);
            doc.add_reduced(*spec.level, p, top);
        }
        emit(doc, opt);
        return 0;
    }

    const auto base = spec.sphere_model();
    const Rational level = query_level(opt, spec);
    const auto m = shifted_model(base, level);
    const int top = top_degree(m);

    const auto points = enumerate_fixed_points(base);
    const auto levels = critical_values(base);
    std::cout << format_fixed_points(points) << format_critical_values(levels);
    doc.add_fixed_points(points);
    doc.add_critical_values(levels);

    const Regularity reg = is_regular(base, level);
    doc.add_regularity(level, reg);
    if (reg != Regularity::Critical) {
        const auto p = reduced_poincare(base, level);
        std::cout << "level " << rational_str(level) << " is "
                  << (reg == Regularity::Regular ? "regular" : "outside the momentum image")
                  << "\n"
                  << format_poincare_line("betti", p, top);
        const auto kirwan = kirwan_report(m);
        std::cout << format_kirwan(kirwan);
        doc.add_reduced(level, p, top);
        doc.add_kirwan(kirwan);
        emit(doc, opt);
        return 0;
    }

    std::cout << "level " << rational_str(level) << " is critical; singular pipeline\n";
    const auto desing = desing_poincare(m);
    const auto les = les_assemble(m);
    const auto table = singular_betti_collapse(m);
    const auto kirwan = kirwan_report(m);
    std::vector<SingularPointReport> links;
    for (const auto& f : enumerate_fixed_points(m))
        if (f.value == 0)
            links.push_back(SingularPointReport{f, LinkData{f.ell_plus, f.ell_minus},
                                                link_cohomology(LinkData{f.ell_plus, f.ell_minus})});

    std::cout << format_poincare_line("desing", desing, top);
    std::cout << format_singular_betti(table, les, top);
    std::cout << format_les_table(les);
    for (const auto& s : links)
        std::cout << "link of singular point " << rational_str(s.point.value) << ": "
                  << s.link_dims.str() << "\n";
    std::cout << format_kirwan(kirwan);

    doc.add_desing(desing, top);
    doc.add_singular_betti(table, les, top);
    doc.add_les_table(les);
    doc.add_links(links);
    doc.add_kirwan(kirwan);
    emit(doc, opt);
    return 0;
}

int run_diagram(const CliOptions& opt) {
    const ModelSpec spec = parse_spec_file(opt.spec_path);
    std::vector<CriticalLevel> levels;
    Rational lo, hi;
    std::optional<Rational> marker = spec.level;
    if (opt.level_text)
        marker = parse_rational(*opt.level_text);
    if (spec.kind == ModelKind::WeightedProjective) {
        const auto m = spec.projective_model();
        levels = projective_critical_levels(m);
        lo = levels.front().value;
        hi = levels.back().value;
    } else {
        const auto m = spec.kind == ModelKind::Apol ? apol_model(spec.polygon_spec()).first
                                                    : spec.sphere_model();
        levels = critical_values(m);
        lo = momentum_min(m);
        hi = momentum_max(m);
        if (spec.kind == ModelKind::Apol && !marker)
            marker = spec.lengths.back();
    }
    write_file(opt.svg_path, momentum_diagram_svg(levels, lo, hi, marker));
    std::cout << "wrote " << opt.svg_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology calculator for circle-reduced sphere products,\n"
                 "weighted projective fibers and abelian polygon spaces"};
    app.require_subcommand(1);

    CliOptions opt;
    app.add_option("--json", opt.json_path, "write a machine-readable result document");

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("spec", opt.spec_path, "model spec file (TOML or JSON)")->required();
    };

    auto* fixed = app.add_subcommand("fixed-points", "fixed points with momentum values and weights");
    add_spec(fixed);
    auto* crit = app.add_subcommand("critical-values", "critical values of the momentum map");
    add_spec(crit);
    auto* reduce = app.add_subcommand("reduce", "Betti numbers of the reduced space at a regular level");
    add_spec(reduce);
    std::string reduce_level;
    reduce->add_option("--level", reduce_level, "reduction level (rational)");
    auto* desing = app.add_subcommand("desing", "Betti numbers of the partial desingularization");
    add_spec(desing);
    desing->add_option("--level", reduce_level, "reduction level (rational)");
    auto* singular = app.add_subcommand("singular-betti", "Betti numbers of the singular quotient");
    add_spec(singular);
    singular->add_option("--level", reduce_level, "reduction level (rational)");
    auto* les = app.add_subcommand("les-table", "long exact sequence table");
    add_spec(les);
    les->add_option("--level", reduce_level, "reduction level (rational)");
    auto* link = app.add_subcommand("link", "cohomology of a cone-singularity link");
    link->add_option("--lplus", opt.lplus, "positive weight count")->required();
    link->add_option("--lminus", opt.lminus, "negative weight count")->required();
    auto* apol = app.add_subcommand("apol", "abelian polygon space report from side lengths");
    apol->add_option("lengths", opt.apol_lengths, "side lengths r1 .. rn (last = level)")
        ->required()
        ->expected(-3);
    auto* report = app.add_subcommand("report", "full pipeline report");
    add_spec(report);
    report->add_option("--level", reduce_level, "reduction level (rational)");
    auto* diagram = app.add_subcommand("diagram", "momentum-line SVG diagram");
    add_spec(diagram);
    diagram->add_option("--svg", opt.svg_path, "output SVG path")->required();
    diagram->add_option("--level", reduce_level, "level marker (rational)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }
    if (!reduce_level.empty())
        opt.level_text = reduce_level;

    try {
        if (fixed->parsed())
            return run_fixed_points(opt);
        if (crit->parsed())
            return run_critical_values(opt);
        if (reduce->parsed())
            return run_reduce(opt);
        if (desing->parsed())
            return run_desing(opt);
        if (singular->parsed())
            return run_singular_betti(opt);
        if (les->parsed())
            return run_les_table(opt);
        if (link->parsed())
            return run_link(opt);
        if (apol->parsed())
            return run_apol(opt);
        if (report->parsed())
            return run_report(opt);
        if (diagram->parsed())
            return run_diagram(opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistency;
    }
    return kExitValidation;
}

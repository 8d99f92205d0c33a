#pragma once

#include "symquot/equiv.hpp"
#include "symquot/les.hpp"
#include "symquot/model.hpp"
#include "symquot/polygon.hpp"
#include "symquot/spec_io.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace symquot {

inline constexpr const char* kToolName = "symquot";
inline constexpr const char* kToolVersion = "0.1.0";

/// Machine-readable result document with deterministic key order and exact
/// "p/q" rationals. Re-serializing a parsed document is byte-identical.
class ResultDocument {
public:
    explicit ResultDocument(const ModelSpec& spec);

    void add_fixed_points(const std::vector<FixedPointData>& points);
    void add_critical_values(const std::vector<CriticalLevel>& levels);
    void add_regularity(const Rational& level, Regularity r);
    void add_reduced(const Rational& level, const PoincarePolynomial& p, int top);
    void add_desing(const PoincarePolynomial& p, int top);
    // Betti table of the singular quotient with per-degree derivation flags
    // computed from the exact-sequence report.
    void add_singular_betti(const BettiTable& table, const LesReport& les, int top);
    void add_les_table(const LesReport& les);
    void add_links(const std::vector<SingularPointReport>& points);
    void add_link(const LinkData& link, const PoincarePolynomial& dims);
    void add_kirwan(const KirwanReport& report);
    void add_polygon_verdict(PolygonVerdict verdict, bool poincare_duality);

    std::string dump() const; // two-space indentation, trailing newline
    const nlohmann::ordered_json& json() const { return doc_; }

private:
    nlohmann::ordered_json doc_;
};

// Derivation flag of one solved degree: "forced" when exactness alone pins
// the value, "derived" when it rests on the restriction-rank identification
// (an oracle names the cross-check), "paper-anchored" otherwise.
struct DerivationFlag {
    std::string flag;
    std::optional<std::string> oracle;
};
DerivationFlag derivation_flag(const LesRow& row);

std::string verdict_str(PolygonVerdict v);
std::string status_str(DegreeStatus s);

// Plain-text tables for the CLI.
std::string format_fixed_points(const std::vector<FixedPointData>& points);
std::string format_critical_values(const std::vector<CriticalLevel>& levels);
std::string format_poincare_line(const std::string& name, const PoincarePolynomial& p, int top);
std::string format_les_table(const LesReport& les);
std::string format_kirwan(const KirwanReport& report);
std::string format_singular_betti(const BettiTable& table, const LesReport& les, int top);

// Momentum-line diagram: one horizontal axis, one labelled tick per critical
// value with its fixed-point count, and an optional marker for the queried
// level.
std::string momentum_diagram_svg(const std::vector<CriticalLevel>& levels,
                                 const Rational& min, const Rational& max,
                                 const std::optional<Rational>& level);

} // namespace symquot

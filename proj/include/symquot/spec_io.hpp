#pragma once

#include "symquot/model.hpp"
#include "symquot/polygon.hpp"
#include "symquot/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symquot {

enum class ModelKind { SphereProduct, WeightedProjective, Apol };

/// Parsed input document. Rationals are accepted as integers or as strings
/// "p/q"; nothing is ever read through floating point.
struct ModelSpec {
    ModelKind kind = ModelKind::SphereProduct;
    std::vector<Rational> radii;   // sphere_product
    std::vector<int> speeds;       // sphere_product
    Rational shift = 0;            // sphere_product
    std::vector<int> weights;      // weighted_projective
    std::vector<Rational> lengths; // apol
    std::optional<Rational> level;

    SphereProductModel sphere_model() const;
    WeightedProjectiveModel projective_model() const;
    PolygonSpec polygon_spec() const;
};

enum class SpecFormat { Json, Toml };

// Format chosen by extension (.json / .toml); anything else is sniffed by
// the leading character.
ModelSpec parse_spec_file(const std::string& path);
ModelSpec parse_spec_text(const std::string& text, SpecFormat format);

} // namespace symquot

#include "symquot/spec_io.hpp"

#include "symquot/errors.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace symquot {

SphereProductModel ModelSpec::sphere_model() const {
    if (kind != ModelKind::SphereProduct)
        throw ValidationError("spec is not a sphere_product model");
    SphereProductModel m{radii, speeds, shift};
    m.validate();
    return m;
}

WeightedProjectiveModel ModelSpec::projective_model() const {
    if (kind != ModelKind::WeightedProjective)
        throw ValidationError("spec is not a weighted_projective model");
    WeightedProjectiveModel m{weights};
    m.validate();
    return m;
}

PolygonSpec ModelSpec::polygon_spec() const {
    if (kind != ModelKind::Apol)
        throw ValidationError("spec is not an apol model");
    PolygonSpec p{lengths};
    p.validate();
    return p;
}

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v, const std::string& key) {
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    throw ValidationError("field '" + key + "' must be an integer or a 'p/q' string");
}

std::vector<Rational> rational_list(const json& v, const std::string& key) {
    if (!v.is_array())
        throw ValidationError("field '" + key + "' must be an array");
    std::vector<Rational> out;
    for (const auto& e : v)
        out.push_back(rational_from_json(e, key));
    return out;
}

std::vector<int> int_list(const json& v, const std::string& key) {
    if (!v.is_array())
        throw ValidationError("field '" + key + "' must be an array");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw ValidationError("field '" + key + "' must contain integers");
        out.push_back(e.get<int>());
    }
    return out;
}

ModelSpec spec_from_json(const json& doc) {
    if (!doc.is_object())
        throw ValidationError("spec document must be a table of keys");
    ModelSpec spec;
    const std::string kind = doc.value("kind", std::string{});
    if (kind == "sphere_product")
        spec.kind = ModelKind::SphereProduct;
    else if (kind == "weighted_projective")
        spec.kind = ModelKind::WeightedProjective;
    else if (kind == "apol")
        spec.kind = ModelKind::Apol;
    else
        throw ValidationError("unknown or missing kind '" + kind +
                              "' (expected sphere_product, weighted_projective or apol)");

    for (const auto& [key, value] : doc.items()) {
        if (key == "kind")
            continue;
        if (key == "radii")
            spec.radii = rational_list(value, key);
        else if (key == "speeds")
            spec.speeds = int_list(value, key);
        else if (key == "shift")
            spec.shift = rational_from_json(value, key);
        else if (key == "weights")
            spec.weights = int_list(value, key);
        else if (key == "lengths")
            spec.lengths = rational_list(value, key);
        else if (key == "level")
            spec.level = rational_from_json(value, key);
        else
            throw ValidationError("unknown spec field '" + key + "'");
    }

    switch (spec.kind) {
    case ModelKind::SphereProduct:
        if (spec.radii.empty())
            throw ValidationError("sphere_product spec needs 'radii'");
        if (spec.speeds.empty())
            spec.speeds.assign(spec.radii.size(), 1);
        break;
    case ModelKind::WeightedProjective:
        if (spec.weights.empty())
            throw ValidationError("weighted_projective spec needs 'weights'");
        break;
    case ModelKind::Apol:
        if (spec.lengths.empty())
            throw ValidationError("apol spec needs 'lengths'");
        break;
    }
    return spec;
}

// Minimal TOML subset: one flat table of `key = value` lines where a value
// is a quoted string, an integer, or a single-line array of those. Enough
// for the spec schema; anything else is rejected.
class TomlSubsetParser {
public:
    explicit TomlSubsetParser(const std::string& text) : text_(text) {}

    json parse() {
        json doc = json::object();
        std::istringstream in(text_);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            strip_comment(line);
            const std::string trimmed = trim(line);
            if (trimmed.empty())
                continue;
            const auto eq = trimmed.find('=');
            if (eq == std::string::npos)
                fail(lineno, "expected 'key = value'");
            const std::string key = trim(trimmed.substr(0, eq));
            const std::string value = trim(trimmed.substr(eq + 1));
            if (key.empty() || value.empty())
                fail(lineno, "expected 'key = value'");
            doc[key] = parse_value(value, lineno);
        }
        return doc;
    }

private:
    static void strip_comment(std::string& line) {
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"')
                quoted = !quoted;
            else if (line[i] == '#' && !quoted) {
                line.erase(i);
                return;
            }
        }
    }

    static std::string trim(const std::string& s) {
        std::size_t b = 0, e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
            ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
            --e;
        return s.substr(b, e - b);
    }

    json parse_value(const std::string& v, int lineno) const {
        if (v.front() == '[') {
            if (v.back() != ']')
                fail(lineno, "arrays must be closed on the same line");
            json arr = json::array();
            std::string inner = v.substr(1, v.size() - 2);
            std::string item;
            bool quoted = false;
            for (char ch : inner) {
                if (ch == '"')
                    quoted = !quoted;
                if (ch == ',' && !quoted) {
                    if (!trim(item).empty())
                        arr.push_back(parse_scalar(trim(item), lineno));
                    item.clear();
                } else {
                    item += ch;
                }
            }
            if (!trim(item).empty())
                arr.push_back(parse_scalar(trim(item), lineno));
            return arr;
        }
        return parse_scalar(v, lineno);
    }

    json parse_scalar(const std::string& v, int lineno) const {
        if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
            return json(v.substr(1, v.size() - 2));
        try {
            std::size_t used = 0;
            const long long n = std::stoll(v, &used);
            if (used == v.size())
                return json(n);
        } catch (const std::exception&) {
        }
        fail(lineno, "unsupported value '" + v + "' (use integers or quoted strings)");
        return json(); // unreachable
    }

    [[noreturn]] void fail(int lineno, const std::string& message) const {
        throw ValidationError("toml line " + std::to_string(lineno) + ": " + message);
    }

    const std::string& text_;
};

} // namespace

ModelSpec parse_spec_text(const std::string& text, SpecFormat format) {
    if (format == SpecFormat::Json) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ValidationError(std::string("invalid json: ") + e.what());
        }
        return spec_from_json(doc);
    }
    return spec_from_json(TomlSubsetParser(text).parse());
}

ModelSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open spec file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    SpecFormat format;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        format = SpecFormat::Json;
    } else if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml") {
        format = SpecFormat::Toml;
    } else {
        std::size_t i = 0;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        format = (i < text.size() && text[i] == '{') ? SpecFormat::Json : SpecFormat::Toml;
    }
    return parse_spec_text(text, format);
}

} // namespace symquot

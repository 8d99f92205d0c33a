#include "symquot/errors.hpp"
#include "symquot/les.hpp"
#include "symquot/report.hpp"
#include "symquot/spec_io.hpp"
#include "symquot/wallcross.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace symquot;

TEST_CASE("json spec parsing") {
    const auto spec = parse_spec_text(
        R"({"kind":"sphere_product","radii":["1","3/2",2],"speeds":[1,-2,1],"shift":"1/2","level":0})",
        SpecFormat::Json);
    CHECK(spec.kind == ModelKind::SphereProduct);
    CHECK(spec.radii == std::vector<Rational>{1, Rational(3, 2), 2});
    CHECK(spec.speeds == std::vector<int>{1, -2, 1});
    CHECK(spec.shift == Rational(1, 2));
    REQUIRE(spec.level.has_value());
    CHECK(*spec.level == 0);
    spec.sphere_model().validate();
}

TEST_CASE("json spec defaults and errors") {
    const auto spec = parse_spec_text(R"({"kind":"sphere_product","radii":[1,1]})",
                                      SpecFormat::Json);
    CHECK(spec.speeds == std::vector<int>{1, 1}); // unit speeds by default
    CHECK_FALSE(spec.level.has_value());

    CHECK_THROWS_AS(parse_spec_text("{", SpecFormat::Json), ValidationError);
    CHECK_THROWS_AS(parse_spec_text(R"({"kind":"nope"})", SpecFormat::Json), ValidationError);
    CHECK_THROWS_AS(parse_spec_text(R"({"kind":"sphere_product"})", SpecFormat::Json),
                    ValidationError);
    CHECK_THROWS_AS(
        parse_spec_text(R"({"kind":"sphere_product","radii":[1],"frequency":3})",
                        SpecFormat::Json),
        ValidationError);
    CHECK_THROWS_AS(
        parse_spec_text(R"({"kind":"sphere_product","radii":[0.5]})", SpecFormat::Json),
        ValidationError); // floats are rejected, rationals are strings
}

TEST_CASE("toml spec parsing") {
    const auto spec = parse_spec_text(
        "# weighted projective fiber\n"
        "kind = \"weighted_projective\"\n"
        "weights = [1, 1, -1, -1]\n"
        "level = \"0\"\n",
        SpecFormat::Toml);
    CHECK(spec.kind == ModelKind::WeightedProjective);
    CHECK(spec.weights == std::vector<int>{1, 1, -1, -1});
    CHECK(*spec.level == 0);

    const auto apol = parse_spec_text(
        "kind = \"apol\"\n"
        "lengths = [\"1\", \"1\", \"1\", \"1\", \"1\"]\n",
        SpecFormat::Toml);
    CHECK(apol.kind == ModelKind::Apol);
    CHECK(apol.lengths.size() == 5);

    CHECK_THROWS_AS(parse_spec_text("kind\n", SpecFormat::Toml), ValidationError);
    CHECK_THROWS_AS(parse_spec_text("kind = [1,\n2]\n", SpecFormat::Toml), ValidationError);
    CHECK_THROWS_AS(parse_spec_text("kind = 1.5\n", SpecFormat::Toml), ValidationError);
}

TEST_CASE("toml and json specs of one model agree") {
    const auto a = parse_spec_text(
        R"({"kind":"sphere_product","radii":["3/2",1],"speeds":[2,-1],"shift":"-1/3"})",
        SpecFormat::Json);
    const auto b = parse_spec_text("kind = \"sphere_product\"\n"
                                   "radii = [\"3/2\", 1]\n"
                                   "speeds = [2, -1]\n"
                                   "shift = \"-1/3\"\n",
                                   SpecFormat::Toml);
    CHECK(a.radii == b.radii);
    CHECK(a.speeds == b.speeds);
    CHECK(a.shift == b.shift);
}

TEST_CASE("result document round-trips byte-identically") {
    ModelSpec spec;
    spec.kind = ModelKind::SphereProduct;
    spec.radii = {1, Rational(3, 2), 1, 1};
    spec.speeds = {1, 1, 1, 1};
    spec.shift = Rational(-1, 2);
    spec.level = Rational(0);

    SphereProductModel m{spec.radii, spec.speeds, spec.shift};
    ResultDocument doc(spec);
    doc.add_fixed_points(enumerate_fixed_points(m));
    doc.add_critical_values(critical_values(m));
    const Rational level(1, 3); // never a sum of half-integers: regular
    doc.add_reduced(level, reduced_poincare(m, level), 2 * m.size() - 2);

    const std::string once = doc.dump();
    const auto parsed = nlohmann::ordered_json::parse(once);
    CHECK(parsed.dump(2) + "\n" == once);
    CHECK(parsed["tool"]["name"] == "symquot");
    CHECK(parsed["input"]["radii"][1] == "3/2");
}

TEST_CASE("derivation flags carry oracles exactly when derived") {
    SphereProductModel four;
    four.radii.assign(4, 1);
    four.speeds.assign(4, 1);
    const auto les = les_assemble(four);
    bool saw_derived = false;
    for (const auto& row : les.rows) {
        const auto flag = derivation_flag(row);
        if (flag.flag == "derived") {
            saw_derived = true;
            CHECK(flag.oracle.has_value());
        } else {
            CHECK_FALSE(flag.oracle.has_value());
        }
    }
    CHECK(saw_derived);
}

TEST_CASE("momentum diagram lists every critical value") {
    SphereProductModel m;
    m.radii.assign(4, 1);
    m.speeds.assign(4, 1);
    const auto svg = momentum_diagram_svg(critical_values(m), momentum_min(m),
                                          momentum_max(m), Rational(1));
    CHECK(svg.find("<svg") == 0);
    for (const char* label : {">-4<", ">-2<", ">0<", ">2<", ">4<"})
        CHECK(svg.find(label) != std::string::npos);
    CHECK(svg.find("level 1") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

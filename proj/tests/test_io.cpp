#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contactlie/io.hpp"
#include "contactlie/presets.hpp"

using namespace contactlie;

TEST_CASE("algebra_from_json: heisenberg document") {
    const Json doc = Json::parse(R"({
        "labels": ["v0", "v1", "v2"],
        "brackets": {"01": [0,0,0], "02": [0,0,0], "12": [-1,0,0]},
        "xi": [[0,1,0],[0,0,1]],
        "alpha": [1,0,0]
    })");
    const auto [c, d] = algebra_from_json(doc);
    CHECK(validate_jacobi(c).pass);
    const auto check = is_contact(c, d);
    CHECK(check.contact);
    CHECK(check.scalar == doctest::Approx(-1.0));
    // Antisymmetric completion is implicit.
    CHECK((c.bracket(2, 1) - Vec3{1, 0, 0}).norm() == 0.0);
}

TEST_CASE("algebra_from_json: missing pieces are input errors") {
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"xi": [[0,1,0],[0,0,1]]})")), InputError);
    CHECK_THROWS_AS(
        algebra_from_json(Json::parse(
            R"({"brackets": {"01": [0,0,0], "02": [0,0,0]}, "xi": [[0,1,0],[0,0,1]], "alpha": [1,0,0]})")),
        InputError);
    CHECK_THROWS_AS(
        algebra_from_json(Json::parse(
            R"({"brackets": {"01": [0,0,0], "02": [0,0,0], "12": [-1,0]}, "xi": [[0,1,0],[0,0,1]], "alpha": [1,0,0]})")),
        InputError);
}

TEST_CASE("classification serializes with stable fields") {
    const auto& p = preset("heisenberg");
    const auto res = classify(canonical_frame(p.constants, p.data));
    const Json j = to_json(res);
    CHECK(j["case"] == "Case3Heis");
    CHECK(j["A"] == Json::array({1.0, 0.0, 0.0}));
    CHECK(j["C"] == Json::array({0.0, 1.0, 0.0}));
    CHECK(j.contains("h_span"));
}

TEST_CASE("su2 classification serializes without chart data") {
    const auto& p = preset("su2");
    const Json j = to_json(classify(canonical_frame(p.constants, p.data)));
    CHECK(j["case"] == "Su2");
    CHECK_FALSE(j.contains("A"));
}

TEST_CASE("unknown preset names list the catalog") {
    CHECK_THROWS_WITH_AS(preset("nope"), doctest::Contains("heisenberg"), InputError);
}

#include "ptk/catalog.hpp"
#include "ptk/error.hpp"
#include "ptk/scene.hpp"

#include <doctest.h>

using namespace ptk;
using nlohmann::json;

namespace {

json minimal() {
    return json::parse(R"({
      "format": 1,
      "name": "t",
      "chart": {"dim": 2, "coords": ["x", "y"], "periodic": [false, false]},
      "poisson": {"terms": [{"indices": [0, 1], "coeff": "x"}]}
    })");
}

}  // namespace

TEST_CASE("builtin scenes round trip through json") {
    for (const Scene& s : builtin_scenes()) {
        INFO(s.name);
        const auto j = to_json(s);
        const Scene back = scene_from_json(json::parse(j.dump()));
        CHECK(to_json(back).dump() == j.dump());
        if (s.symbolic) CHECK_NOTHROW(compile(s));
    }
    CHECK(find_builtin("so3"));
    CHECK_FALSE(find_builtin("nope"));
}

TEST_CASE("minimal scene compiles") {
    const Scene s = scene_from_json(minimal());
    const CompiledScene c = compile(s);
    CHECK(c.pi.dim() == 2);
    CHECK(terms_of(c.pi.bivector, s.chart.coords).size() == 1);
    CHECK(s.symbolic);
}

TEST_CASE("scene validation") {
    SUBCASE("unknown key") {
        json j = minimal();
        j["colour"] = "red";
        CHECK_THROWS_AS(scene_from_json(j), InputError);
    }
    SUBCASE("index order") {
        json j = minimal();
        j["poisson"]["terms"][0]["indices"] = {1, 0};
        CHECK_THROWS_AS(scene_from_json(j), InputError);
    }
    SUBCASE("index range") {
        json j = minimal();
        j["poisson"]["terms"][0]["indices"] = {0, 2};
        CHECK_THROWS_AS(scene_from_json(j), InputError);
    }
    SUBCASE("bad coefficient") {
        json j = minimal();
        j["poisson"]["terms"][0]["coeff"] = "x +* y";
        CHECK_THROWS_AS(scene_from_json(j), InputError);
    }
    SUBCASE("trig in a coefficient") {
        json j = minimal();
        j["poisson"]["terms"][0]["coeff"] = "sin(x)";
        CHECK_THROWS_AS(scene_from_json(j), InputError);
    }
    SUBCASE("wrong format version") {
        json j = minimal();
        j["format"] = 2;
        CHECK_THROWS_AS(scene_from_json(j), InputError);
    }
    SUBCASE("coefficient on a periodic coordinate") {
        json j = minimal();
        j["chart"]["periodic"] = {false, true};
        j["poisson"]["terms"][0]["coeff"] = "y";
        CHECK_THROWS_AS(scene_from_json(j), InputError);
    }
    SUBCASE("missing file") { CHECK_THROWS_AS(load_scene_file("/nonexistent/scene.json"), InputError); }
}

#include "ptk/catalog.hpp"
#include "ptk/error.hpp"
#include "ptk/report.hpp"

#include <doctest.h>

using namespace ptk;

TEST_CASE("flat circle bundles") {
    CHECK(flat_bundle_check(2, 1).status == Status::Fails);
    CHECK(flat_bundle_check(2, -2).status == Status::Fails);
    CHECK(flat_bundle_check(2, 3).status == Status::Inconclusive);
    CHECK(flat_bundle_check(2, 0).status == Status::Inconclusive);
    CHECK(flat_bundle_check(1, 0).status == Status::Inconclusive);
    CHECK(flat_bundle_check(5, -8).status == Status::Fails);
    CHECK(flat_bundle_check(5, 9).status == Status::Inconclusive);
    CHECK(flat_bundle_check(2, 1).property == Property::WeakHnpt);
    CHECK(flat_bundle_check(2, 1).rule == "example-3");
}

TEST_CASE("classifier") {
    SUBCASE("named algebras") {
        CHECK(classify_lie3("so3").semisimple);
        CHECK(classify_lie3("sl2").semisimple);
        CHECK(classify_lie3("heisenberg").unimodular);
        CHECK_FALSE(classify_lie3("book-id").unimodular);
        CHECK_THROWS_AS(classify_lie3("e8"), InputError);
    }
    SUBCASE("trace zero is unimodular") {
        const Lie3Classification c = classify_lie3(Matrix{{1, 2}, {3, -1}});
        CHECK(c.unimodular);
        CHECK(c.density_solver_agrees);
        CHECK(c.det == -7);
        CHECK_FALSE(c.circle_exists);
    }
    SUBCASE("exact eigenvalues") {
        CHECK(classify_lie3(Matrix{{1, 2}, {3, 1}}).eigenvalues == std::vector<std::string>{"1 + sqrt(6)", "1 - sqrt(6)"});
        CHECK(classify_lie3(Matrix{{1, -1}, {1, 1}}).eigenvalues == std::vector<std::string>{"1 + i", "1 - i"});
        CHECK(classify_lie3(Matrix{{2, 0}, {0, 3}}).eigen_rational);
    }
    SUBCASE("transverse circles") {
        const Lie3Classification unit = classify_lie3(Matrix{{1, 0}, {0, 2}});
        CHECK(unit.circle_exists);
        CHECK(unit.circle_is_unit);
        CHECK(unit.circle_transversal);
        // symmetric part indefinite: the circle must be an ellipse
        const Lie3Classification ellipse = classify_lie3(Matrix{{1, 5}, {0, 1}});
        CHECK(ellipse.circle_exists);
        CHECK_FALSE(ellipse.circle_is_unit);
        CHECK(ellipse.circle_checked);
        CHECK(ellipse.circle_transversal);
    }
}

TEST_CASE("citations") {
    CHECK(citation("theorem-4").label == "Theorem 4");
    CHECK_FALSE(citation("corollary-2").text.empty());
    CHECK_THROWS_AS(citation("lemma-99"), std::out_of_range);
}

TEST_CASE("verdicts on builtin scenes") {
    const auto run = [](const std::string& name) {
        const CompiledScene c = compile(*find_builtin(name));
        return verdict_engine(c.source, compute_facts(c, SamplingOptions{}));
    };
    CHECK(summary_line(run("s2-log")) == "HNPT fails; weak HNPT holds (Theorem 4)");
    CHECK(summary_line(run("so3")) == "HNPT holds (Theorem 1); weak HNPT holds");
    CHECK(exit_code(run("so3")) == 0);
    CHECK(exit_code(run("s2-log")) == 1);
    for (const Verdict& v : run("reeb-s3")) {
        if (v.status != Status::Inconclusive) CHECK_FALSE(v.cite.text.empty());
    }
}

TEST_CASE("contradictory declarations are rejected") {
    Scene s = *find_builtin("flat-bundle-g2");
    s.annotations.push_back({"saturation_class_nontrivial", "declared"});
    const CompiledScene c = compile(s);
    CHECK_THROWS_AS(verdict_engine(c.source, compute_facts(c, SamplingOptions{})), ContradictionError);
}

TEST_CASE("deck map of the projective plane") {
    const CompiledScene c = compile(*find_builtin("p2-log"));
    const DeckCheck d = deck_map_check(c);
    CHECK(d.preserves);
    CHECK(d.orientation_reversing);
    CHECK(d.involution);
    CHECK(d.jacobian_det == -1);
}

TEST_CASE("report numbers") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-3e-14) == "0");
    CHECK(format_number(6.283185307179586) == "6.28318530718");
    CHECK(format_number(2.0) == "2");
}

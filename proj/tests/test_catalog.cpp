#include <akgeom/catalog.hpp>
#include <akgeom/json_io.hpp>
#include <akgeom/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace akgeom;

TEST_CASE("catalog lists the four families") {
    const auto& entries = catalog();
    REQUIRE(entries.size() == 4);
    REQUIRE(entries[0].name == "abelian");
    REQUIRE(entries[1].name == "rr30");
    REQUIRE(entries[2].name == "r2prime");
    REQUIRE(entries[3].name == "dS");
    REQUIRE(entries[0].unimodular);
    REQUIRE(entries[1].unimodular);
    REQUIRE_FALSE(entries[2].unimodular);
    REQUIRE_FALSE(entries[3].unimodular);
    REQUIRE(entries[3].params == std::vector<std::string>{"lambda"});
    for (int i = 0; i < 3; ++i) REQUIRE(entries[static_cast<size_t>(i)].params.empty());
}

TEST_CASE("rr30 brackets match the motion-algebra table") {
    LieAlgebra g = make_rr30();
    ScalarCtx ctx;
    REQUIRE(g.bracket(Vec::basis(4, 0, ctx), Vec::basis(4, 2, ctx)) ==
            -Vec::basis(4, 1, ctx));
    REQUIRE(g.bracket(Vec::basis(4, 1, ctx), Vec::basis(4, 2, ctx)) == Vec::basis(4, 0, ctx));
    REQUIRE(g.bracket(Vec::basis(4, 0, ctx), Vec::basis(4, 1, ctx)).is_zero());
    REQUIRE(g.bracket(Vec::basis(4, 3, ctx), Vec::basis(4, 0, ctx)).is_zero());
    REQUIRE(g.jacobi_check().ok);
}

TEST_CASE("r2prime brackets match its table") {
    LieAlgebra g = make_r2prime();
    ScalarCtx ctx;
    REQUIRE(g.bracket(Vec::basis(4, 0, ctx), Vec::basis(4, 2, ctx)) == Vec::basis(4, 2, ctx));
    REQUIRE(g.bracket(Vec::basis(4, 0, ctx), Vec::basis(4, 3, ctx)) == Vec::basis(4, 3, ctx));
    REQUIRE(g.bracket(Vec::basis(4, 1, ctx), Vec::basis(4, 2, ctx)) == Vec::basis(4, 3, ctx));
    REQUIRE(g.bracket(Vec::basis(4, 1, ctx), Vec::basis(4, 3, ctx)) ==
            -Vec::basis(4, 2, ctx));
}

TEST_CASE("solvable family satisfies Jacobi at the sampled parameters") {
    for (const Scalar& l : default_lambdas()) {
        LieAlgebra g = make_ds(l);
        REQUIRE(g.jacobi_check().ok);
    }
    REQUIRE_THROWS_AS(make_ds(Scalar::exact(-1)), BadInput);
}

TEST_CASE("unimodularity flags match the trace test") {
    REQUIRE(make_abelian().is_unimodular());
    REQUIRE(make_rr30().is_unimodular());
    REQUIRE_FALSE(make_r2prime().is_unimodular());
    REQUIRE_FALSE(make_ds(Scalar::exact(0)).is_unimodular());
    for (const auto& e : catalog()) {
        std::map<std::string, Scalar> params;
        if (!e.params.empty()) params.emplace("lambda", Scalar::exact(1));
        REQUIRE(make_catalog_algebra(e.name, params).is_unimodular() == e.unimodular);
    }
}

TEST_CASE("catalog lookup validates names and parameters") {
    REQUIRE_THROWS_AS(make_catalog_algebra("nope", {}), BadInput);
    REQUIRE_THROWS_AS(make_catalog_algebra("abelian", {{"lambda", Scalar::exact(1)}}), BadInput);
    REQUIRE_THROWS_AS(make_catalog_algebra("dS", {}), BadInput);
    LieAlgebra g = make_catalog_algebra("dS", {{"lambda", Scalar::exact(1, 2)}});
    REQUIRE(g.c(1, 0, 1) == Scalar::exact(1));
    REQUIRE(g.c(2, 0, 1) == Scalar::exact(-1, 2));
}

TEST_CASE("algebra JSON round trip") {
    LieAlgebra g = make_ds(Scalar::exact(1, 2));
    json j = algebra_to_json(g);
    REQUIRE(j["dim"] == 4);
    for (const auto& b : j["brackets"]) {
        REQUIRE(b["i"].get<int>() >= 1);
        REQUIRE(b["i"].get<int>() < b["j"].get<int>());
        REQUIRE(b["value"].is_string());
    }
    LieAlgebra back = algebra_from_json(j, ScalarCtx{});
    for (int i = 0; i < 4; ++i)
        for (int jj = 0; jj < 4; ++jj)
            for (int k = 0; k < 4; ++k) REQUIRE(back.c(k, i, jj) == g.c(k, i, jj));

    REQUIRE_THROWS_AS(algebra_from_json(json{{"brackets", json::array()}}, ScalarCtx{}),
                      BadInput);
    json bad = algebra_to_json(g);
    bad["brackets"][0]["i"] = 9;
    REQUIRE_THROWS_AS(algebra_from_json(bad, ScalarCtx{}), BadInput);
}

TEST_CASE("metric and structure JSON round trips") {
    RationalSampler rs(13);
    Mat l = rs.lower_triangular(4, 3);
    MetricFrame m(l.transpose() * l, -1);
    json jm = metric_to_json(m);
    MetricFrame back = metric_from_json(jm, ScalarCtx{});
    REQUIRE(back.gram == m.gram);
    REQUIRE(back.orientation == -1);

    Form omega(4, 2);
    omega.set({0, 1}, Scalar::exact(2));
    omega.set({2, 3}, Scalar::exact(-1, 3));
    json js = structure_to_json(m, omega);
    StructureData sd = structure_from_json(js, ScalarCtx{});
    REQUIRE(sd.metric.gram == m.gram);
    REQUIRE(sd.omega == omega);

    REQUIRE_THROWS_AS(metric_from_json(json{{"orientation", 1}}, ScalarCtx{}), BadInput);
    REQUIRE_THROWS_AS(structure_from_json(jm, ScalarCtx{}), BadInput);
    json badkey = js;
    badkey["omega"]["41"] = "1";
    REQUIRE_THROWS_AS(structure_from_json(badkey, ScalarCtx{}), BadInput);
}

TEST_CASE("exact serialization rejects float literals") {
    REQUIRE_THROWS_AS(scalar_from_json(json(1.5), ScalarCtx{}), BadInput);
    REQUIRE(scalar_from_json(json(3), ScalarCtx{}) == Scalar::exact(3));
    REQUIRE(scalar_from_json(json("3/4"), ScalarCtx{}) == Scalar::exact(3, 4));
    Scalar f = scalar_from_json(json(1.5), ScalarCtx{Mode::Float, 1e-9});
    REQUIRE(f.mode() == Mode::Float);
}

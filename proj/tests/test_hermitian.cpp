#include <akgeom/catalog.hpp>
#include <akgeom/frames.hpp>
#include <akgeom/hermitian.hpp>
#include <akgeom/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace akgeom;

namespace {

Vec random_vec(RationalSampler& rs) {
    ScalarCtx ctx;
    Vec v(4, ctx.zero());
    for (int i = 0; i < 4; ++i) v.at(i) = rs.small(2);
    return v;
}

}  // namespace

TEST_CASE("compatibility on the solvable family") {
    ScalarCtx ctx;
    MetricFrame m = displays::ds_metric(ctx.num(2), 1);
    for (int csign : {1, -1}) {
        Form omega = displays::ds_omega(ctx.zero(), ctx.zero(), ctx.num(csign));
        Compatibility comp = compatibility(m, omega);
        REQUIRE(comp.compatible);
        REQUIRE(comp.defect.is_zero());
        REQUIRE(comp.j == displays::ds_j(csign));
        REQUIRE(comp.j * comp.j == -Mat::identity(4, ctx));
        REQUIRE(comp.j.transpose() * m.gram * comp.j == m.gram);
        REQUIRE(comp.j * Vec::basis(4, 0, ctx) ==
                ctx.num(-2 * csign) * Vec::basis(4, 3, ctx));
        REQUIRE(comp.j * Vec::basis(4, 1, ctx) == ctx.num(csign) * Vec::basis(4, 2, ctx));
        REQUIRE(omega_from_j(m, comp.j) == omega);

        RationalSampler rs(7);
        Mat om = omega_matrix(omega);
        for (int trial = 0; trial < 10; ++trial) {
            Vec x = random_vec(rs), y = random_vec(rs);
            REQUIRE(dot(x, om * y) == dot(m.gram * (comp.j * x), y));
        }
    }

    Form bad(4, 2, ctx);
    bad.set({0, 1}, ctx.one());
    bad.set({2, 3}, ctx.one());
    Compatibility nc = compatibility(m, bad);
    REQUIRE_FALSE(nc.compatible);
    REQUIRE_FALSE(nc.defect.is_zero());
    REQUIRE(nc.top == ctx.num(2));
}

TEST_CASE("compatibility validates inputs and rejects degenerate forms") {
    ScalarCtx ctx;
    MetricFrame id4(Mat::identity(4, ctx), 1);
    Form small(3, 2, ctx);
    REQUIRE_THROWS_AS(compatibility(id4, small), DimensionMismatch);

    Form degenerate(4, 2, ctx);
    degenerate.set({0, 1}, ctx.one());
    REQUIRE_THROWS_AS(from_metric_and_omega(make_abelian(), id4, degenerate), BadInput);

    Form std_omega(4, 2, ctx);
    std_omega.set({0, 1}, ctx.one());
    std_omega.set({2, 3}, ctx.one());
    Compatibility comp = from_metric_and_omega(make_abelian(), id4, std_omega);
    REQUIRE(comp.compatible);
    REQUIRE(comp.j == oracle::j_standard());
    REQUIRE(comp.top == ctx.num(2));
}

TEST_CASE("closed form spaces of the catalog") {
    ScalarCtx ctx;
    REQUIRE(closed_forms(make_abelian()).size() == 6);
    REQUIRE(closed_forms(make_rr30()).size() == 4);
    REQUIRE(closed_forms(make_r2prime()).size() == 3);

    Vec e12 = Vec::basis(6, 0, ctx);
    Vec e13 = Vec::basis(6, 1, ctx);
    Vec mixed = ctx.num(-2) * Vec::basis(6, 2, ctx) + Vec::basis(6, 3, ctx);
    std::vector<Vec> want{e12, e13, mixed};
    for (const Scalar& lam : default_lambdas()) {
        LieAlgebra g = make_ds(lam);
        auto got = closed_forms(g);
        REQUIRE(got.size() == 3);
        REQUIRE(detail::same_span(got, want, 6, ctx));
        for (const Vec& v : got) REQUIRE(g.exterior_d(Form::from_coords(4, 2, v)).is_zero());
    }
}

TEST_CASE("Nijenhuis identities for arbitrary almost-complex structures") {
    RationalSampler rs(17);
    ScalarCtx ctx;
    LieAlgebra g = make_r2prime();
    int done = 0;
    while (done < 8) {
        Mat p = rs.lower_triangular(4, 2);
        p.at(0, 2) = rs.small(2);
        p.at(1, 3) = rs.small(2);
        if (det(p).is_zero()) continue;
        Mat j = p * oracle::j_standard() * inverse(p);
        REQUIRE(j * j == -Mat::identity(4, ctx));
        Vec x = random_vec(rs), y = random_vec(rs);
        REQUIRE(nijenhuis(g, j, x, y) == -nijenhuis(g, j, y, x));
        REQUIRE(nijenhuis(g, j, j * x, y) == -(j * nijenhuis(g, j, x, y)));
        REQUIRE(nijenhuis(g, j, j * x, j * y) == -nijenhuis(g, j, x, y));
        ++done;
    }

    auto table = nijenhuis(g, oracle::j_standard());
    for (int i = 0; i < 4; ++i) REQUIRE(table[static_cast<size_t>(i)][static_cast<size_t>(i)].is_zero());
}

TEST_CASE("integrability across the solvable family") {
    for (const Scalar& lam : default_lambdas()) {
        LieAlgebra g = make_ds(lam);
        REQUIRE(nijenhuis_vanishes(g, displays::ds_j(1)));
        REQUIRE(nijenhuis_vanishes(g, displays::ds_j(-1)));
    }
    REQUIRE(nijenhuis_vanishes(make_abelian(), oracle::j_standard()));
}

TEST_CASE("Nijenhuis value on the strictly almost-Kaehler sample") {
    ScalarCtx ctx;
    FrameStructure fs = ak_structure(ctx.one(), ctx.zero(), ctx.zero(), ctx.one(),
                                     ctx.one(), ctx.zero());
    REQUIRE(fs.coframe == Mat::identity(4, ctx));
    LieAlgebra g = make_r2prime();
    REQUIRE(g.exterior_d(fs.omega).is_zero());
    Compatibility comp = from_metric_and_omega(g, fs.metric, fs.omega);
    REQUIRE(comp.compatible);
    Vec n = nijenhuis(g, comp.j, Vec::basis(4, 0, ctx), Vec::basis(4, 1, ctx));
    REQUIRE(n == ctx.num(1, 2) * Vec::basis(4, 1, ctx));
    REQUIRE_FALSE(nijenhuis_vanishes(g, comp.j));
    REQUIRE(nijenhuis_norm_sq(g, fs.metric, comp.j) == ctx.one());

    for (const Scalar& t : {ctx.num(1, 2), ctx.num(-2, 3)})
        for (long a1v : {1L, 2L}) {
            auto [b2, b3] = circle_point(t);
            FrameStructure s = ak_structure(ctx.num(a1v), ctx.num(1, 3), ctx.num(-1), ctx.num(2),
                                            b2, b3);
            Compatibility c2 = from_metric_and_omega(g, s.metric, s.omega);
            REQUIRE(c2.compatible);
            REQUIRE(g.exterior_d(s.omega).is_zero());
            REQUIRE(nijenhuis_norm_sq(g, s.metric, c2.j) == ctx.one() / ctx.num(a1v * a1v));
        }
}

TEST_CASE("canonical connection parallelizes the metric and the structure") {
    RationalSampler rs(19);
    ScalarCtx ctx;
    for (int trial = 0; trial < 100; ++trial) {
        LieAlgebra g = oracle::random_catalog_algebra(rs);
        Mat l = rs.lower_triangular(4, 2);
        MetricFrame m = metric_from_coframe(l);
        Mat j = oracle::conjugated_j(l);
        REQUIRE(j * j == -Mat::identity(4, ctx));
        auto canon = canonical_connection(g, m, j);
        REQUIRE(oracle::metric_compatible(m, canon));
        REQUIRE(oracle::parallel(canon, j));
    }
}

TEST_CASE("canonical connection reduces to Levi-Civita in the integrable closed case") {
    ScalarCtx ctx;
    LieAlgebra ds = make_ds(ctx.one());
    MetricFrame m = displays::ds_metric(ctx.num(2), 1);
    Mat j = displays::ds_j(1);
    auto lc = levi_civita(ds, m);
    REQUIRE(oracle::parallel(lc, j));
    auto canon = canonical_connection(ds, m, j);
    for (size_t i = 0; i < 4; ++i) REQUIRE(canon[i] == lc[i]);

    LieAlgebra ab = make_abelian();
    MetricFrame id4(Mat::identity(4, ctx), 1);
    auto canon_ab = canonical_connection(ab, id4, oracle::j_standard());
    for (size_t i = 0; i < 4; ++i) REQUIRE(canon_ab[i].is_zero());
}

TEST_CASE("canonical connection matches the pinned table") {
    ScalarCtx ctx;
    LieAlgebra g = make_r2prime();
    MetricFrame id4(Mat::identity(4, ctx), 1);
    Form omega(4, 2, ctx);
    omega.set({0, 2}, ctx.one());
    omega.set({1, 3}, ctx.num(-1));
    Compatibility comp = from_metric_and_omega(g, id4, omega);
    REQUIRE(comp.compatible);
    auto canon = canonical_connection(g, id4, comp.j);
    auto want = oracle::canonical_r2prime_sample();
    for (size_t i = 0; i < 4; ++i) REQUIRE(canon[i] == want[i]);
}

TEST_CASE("canonical torsion equals the Nijenhuis tensor when omega is closed") {
    ScalarCtx ctx;
    LieAlgebra g = make_r2prime();
    RationalSampler rs(29);
    for (const Scalar& t : {ctx.zero(), ctx.num(1, 2), ctx.num(3)}) {
        auto [b2, b3] = circle_point(t);
        FrameStructure s = ak_structure(ctx.num(2), ctx.num(-1, 2), ctx.one(), ctx.num(1, 3),
                                        b2, b3);
        Compatibility comp = from_metric_and_omega(g, s.metric, s.omega);
        REQUIRE(comp.compatible);
        auto canon = canonical_connection(g, s.metric, comp.j);
        auto torsion = [&](const Vec& x, const Vec& y) {
            Mat cx(4, 4, ctx.zero()), cy(4, 4, ctx.zero());
            for (int i = 0; i < 4; ++i) {
                cx = cx + x.at(i) * canon[static_cast<size_t>(i)];
                cy = cy + y.at(i) * canon[static_cast<size_t>(i)];
            }
            return cx * y - cy * x - g.bracket(x, y);
        };
        for (int trial = 0; trial < 6; ++trial) {
            Vec x = random_vec(rs), y = random_vec(rs);
            Vec tq = torsion(x, y);
            REQUIRE(torsion(comp.j * x, comp.j * y) == -tq);
            REQUIRE(tq == nijenhuis(g, comp.j, x, y));
        }
    }
}

TEST_CASE("holomorphic sectional curvature invariances") {
    RationalSampler rs(71);
    ScalarCtx ctx;
    LieAlgebra g = make_r2prime();
    auto [b2, b3] = circle_point(ctx.num(1, 2));
    FrameStructure s = ak_structure(ctx.one(), ctx.zero(), ctx.zero(), ctx.one(), b2, b3);
    Compatibility comp = from_metric_and_omega(g, s.metric, s.omega);
    auto canon = canonical_connection(g, s.metric, comp.j);
    int done = 0;
    while (done < 10) {
        Vec x = random_vec(rs);
        if (x.is_zero()) continue;
        Scalar h = hermitian_H(g, s.metric, canon, comp.j, x);
        REQUIRE(hermitian_H(g, s.metric, canon, comp.j, rs.positive() * x) == h);
        REQUIRE(hermitian_H(g, s.metric, canon, comp.j, comp.j * x) == h);
        ++done;
    }
    REQUIRE_THROWS_AS(hermitian_H(g, s.metric, canon, comp.j, Vec(4, ctx.zero())), BadInput);
    REQUIRE_THROWS_AS(connection_curvature(g, std::vector<Mat>{}, Vec(4, ctx.zero()),
                                           Vec(4, ctx.zero())),
                      DimensionMismatch);
}

TEST_CASE("H values on the almost-Kaehler family match the closed forms") {
    ScalarCtx ctx;
    LieAlgebra g = make_r2prime();
    for (long a1v : {1L, 2L})
        for (const Scalar& t : {ctx.zero(), ctx.num(1, 2), ctx.num(-2, 3)}) {
            Scalar a1 = ctx.num(a1v);
            auto [b2, b3] = circle_point(t);
            FrameStructure s = ak_structure(a1, ctx.num(1, 3), ctx.num(-1), ctx.num(2), b2, b3);
            Compatibility comp = from_metric_and_omega(g, s.metric, s.omega);
            auto canon = canonical_connection(g, s.metric, comp.j);
            Mat frame = inverse(s.coframe);
            Scalar a1sq = a1 * a1;
            std::array<Scalar, 4> want = {
                ctx.num(-1) / a1sq, ctx.num(-1, 2) / a1sq,
                -(ctx.one() + b2 * b2) / (ctx.num(2) * a1sq),
                -(ctx.one() + b3 * b3) / (ctx.num(2) * a1sq)};
            for (int a = 0; a < 4; ++a)
                REQUIRE(hermitian_H(g, s.metric, canon, comp.j, frame.col(a)) ==
                        want[static_cast<size_t>(a)]);
            REQUIRE(scalar_curvature(g, s.metric) == ctx.num(-6) / a1sq);
        }
}

TEST_CASE("constant H decision procedure") {
    ScalarCtx ctx;

    ConstantHResult flat = constant_H_test(make_abelian(), MetricFrame(Mat::identity(4, ctx), 1),
                                           oracle::j_standard());
    REQUIRE(flat.constant);
    REQUIRE(flat.value.is_zero());
    REQUIRE_FALSE(flat.witness.has_value());

    for (const Scalar& lam : {ctx.zero(), ctx.one()}) {
        LieAlgebra ds = make_ds(lam);
        MetricFrame m = displays::ds_metric(ctx.num(2), 1);
        Mat j = displays::ds_j(1);
        ConstantHResult res = constant_H_test(ds, m, j);
        REQUIRE(res.constant);
        REQUIRE(res.value == ctx.num(-1));
        auto canon = canonical_connection(ds, m, j);
        RationalSampler rs(83);
        int done = 0;
        while (done < 100) {
            Vec x = random_vec(rs);
            if (x.is_zero()) continue;
            REQUIRE(hermitian_H(ds, m, canon, j, x) == ctx.num(-1));
            ++done;
        }
    }

    LieAlgebra g = make_r2prime();
    auto [b2, b3] = circle_point(ctx.num(1, 2));
    FrameStructure s = ak_structure(ctx.one(), ctx.zero(), ctx.zero(), ctx.one(), b2, b3);
    Compatibility comp = from_metric_and_omega(g, s.metric, s.omega);
    ConstantHResult res = constant_H_test(g, s.metric, comp.j);
    REQUIRE_FALSE(res.constant);
    REQUIRE(res.witness.has_value());
    REQUIRE(res.value == ctx.num(-1));
    REQUIRE(res.witness->first == Vec::basis(4, 0, ctx));
    REQUIRE(res.witness->second == Vec::basis(4, 1, ctx));
    auto canon = canonical_connection(g, s.metric, comp.j);
    REQUIRE(hermitian_H(g, s.metric, canon, comp.j, res.witness->second) == ctx.num(-1, 2));
}

TEST_CASE("J-adapted blocks on the Kaehler side of the solvable family") {
    ScalarCtx ctx;
    LieAlgebra ds = make_ds(ctx.one());
    MetricFrame m = displays::ds_metric(ctx.num(2), -1);
    Form omega = displays::ds_omega(ctx.zero(), ctx.zero(), ctx.one());
    JBlocks jb = wplus_J_blocks(ds, m, omega);
    REQUIRE(jb.topleft == ctx.num(-1));
    REQUIRE(jb.womega_norm_sq.is_zero());
    REQUIRE(jb.w00.is_zero());
    REQUIRE(jb.frobenius_sq == ctx.num(3, 2));
    OperatorBlocks blocks = curvature_blocks(ds, m);
    Scalar half = ctx.num(1, 2);
    REQUIRE(blocks.wplus == Mat::diag({half, half, ctx.num(-1)}));
    REQUIRE(blocks.scalar == ctx.num(-6));
    REQUIRE(jb.topleft == blocks.scalar / ctx.num(6));
    REQUIRE(oracle::reassemble_wplus(jb) == blocks.wplus);
    REQUIRE(jb.frobenius_sq == oracle::frobenius_sq(blocks.wplus));

    // With the opposite orientation omega sits on the anti-self-dual side.
    REQUIRE_THROWS_AS(wplus_J_blocks(ds, displays::ds_metric(ctx.num(2), 1), omega), Error);
}

TEST_CASE("J-adapted blocks vanish on the conformally flat family") {
    ScalarCtx ctx;
    LieAlgebra g = make_r2prime();
    for (const Scalar& t : {ctx.zero(), ctx.num(1, 2), ctx.num(3), ctx.num(-2, 3)}) {
        auto [b2, b3] = circle_point(t);
        FrameStructure s = ak_structure(ctx.num(2), ctx.num(-1, 2), ctx.one(), ctx.num(1, 3),
                                        b2, b3);
        JBlocks jb = wplus_J_blocks(g, s.metric, s.omega);
        REQUIRE(jb.topleft.is_zero());
        REQUIRE(jb.womega_norm_sq.is_zero());
        REQUIRE(jb.w00.is_zero());
        REQUIRE(jb.frobenius_sq.is_zero());
        Scalar nsq = nijenhuis_norm_sq(g, s.metric,
                                       from_metric_and_omega(g, s.metric, s.omega).j);
        REQUIRE(jb.topleft == nsq + scalar_curvature(g, s.metric) / ctx.num(6));
    }
}

TEST_CASE("J-adapted blocks reassemble the self-dual operator block") {
    ScalarCtx ctx;
    RationalSampler rs(101);
    LieAlgebra zero_check = make_abelian();
    MetricFrame id4(Mat::identity(4, ctx), 1);
    Form std_omega(4, 2, ctx);
    std_omega.set({0, 1}, ctx.one());
    std_omega.set({2, 3}, ctx.one());
    JBlocks flat = wplus_J_blocks(zero_check, id4, std_omega);
    REQUIRE(flat.topleft.is_zero());
    REQUIRE(flat.frobenius_sq.is_zero());

    for (int trial = 0; trial < 60; ++trial) {
        LieAlgebra g = oracle::random_catalog_algebra(rs);
        Mat l = rs.lower_triangular(4, 2);
        MetricFrame m = metric_from_coframe(l);
        Mat j = oracle::conjugated_j(l);
        Form omega = omega_from_j(m, j);
        JBlocks jb = wplus_J_blocks(g, m, omega);
        OperatorBlocks blocks = curvature_blocks(g, m);
        REQUIRE(oracle::reassemble_wplus(jb) == blocks.wplus);
        REQUIRE(jb.frobenius_sq == oracle::frobenius_sq(blocks.wplus));
        REQUIRE(jb.womega_norm_sq == jb.womega_scale_sq * dot(jb.womega_raw, jb.womega_raw));
        REQUIRE(jb.w00.trace().is_zero());
    }

    Form incompatible(4, 2, ctx);
    incompatible.set({0, 1}, ctx.one());
    incompatible.set({0, 2}, ctx.one());
    incompatible.set({2, 3}, ctx.one());
    REQUIRE_THROWS_AS(wplus_J_blocks(make_r2prime(), id4, incompatible), Error);
}

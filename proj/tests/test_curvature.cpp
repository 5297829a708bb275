#include <akgeom/catalog.hpp>
#include <akgeom/curvature.hpp>
#include <akgeom/frames.hpp>
#include <akgeom/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace akgeom;

namespace {

double max_abs_diff(const RiemannTensor& a, const RiemannTensor& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    double d = std::abs(a.at(i, j, k, l).to_double() - b.at(i, j, k, l).to_double());
                    if (d > worst) worst = d;
                }
    return worst;
}

bool riemann_symmetries_ok(const RiemannTensor& r) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    if (r.at(i, j, k, l) != -r.at(j, i, k, l)) return false;
                    if (r.at(i, j, k, l) != -r.at(i, j, l, k)) return false;
                    if (r.at(i, j, k, l) != r.at(k, l, i, j)) return false;
                }
    return true;
}

bool first_bianchi_ok(const RiemannTensor& r) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    if (!(r.at(i, j, k, l) + r.at(j, k, i, l) + r.at(k, i, j, l)).is_zero())
                        return false;
    return true;
}

bool ricci_trace_zero(const MetricFrame& m, const RiemannTensor& r) {
    Mat ginv = inverse(m.gram);
    ScalarCtx ctx;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            Scalar acc = ctx.zero();
            for (int i = 0; i < 4; ++i)
                for (int l = 0; l < 4; ++l) acc += ginv.at(i, l) * r.at(i, j, l, k);
            if (!acc.is_zero()) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("metric frames validate their inputs") {
    ScalarCtx ctx;
    REQUIRE_THROWS_AS(MetricFrame(Mat::diag({ctx.one(), ctx.num(-1), ctx.one(), ctx.one()}), 1),
                      NotPositiveDefinite);
    Mat ns(2, 2, ctx.zero());
    ns.at(0, 1) = ctx.one();
    REQUIRE_THROWS_AS(MetricFrame(ns, 1), NotPositiveDefinite);
    REQUIRE_THROWS_AS(MetricFrame(Mat::identity(4, ctx), 0), BadInput);
    RationalSampler rs(5);
    Mat l = rs.lower_triangular(4, 3);
    MetricFrame m = metric_from_coframe(l);
    REQUIRE(m.gram == l.transpose() * l);
    REQUIRE(m.orientation == 1);
}

TEST_CASE("curvature tensor accessor is bounds checked") {
    RiemannTensor r(4);
    REQUIRE_THROWS_AS(r.at(4, 0, 0, 0), DimensionMismatch);
    REQUIRE_THROWS_AS(r.at(0, -1, 0, 0), DimensionMismatch);
}

TEST_CASE("abelian algebra is flat for every metric") {
    RationalSampler rs(11);
    LieAlgebra g = make_abelian();
    for (int trial = 0; trial < 5; ++trial) {
        Mat l = rs.lower_triangular(4, 3);
        MetricFrame m = metric_from_coframe(l);
        for (const Mat& d : levi_civita(g, m)) REQUIRE(d.is_zero());
        REQUIRE(riemann(g, m).is_zero());
        RicciData rd = ricci_scalar(g, m, riemann(g, m));
        REQUIRE(rd.ricci.is_zero());
        REQUIRE(rd.scalar.is_zero());
        REQUIRE(rd.traceless.is_zero());
    }
}

TEST_CASE("connection matches tables pinned from a separate algebra run") {
    ScalarCtx ctx;
    MetricFrame id4(Mat::identity(4, ctx), 1);

    auto got_rr30 = levi_civita(make_rr30(), id4);
    auto want_rr30 = oracle::lc_rr30_identity();
    for (size_t i = 0; i < 4; ++i) REQUIRE(got_rr30[i] == want_rr30[i]);
    REQUIRE(riemann(make_rr30(), id4).is_zero());

    MetricFrame m411(Mat::diag({ctx.num(4), ctx.one(), ctx.one(), ctx.one()}), 1);
    auto got_ds = levi_civita(make_ds(ctx.zero()), m411);
    auto want_ds = oracle::lc_ds0_diag411();
    for (size_t i = 0; i < 4; ++i) REQUIRE(got_ds[i] == want_ds[i]);

    auto got_r2 = levi_civita(make_r2prime(), id4);
    auto want_r2 = oracle::lc_r2prime_identity();
    for (size_t i = 0; i < 4; ++i) REQUIRE(got_r2[i] == want_r2[i]);
}

TEST_CASE("connection satisfies its defining properties on random data") {
    RationalSampler rs(23);
    for (int trial = 0; trial < 40; ++trial) {
        LieAlgebra g = oracle::random_catalog_algebra(rs);
        MetricFrame m = metric_from_coframe(rs.lower_triangular(4, 2));
        auto conn = levi_civita(g, m);
        auto brute = oracle::koszul_brute(g, m);
        for (size_t i = 0; i < 4; ++i) REQUIRE(conn[i] == brute[i]);
        REQUIRE(oracle::torsion_free(g, conn));
        REQUIRE(oracle::metric_compatible(m, conn));
    }
}

TEST_CASE("curvature has the pair symmetries and the cyclic identity") {
    RationalSampler rs(31);
    for (int trial = 0; trial < 12; ++trial) {
        LieAlgebra g = oracle::random_catalog_algebra(rs);
        MetricFrame m = metric_from_coframe(rs.lower_triangular(4, 2));
        RiemannTensor r = riemann(g, m);
        REQUIRE(riemann_symmetries_ok(r));
        REQUIRE(first_bianchi_ok(r));
    }
}

TEST_CASE("scalar curvature agrees with the orthonormal frame contraction") {
    RationalSampler rs(37);
    for (int trial = 0; trial < 15; ++trial) {
        LieAlgebra g = oracle::random_catalog_algebra(rs);
        MetricFrame m = metric_from_coframe(rs.lower_triangular(4, 2));
        REQUIRE(scalar_curvature(g, m) == oracle::scalar_via_frame(g, m));
    }
}

TEST_CASE("Ricci of the conformally flat sample matches the pinned table") {
    ScalarCtx ctx;
    std::array<Scalar, 6> head = {ctx.one(),    ctx.num(2),  ctx.num(3),
                                  ctx.num(1, 2), ctx.num(-1), ctx.one()};
    MetricFrame m = metric_from_params(conf_flat_completion(head));
    LieAlgebra g = make_r2prime();
    RicciData rd = ricci_scalar(g, m, riemann(g, m));
    REQUIRE(rd.ricci == oracle::ricci_conf_flat_sample());
    REQUIRE(rd.scalar == ctx.num(-6));
    REQUIRE(rd.traceless == rd.ricci - ctx.num(-6, 4) * m.gram);
    REQUIRE_FALSE(rd.traceless.is_zero());
    REQUIRE(weyl(g, m).is_zero());
}

TEST_CASE("Kulkarni-Nomizu product") {
    ScalarCtx ctx;
    Mat id = Mat::identity(4, ctx);
    RiemannTensor r = kulkarni(id, id);
    REQUIRE(r.at(0, 1, 0, 1) == ctx.num(2));
    REQUIRE(r.at(0, 1, 1, 0) == ctx.num(-2));
    REQUIRE(r.at(0, 1, 2, 3).is_zero());
    RationalSampler rs(41);
    for (int trial = 0; trial < 5; ++trial) {
        Mat a = rs.lower_triangular(4, 2);
        Mat b = rs.lower_triangular(4, 2);
        Mat h = a + a.transpose();
        Mat k = b + b.transpose();
        RiemannTensor p = kulkarni(h, k);
        REQUIRE(riemann_symmetries_ok(p));
        REQUIRE(first_bianchi_ok(p));
    }
    Mat bad(3, 4, ctx.zero());
    REQUIRE_THROWS_AS(kulkarni(bad, bad), DimensionMismatch);
}

TEST_CASE("Weyl tensor is trace free and scales conformally") {
    RationalSampler rs(43);
    for (int trial = 0; trial < 8; ++trial) {
        LieAlgebra g = oracle::random_catalog_algebra(rs);
        Mat gram = metric_from_coframe(rs.lower_triangular(4, 2)).gram;
        MetricFrame m(gram, 1);
        RiemannTensor w = weyl(g, m);
        REQUIRE(ricci_trace_zero(m, w));

        Scalar c2 = rs.positive() * rs.positive();
        MetricFrame scaled(c2 * gram, 1);
        RiemannTensor ws = weyl(g, scaled);
        REQUIRE((ws - c2 * w).is_zero());
    }
}

TEST_CASE("frame probe matches the recorded component quotients") {
    ScalarCtx ctx;
    LieAlgebra g = make_r2prime();
    Scalar two = ctx.num(2);

    std::array<Scalar, 10> p = {ctx.one(), ctx.one(), ctx.one(), ctx.zero(), ctx.zero(),
                                ctx.one(), ctx.one(), ctx.num(2), ctx.one(), ctx.one()};
    detail::FrameWeylProbe probe(g, p);
    REQUIRE(two * probe.w(0, 2, 1, 2) == displays::display_w1323(p));

    RationalSampler rs(47);
    for (int trial = 0; trial < 3; ++trial) {
        std::array<Scalar, 10> q = {rs.positive(), rs.any(), rs.positive(), rs.any(),
                                    rs.any(),      rs.positive(), rs.any(), rs.any(),
                                    rs.any(),      rs.positive()};
        detail::FrameWeylProbe pr(g, q);
        REQUIRE(two * pr.w(0, 2, 1, 2) == displays::display_w1323(q));
    }

    std::array<Scalar, 10> node = {ctx.one(),    ctx.zero(),  ctx.num(2),
                                   ctx.num(1, 2), ctx.num(-1), ctx.num(5),
                                   ctx.one(),    ctx.num(-1), ctx.num(3, 5),
                                   ctx.num(3)};
    node[1] = displays::a2_killing_w1323(node);
    detail::FrameWeylProbe np(g, node);
    REQUIRE(np.w(0, 2, 1, 2).is_zero());
    REQUIRE(np.w(0, 2, 1, 3) == displays::display_w1324(node));
}

TEST_CASE("Hodge star on the identity frame") {
    ScalarCtx ctx;
    MetricFrame plus(Mat::identity(4, ctx), 1);
    Mat star = hodge_star_2(plus);
    Mat want(6, 6, ctx.zero());
    want.at(5, 0) = ctx.one();
    want.at(4, 1) = ctx.num(-1);
    want.at(3, 2) = ctx.one();
    want.at(2, 3) = ctx.one();
    want.at(1, 4) = ctx.num(-1);
    want.at(0, 5) = ctx.one();
    REQUIRE(star == want);
    REQUIRE(star * star == Mat::identity(6, ctx));

    MetricFrame minus(Mat::identity(4, ctx), -1);
    REQUIRE(hodge_star_2(minus) == -want);
}

TEST_CASE("Hodge star satisfies the wedge pairing on curved grams") {
    ScalarCtx ctx;
    for (int orient : {1, -1}) {
        MetricFrame m(Mat::diag({ctx.num(4), ctx.one(), ctx.one(), ctx.one()}), orient);
        REQUIRE(oracle::star_pairing_ok(m));
        Mat star = hodge_star_2(m);
        REQUIRE(star * star == Mat::identity(6, ctx));
    }
    RationalSampler rs(53);
    for (int trial = 0; trial < 6; ++trial) {
        Mat l = rs.lower_triangular(4, 2);
        MetricFrame mm = metric_from_coframe(l, (trial % 2 == 0) ? 1 : -1);
        REQUIRE(oracle::star_pairing_ok(mm));
        REQUIRE(hodge_star_2(mm) * hodge_star_2(mm) == Mat::identity(6, ctx));
    }
}

TEST_CASE("star eigenbasis splits by orientation") {
    ScalarCtx ctx;
    for (int sigma : {1, -1}) {
        MetricFrame m(Mat::identity(4, ctx), sigma);
        Mat star = hodge_star_2(m);
        auto up = pm_basis(sigma, true, ctx);
        auto um = pm_basis(sigma, false, ctx);
        for (int p = 0; p < 3; ++p) {
            REQUIRE(star * up[static_cast<size_t>(p)] == up[static_cast<size_t>(p)]);
            REQUIRE(star * um[static_cast<size_t>(p)] == -um[static_cast<size_t>(p)]);
            REQUIRE(dot(up[static_cast<size_t>(p)], up[static_cast<size_t>(p)]) == ctx.num(2));
        }
    }
    REQUIRE_THROWS_AS(pm_basis(0, true), BadInput);
}

TEST_CASE("operator blocks on the solvable family") {
    ScalarCtx ctx;
    for (const Scalar& lam : default_lambdas()) {
        LieAlgebra g = make_ds(lam);
        for (long k : {1L, 2L}) {
            MetricFrame m(Mat::diag({ctx.num(k * k), ctx.one(), ctx.one(), ctx.one()}), 1);
            OperatorBlocks b = curvature_blocks(g, m);
            REQUIRE(b.wplus.is_zero());
            REQUIRE_FALSE(b.wminus.is_zero());
            REQUIRE(b.scalar == (k == 2 ? ctx.num(-6) : ctx.num(-45, 2)));
            REQUIRE(b.op.trace() == b.scalar / ctx.num(2));
            REQUIRE(b.wplus.trace().is_zero());
            REQUIRE(b.wminus.trace().is_zero());
            REQUIRE(b.scalar == scalar_curvature(g, m));
            REQUIRE(oracle::op_from_blocks(b, 1) == b.op);

            OperatorBlocks flip = curvature_blocks(g, MetricFrame(m.gram, -1));
            REQUIRE(flip.wplus == b.wminus);
            REQUIRE(flip.wminus == b.wplus);
            REQUIRE(flip.bplus == b.bminus);
            REQUIRE(flip.offdiag == b.offdiag.transpose());
            REQUIRE(flip.op == b.op);
        }
    }

    LieAlgebra g1 = make_ds(ctx.one());
    MetricFrame m911(Mat::diag({ctx.num(9), ctx.one(), ctx.one(), ctx.one()}), 1);
    OperatorBlocks b3 = curvature_blocks(g1, m911);
    Scalar third = ctx.num(1, 27);
    REQUIRE(b3.wplus == Mat::diag({third, third, ctx.num(-2, 27)}));
    REQUIRE(b3.scalar == ctx.num(-53, 18));
}

TEST_CASE("Einstein metrics are exactly the ones with no mixed block") {
    ScalarCtx ctx;
    LieAlgebra ds = make_ds(ctx.one());
    MetricFrame m411(Mat::diag({ctx.num(4), ctx.one(), ctx.one(), ctx.one()}), 1);
    RicciData rd = ricci_scalar(ds, m411, riemann(ds, m411));
    REQUIRE(rd.traceless.is_zero());
    REQUIRE(curvature_blocks(ds, m411).offdiag.is_zero());

    std::array<Scalar, 6> head = {ctx.one(),    ctx.num(2),  ctx.num(3),
                                  ctx.num(1, 2), ctx.num(-1), ctx.one()};
    MetricFrame cf = metric_from_params(conf_flat_completion(head));
    LieAlgebra r2 = make_r2prime();
    RicciData rd2 = ricci_scalar(r2, cf, riemann(r2, cf));
    REQUIRE_FALSE(rd2.traceless.is_zero());
    OperatorBlocks bc = curvature_blocks(r2, cf);
    REQUIRE_FALSE(bc.offdiag.is_zero());
    REQUIRE(bc.wplus.is_zero());
    REQUIRE(bc.wminus.is_zero());
    REQUIRE(oracle::op_from_blocks(bc, 1) == bc.op);
}

TEST_CASE("abelian blocks vanish and random blocks reassemble the operator") {
    ScalarCtx ctx;
    OperatorBlocks z = curvature_blocks(make_abelian(), MetricFrame(Mat::identity(4, ctx), 1));
    REQUIRE(z.op.is_zero());
    REQUIRE(z.bplus.is_zero());
    REQUIRE(z.bminus.is_zero());
    REQUIRE(z.offdiag.is_zero());
    REQUIRE(z.scalar.is_zero());

    RationalSampler rs(59);
    for (int trial = 0; trial < 10; ++trial) {
        LieAlgebra g = oracle::random_catalog_algebra(rs);
        int orient = (trial % 2 == 0) ? 1 : -1;
        MetricFrame m = metric_from_coframe(rs.lower_triangular(4, 2), orient);
        OperatorBlocks b = curvature_blocks(g, m);
        REQUIRE(oracle::op_from_blocks(b, orient) == b.op);
        REQUIRE(b.op.trace() == b.scalar / ctx.num(2));
        REQUIRE(b.wplus.trace().is_zero());
        REQUIRE(b.wminus.trace().is_zero());
        REQUIRE(b.scalar == scalar_curvature(g, m));
    }
}

TEST_CASE("conformal scaling preserves the vanishing of the self-dual block") {
    ScalarCtx ctx;
    LieAlgebra g = make_ds(ctx.num(1, 2));
    for (long c : {1L, 2L, 3L}) {
        Scalar c2 = ctx.num(c * c);
        MetricFrame m(Mat::diag({ctx.num(4) * c2, c2, c2, c2}), 1);
        REQUIRE(curvature_blocks(g, m).wplus.is_zero());
    }
}

TEST_CASE("float mode tracks the exact pipeline") {
    double tol = 1e-12;
    ScalarCtx ctx;
    LieAlgebra g = make_ds(ctx.one());
    Mat gram = Mat::diag({ctx.num(4), ctx.one(), ctx.one(), ctx.one()});
    MetricFrame m(gram, 1);
    LieAlgebra gf = oracle::alg_to_float(g, tol);
    MetricFrame mf(oracle::mat_to_float(gram, tol), 1);
    REQUIRE(max_abs_diff(riemann(g, m), riemann(gf, mf)) < 1e-9);
    REQUIRE(std::abs(scalar_curvature(g, m).to_double() - scalar_curvature(gf, mf).to_double()) <
            1e-9);

    RationalSampler rs(61);
    for (int trial = 0; trial < 3; ++trial) {
        LieAlgebra ge = oracle::random_catalog_algebra(rs);
        Mat l = rs.lower_triangular(4, 2);
        MetricFrame me = metric_from_coframe(l);
        LieAlgebra gl = oracle::alg_to_float(ge, tol);
        MetricFrame ml(oracle::mat_to_float(me.gram, tol), 1);
        REQUIRE(max_abs_diff(riemann(ge, me), riemann(gl, ml)) < 1e-9);
        REQUIRE(oracle::max_abs_diff(curvature_blocks(ge, me).wplus,
                                     curvature_blocks(gl, ml).wplus) < 1e-9);
    }
}

#pragma once

// Almost-Hermitian structures on a metric Lie algebra: compatibility of a
// 2-form with a metric, Nijenhuis tensor, the canonical Hermitian
// connection, holomorphic sectional curvature H, an exact constant-H
// decision procedure, and the decomposition of W+ adapted to J.
//
// A 2-form omega and metric g determine A = -G^{-1} Omega (Omega the
// component matrix of omega), which satisfies omega(X,Y) = g(AX, Y).
// Compatibility means A^2 = -Id; then J = A is an almost-complex structure
// and (g, J, omega) is almost-Hermitian.

#include "curvature.hpp"

#include <optional>

namespace akgeom {

inline Mat omega_matrix(const Form& omega) {
    if (omega.degree() != 2) throw DimensionMismatch("omega must be a 2-form");
    int n = omega.dim();
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = omega.value({i, j});
    return m;
}

inline Form form_from_matrix(const Mat& m) {
    int n = m.rows();
    Form f(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) f.set({i, j}, m.at(i, j));
    return f;
}

struct Compatibility {
    bool compatible;
    Mat j;        // A = -G^{-1} Omega, candidate almost-complex structure
    Mat defect;   // A^2 + Id; zero exactly when compatible
    Scalar top;   // coefficient of omega ^ omega on e^{1..n}
};

inline Compatibility compatibility(const MetricFrame& m, const Form& omega,
                                   const ScalarCtx& ctx = {}) {
    if (omega.dim() != m.gram.rows()) throw DimensionMismatch("omega dimension mismatch");
    Mat a = -(inverse(m.gram) * omega_matrix(omega));
    Mat defect = a * a + Mat::identity(a.rows(), ctx);
    Form top = wedge(omega, omega);
    return Compatibility{defect.is_zero(), std::move(a), std::move(defect), top.comp(0)};
}

// Builds the almost-Hermitian structure determined by (g, m, omega).
// Requires omega non-degenerate; the result reports whether A^2 = -Id holds
// and carries the candidate J together with the defect A^2 + Id.
inline Compatibility from_metric_and_omega(const LieAlgebra& g, const MetricFrame& m,
                                           const Form& omega) {
    if (omega.dim() != g.dim()) throw DimensionMismatch("omega dimension mismatch");
    Compatibility comp = compatibility(m, omega, g.ctx());
    if (comp.top.is_zero()) throw BadInput("omega is degenerate");
    return comp;
}

// Recovers omega from a compatible J: Omega = -G J.
inline Form omega_from_j(const MetricFrame& m, const Mat& j) {
    return form_from_matrix(-(m.gram * j));
}

// Basis of the closed 2-forms, as pair-coordinate vectors.
inline std::vector<Vec> closed_forms(const LieAlgebra& g) {
    int n = g.dim();
    auto pairs = index_tuples(n, 2);
    auto triples = index_tuples(n, 3);
    Mat d(static_cast<int>(triples.size()), static_cast<int>(pairs.size()), g.ctx().zero());
    for (size_t q = 0; q < pairs.size(); ++q) {
        Form basis2(n, 2, g.ctx());
        basis2.comp(static_cast<int>(q)) = g.ctx().one();
        Form db = g.exterior_d(basis2);
        for (size_t t = 0; t < triples.size(); ++t)
            d.at(static_cast<int>(t), static_cast<int>(q)) = db.comp(static_cast<int>(t));
    }
    return nullspace(d);
}

// Nijenhuis tensor with the 1/4 normalization:
// N(X,Y) = (1/4) ([JX,JY] - J[JX,Y] - J[X,JY] - [X,Y]).
inline Vec nijenhuis(const LieAlgebra& g, const Mat& j, const Vec& x, const Vec& y) {
    Vec jx = j * x, jy = j * y;
    Vec n = g.bracket(jx, jy) - j * g.bracket(jx, y) - j * g.bracket(x, jy) - g.bracket(x, y);
    return g.ctx().num(1, 4) * n;
}

// Full table of basis values: result[i][j] = N(e_i, e_j).
inline std::vector<std::vector<Vec>> nijenhuis(const LieAlgebra& g, const Mat& j) {
    int n = g.dim();
    std::vector<std::vector<Vec>> table(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        table[static_cast<size_t>(i)].reserve(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k)
            table[static_cast<size_t>(i)].push_back(nijenhuis(
                g, j, Vec::basis(n, i, g.ctx()), Vec::basis(n, k, g.ctx())));
    }
    return table;
}

inline bool nijenhuis_vanishes(const LieAlgebra& g, const Mat& j) {
    for (int i = 0; i < g.dim(); ++i)
        for (int k = i + 1; k < g.dim(); ++k)
            if (!nijenhuis(g, j, Vec::basis(g.dim(), i, g.ctx()), Vec::basis(g.dim(), k, g.ctx()))
                     .is_zero())
                return false;
    return true;
}

// Squared norm of N as a tensor, evaluated in an orthonormal frame:
// sum over frame pairs a < b of |N(f_a, f_b)|^2.
inline Scalar nijenhuis_norm_sq(const LieAlgebra& g, const MetricFrame& m, const Mat& j) {
    const ScalarCtx& ctx = g.ctx();
    Mat l = orthonormal_coframe(m.gram);
    Mat linv = inverse(l);
    LieAlgebra gf = g.change_basis(linv);
    Mat jf = l * j * linv;
    Scalar acc = ctx.zero();
    for (int a = 0; a < g.dim(); ++a)
        for (int b = a + 1; b < g.dim(); ++b) {
            Vec n = nijenhuis(gf, jf, Vec::basis(g.dim(), a, ctx), Vec::basis(g.dim(), b, ctx));
            acc += dot(n, n);
        }
    return acc;
}

// Canonical Hermitian connection: nabla_i = (1/2)(D_i - J D_i J), with D the
// Levi-Civita connection. Parallelizes both g and J.
inline std::vector<Mat> canonical_connection(const LieAlgebra& g, const MetricFrame& m,
                                             const Mat& j) {
    std::vector<Mat> d = levi_civita(g, m);
    Scalar half = g.ctx().num(1, 2);
    std::vector<Mat> out;
    out.reserve(d.size());
    for (const Mat& di : d) out.push_back(half * (di - j * di * j));
    return out;
}

// Curvature endomorphism R(x,y) = -[nabla_x, nabla_y] + nabla_[x,y] of an
// arbitrary invariant connection given by per-basis-vector matrices.
inline Mat connection_curvature(const LieAlgebra& g, const std::vector<Mat>& conn, const Vec& x,
                                const Vec& y) {
    int n = g.dim();
    if (static_cast<int>(conn.size()) != n)
        throw DimensionMismatch("connection matrix count mismatch");
    const ScalarCtx& ctx = g.ctx();
    Mat cx(n, n, ctx.zero()), cy(n, n, ctx.zero());
    for (int i = 0; i < n; ++i) {
        if (!x.at(i).is_zero()) cx = cx + x.at(i) * conn[static_cast<size_t>(i)];
        if (!y.at(i).is_zero()) cy = cy + y.at(i) * conn[static_cast<size_t>(i)];
    }
    Mat r = cy * cx - cx * cy;
    Vec br = g.bracket(x, y);
    for (int k = 0; k < n; ++k)
        if (!br.at(k).is_zero()) r = r + br.at(k) * conn[static_cast<size_t>(k)];
    return r;
}

// Hermitian holomorphic sectional curvature of the canonical connection:
// H(x) = g(R(x, Jx) x, Jx) / g(x,x)^2.
inline Scalar hermitian_H(const LieAlgebra& g, const MetricFrame& m, const std::vector<Mat>& canon,
                          const Mat& j, const Vec& x) {
    Vec jx = j * x;
    Mat rend = connection_curvature(g, canon, x, jx);
    Scalar num = dot(m.gram * (rend * x), jx);
    Scalar gxx = dot(m.gram * x, x);
    if (gxx.is_zero()) throw BadInput("H is undefined on the zero vector");
    return num / (gxx * gxx);
}

inline Scalar hermitian_H(const LieAlgebra& g, const MetricFrame& m, const Mat& j, const Vec& x) {
    return hermitian_H(g, m, canonical_connection(g, m, j), j, x);
}

struct ConstantHResult {
    bool constant;
    Scalar value;                        // the constant when constant, else H of the reference
    std::optional<std::pair<Vec, Vec>> witness;  // two vectors with different H
};

namespace detail {

// Fully symmetric coefficient tensors of the quartics
//   Q(x) = g(R(x,Jx) x, Jx)   and   P(x) = g(x,x)^2,
// built by symmetrizing the naive 4-index coefficient arrays.
inline RiemannTensor symmetrize4(const RiemannTensor& c) {
    int n = c.dim();
    RiemannTensor s(n);
    int perm[24][4];
    int count = 0;
    int base[4] = {0, 1, 2, 3};
    std::vector<int> p(base, base + 4);
    do {
        for (int q = 0; q < 4; ++q) perm[count][q] = p[static_cast<size_t>(q)];
        ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    Scalar inv24 = Scalar::exact(1, 24);
    bool flt = false;
    for (int i = 0; i < n && !flt; ++i)
        if (c.at(i, 0, 0, 0).mode() == Mode::Float) flt = true;
    if (flt) inv24 = Scalar::flt(1.0 / 24.0, c.at(0, 0, 0, 0).tolerance());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    int idx[4] = {i, j, k, l};
                    Scalar acc = c.at(i, j, k, l) - c.at(i, j, k, l);
                    for (int q = 0; q < count; ++q)
                        acc += c.at(idx[perm[q][0]], idx[perm[q][1]], idx[perm[q][2]],
                                    idx[perm[q][3]]);
                    s.at(i, j, k, l) = inv24 * acc;
                }
    return s;
}

}  // namespace detail

// Decides exactly whether H is the same for every nonzero x, by comparing
// the symmetrized coefficient tensors of the quartics Q and kappa P.
inline ConstantHResult constant_H_test(const LieAlgebra& g, const MetricFrame& m, const Mat& j) {
    int n = g.dim();
    const ScalarCtx& ctx = g.ctx();
    std::vector<Mat> canon = canonical_connection(g, m, j);

    // T_ijkl = g(R(e_i,e_j) e_k, e_l) for the canonical connection.
    RiemannTensor t(n, ctx);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            Mat rend = connection_curvature(g, canon, Vec::basis(n, i, ctx), Vec::basis(n, jj, ctx));
            Mat low = m.gram * rend;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) t.at(i, jj, k, l) = low.at(l, k);
        }

    // Q coefficients: C_imkn = sum_{j,l} T_ijkl J_jm J_ln.
    RiemannTensor cq(n, ctx);
    for (int i = 0; i < n; ++i)
        for (int mm = 0; mm < n; ++mm)
            for (int k = 0; k < n; ++k)
                for (int nn = 0; nn < n; ++nn) {
                    Scalar acc = ctx.zero();
                    for (int jj = 0; jj < n; ++jj) {
                        if (j.at(jj, mm).is_zero()) continue;
                        for (int l = 0; l < n; ++l) {
                            if (j.at(l, nn).is_zero()) continue;
                            acc += t.at(i, jj, k, l) * j.at(jj, mm) * j.at(l, nn);
                        }
                    }
                    cq.at(i, mm, k, nn) = acc;
                }
    RiemannTensor cp(n, ctx);
    for (int i = 0; i < n; ++i)
        for (int mm = 0; mm < n; ++mm)
            for (int k = 0; k < n; ++k)
                for (int nn = 0; nn < n; ++nn)
                    cp.at(i, mm, k, nn) = m.gram.at(i, mm) * m.gram.at(k, nn);

    RiemannTensor sq = detail::symmetrize4(cq);
    RiemannTensor sp = detail::symmetrize4(cp);

    Vec e0 = Vec::basis(n, 0, ctx);
    Scalar kappa = hermitian_H(g, m, canon, j, e0);
    RiemannTensor diff = sq - kappa * sp;
    if (diff.is_zero()) return ConstantHResult{true, kappa, std::nullopt};

    // Not constant: exhibit two vectors whose H differ. Basis vectors first,
    // then a grid that is complete for quartics (five points per axis).
    for (int i = 1; i < n; ++i) {
        Vec ei = Vec::basis(n, i, ctx);
        Scalar hi = hermitian_H(g, m, canon, j, ei);
        if (hi != kappa) return ConstantHResult{false, kappa, std::make_pair(e0, ei)};
    }
    std::vector<long> range{0, 1, -1, 2, -2};
    std::vector<int> digits(static_cast<size_t>(n), 0);
    while (true) {
        bool all_zero = true;
        Vec x(n, ctx.zero());
        for (int i = 0; i < n; ++i) {
            long v = range[static_cast<size_t>(digits[static_cast<size_t>(i)])];
            if (v != 0) all_zero = false;
            x.at(i) = ctx.num(v);
        }
        if (!all_zero) {
            Scalar hx = hermitian_H(g, m, canon, j, x);
            if (hx != kappa) return ConstantHResult{false, kappa, std::make_pair(e0, x)};
        }
        int pos = 0;
        while (pos < n && ++digits[static_cast<size_t>(pos)] == static_cast<int>(range.size())) {
            digits[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    throw Error("symmetrized quartics differ but no grid witness found");
}

// Decomposition of the self-dual Weyl operator in a basis adapted to J.
// All data is expressed in coordinates on the unnormalized self-dual basis
// u_1, u_2, u_3 (see pm_basis); omega has unit coordinates c there. The
// basis is completed by w = e_q - c_q c (first q with c_q^2 != 1) and its
// J-image; both have squared length ntilde = 1 - c_q^2, kept as a separate
// scale so every stored number stays rational.
struct JBlocks {
    Scalar topleft;          // <W+ omega-hat, omega-hat>, equals |N|^2 + s/6
    Vec omega_coords;        // c, unit vector in u-coordinates
    Vec w_dir;               // adapted direction, unnormalized, |w|^2 = ntilde
    Vec wj_dir;              // its J-image, unnormalized, same length
    Vec womega_raw;          // (w^T W c, wJ^T W c), unnormalized
    Scalar womega_scale_sq;  // 1/ntilde
    Scalar womega_norm_sq;   // scale_sq * |womega_raw|^2
    Mat w00;                 // 2x2 trace-free block
    Scalar frobenius_sq;     // |W+|^2 = (3/2) t^2 + 2 |womega|^2 + |w00|^2
};

inline JBlocks wplus_J_blocks(const LieAlgebra& g, const MetricFrame& m, const Form& omega) {
    if (g.dim() != 4) throw DimensionMismatch("J-adapted blocks implemented for dimension 4");
    const ScalarCtx& ctx = g.ctx();
    Compatibility comp = compatibility(m, omega, ctx);
    if (!comp.compatible) throw Error("omega is not compatible with the metric");

    OperatorBlocks blocks = curvature_blocks(g, m);
    const Mat& l = blocks.coframe;

    // omega in the orthonormal frame; self-dual coordinates c.
    Mat jf = l * comp.j * inverse(l);
    Mat omega_f = -jf;  // Omega_f = -G_f J_f with G_f = Id
    auto up = pm_basis(m.orientation, true, ctx);
    auto um = pm_basis(m.orientation, false, ctx);
    auto pairs = index_tuples(4, 2);
    Vec om_pair(6, ctx.zero());
    for (size_t p = 0; p < pairs.size(); ++p)
        om_pair.at(static_cast<int>(p)) = omega_f.at(pairs[p][0], pairs[p][1]);
    Scalar half = ctx.num(1, 2);
    Vec c(3, ctx.zero());
    for (int p = 0; p < 3; ++p) {
        c.at(p) = half * dot(om_pair, up[static_cast<size_t>(p)]);
        if (!dot(om_pair, um[static_cast<size_t>(p)]).is_zero())
            throw Error("omega is not self-dual for this orientation");
    }
    if (dot(c, c) != ctx.one()) throw Error("unexpected omega normalization");

    // Adapted directions in u-coordinates.
    int q = 0;
    while (q < 3 && c.at(q) * c.at(q) == ctx.one()) ++q;
    Vec w = Vec::basis(3, q, ctx) - c.at(q) * c;
    Scalar ntilde = ctx.one() - c.at(q) * c.at(q);

    // J-image of the 2-form with u-coordinates w.
    Vec w_pair(6, ctx.zero());
    for (int p = 0; p < 3; ++p) w_pair = w_pair + w.at(p) * up[static_cast<size_t>(p)];
    Mat phi(4, 4, ctx.zero());
    for (size_t p = 0; p < pairs.size(); ++p) {
        phi.at(pairs[p][0], pairs[p][1]) = w_pair.at(static_cast<int>(p));
        phi.at(pairs[p][1], pairs[p][0]) = -w_pair.at(static_cast<int>(p));
    }
    Mat phi_j = jf.transpose() * phi;
    Vec wj(3, ctx.zero());
    for (int p = 0; p < 3; ++p) {
        Vec upair = up[static_cast<size_t>(p)];
        Scalar coord = ctx.zero(), anti = ctx.zero();
        for (size_t pp = 0; pp < pairs.size(); ++pp) {
            coord += upair.at(static_cast<int>(pp)) * phi_j.at(pairs[pp][0], pairs[pp][1]);
            anti += um[static_cast<size_t>(p)].at(static_cast<int>(pp)) *
                    phi_j.at(pairs[pp][0], pairs[pp][1]);
        }
        if (!anti.is_zero()) throw Error("J-image of the adapted direction left the self-dual side");
        wj.at(p) = half * coord;
    }
    if (!dot(wj, c).is_zero() || !dot(wj, w).is_zero() || dot(wj, wj) != ntilde)
        throw Error("adapted basis failed its orthogonality checks");

    const Mat& wp = blocks.wplus;
    Scalar t = dot(wp * c, c);
    Vec raw(2, ctx.zero());
    raw.at(0) = dot(wp * c, w);
    raw.at(1) = dot(wp * c, wj);
    Scalar scale_sq = ctx.one() / ntilde;
    Scalar norm_sq = scale_sq * dot(raw, raw);
    Mat bottom(2, 2, ctx.zero());
    bottom.at(0, 0) = dot(wp * w, w);
    bottom.at(0, 1) = dot(wp * w, wj);
    bottom.at(1, 0) = dot(wp * wj, w);
    bottom.at(1, 1) = dot(wp * wj, wj);
    Mat w00 = scale_sq * bottom + (t * half) * Mat::identity(2, ctx);
    Scalar fro = ctx.num(3, 2) * t * t + ctx.num(2) * norm_sq;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) fro += w00.at(a, b) * w00.at(a, b);
    return JBlocks{t, c, w, wj, raw, scale_sq, norm_sq, std::move(w00), fro};
}

}  // namespace akgeom

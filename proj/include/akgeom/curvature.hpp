#pragma once

// Levi-Civita connection, curvature tensor, Ricci data, Hodge star, Weyl
// tensor, and the curvature operator in an orthonormal frame, all for
// left-invariant metrics given by a Gram matrix on the algebra's basis.
//
// Conventions:
//   Koszul     2 g(D_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)
//   curvature  R(X,Y) = -[D_X, D_Y] + D_[X,Y]
//   components R_ijkl = g(R(e_i,e_j) e_k, e_l)
//   Ricci      ric_jk = g^il R_ijlk,  s = g^jk ric_jk
// With these signs the hyperbolic plane has R_1212 = -1 and s = -2.

#include "lie_algebra.hpp"

#include <array>

namespace akgeom {

struct NotPositiveDefinite : Error {
    NotPositiveDefinite() : Error("metric Gram matrix is not positive definite") {}
};

// A left-invariant metric plus a choice of orientation: orientation = +1
// means e_1 ^ ... ^ e_n is positively oriented, -1 that it is negatively
// oriented.
struct MetricFrame {
    Mat gram;
    int orientation = 1;

    MetricFrame(Mat g, int orient) : gram(std::move(g)), orientation(orient) {
        if (orientation != 1 && orientation != -1) throw BadInput("orientation must be +1 or -1");
        if (!is_positive_definite(gram)) throw NotPositiveDefinite();
    }
};

inline MetricFrame metric_from_coframe(const Mat& l, int orientation = 1) {
    return MetricFrame(l.transpose() * l, orientation);
}

// (0,4) curvature components with bounds-checked access.
class RiemannTensor {
public:
    explicit RiemannTensor(int dim, const ScalarCtx& ctx = {})
        : dim_(dim),
          a_(static_cast<size_t>(dim) * static_cast<size_t>(dim) * static_cast<size_t>(dim) *
                 static_cast<size_t>(dim),
             ctx.zero()) {}

    int dim() const { return dim_; }
    Scalar& at(int i, int j, int k, int l) { return a_[index(i, j, k, l)]; }
    const Scalar& at(int i, int j, int k, int l) const { return a_[index(i, j, k, l)]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }
    friend RiemannTensor operator-(const RiemannTensor& x, const RiemannTensor& y) {
        if (x.dim_ != y.dim_) throw DimensionMismatch("tensor dimension mismatch");
        RiemannTensor r = x;
        for (size_t p = 0; p < r.a_.size(); ++p) r.a_[p] -= y.a_[p];
        return r;
    }
    friend RiemannTensor operator*(const Scalar& c, const RiemannTensor& x) {
        RiemannTensor r = x;
        for (size_t p = 0; p < r.a_.size(); ++p) r.a_[p] = c * r.a_[p];
        return r;
    }

private:
    size_t index(int i, int j, int k, int l) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_ || l < 0 || l >= dim_)
            throw DimensionMismatch("curvature index out of range");
        return ((static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)) *
                    static_cast<size_t>(dim_) +
                static_cast<size_t>(k)) *
                   static_cast<size_t>(dim_) +
               static_cast<size_t>(l);
    }
    int dim_;
    std::vector<Scalar> a_;
};

// Levi-Civita connection: result[i] is the matrix of D_{e_i}, so
// result[i](k, j) = Gamma^k_{ij}.
inline std::vector<Mat> levi_civita(const LieAlgebra& g, const MetricFrame& m) {
    int n = g.dim();
    if (m.gram.rows() != n) throw DimensionMismatch("metric size mismatch");
    const ScalarCtx& ctx = g.ctx();
    Mat ginv = inverse(m.gram);
    Scalar half = ctx.num(1, 2);
    std::vector<Mat> d;
    d.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Mat di(n, n, ctx.zero());
        Vec ei = Vec::basis(n, i, ctx);
        for (int j = 0; j < n; ++j) {
            Vec ej = Vec::basis(n, j, ctx);
            Vec rhs(n, ctx.zero());
            for (int k = 0; k < n; ++k) {
                Vec ek = Vec::basis(n, k, ctx);
                Scalar t = dot(m.gram * g.bracket(ei, ej), ek);
                t -= dot(m.gram * g.bracket(ej, ek), ei);
                t += dot(m.gram * g.bracket(ek, ei), ej);
                rhs.at(k) = half * t;
            }
            Vec col = ginv * rhs;
            for (int k = 0; k < n; ++k) di.at(k, j) = col.at(k);
        }
        d.push_back(std::move(di));
    }
    return d;
}

// (0,4) curvature of the given connection matrices.
inline RiemannTensor riemann(const LieAlgebra& g, const MetricFrame& m,
                             const std::vector<Mat>& conn) {
    int n = g.dim();
    const ScalarCtx& ctx = g.ctx();
    RiemannTensor r(n, ctx);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat rend = conn[static_cast<size_t>(j)] * conn[static_cast<size_t>(i)] -
                       conn[static_cast<size_t>(i)] * conn[static_cast<size_t>(j)];
            for (int k = 0; k < n; ++k) {
                const Scalar& ck = g.c(k, i, j);
                if (ck.is_zero()) continue;
                rend = rend + ck * conn[static_cast<size_t>(k)];
            }
            Mat low = m.gram * rend;  // low(l,k) = g(R(e_i,e_j) e_k, e_l)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    r.at(i, j, k, l) = low.at(l, k);
                    r.at(j, i, k, l) = -low.at(l, k);
                }
        }
    return r;
}

inline RiemannTensor riemann(const LieAlgebra& g, const MetricFrame& m) {
    return riemann(g, m, levi_civita(g, m));
}

struct RicciData {
    Mat ricci;
    Scalar scalar;
    Mat traceless;  // ricci - (s/n) gram
};

inline RicciData ricci_scalar(const LieAlgebra& g, const MetricFrame& m, const RiemannTensor& r) {
    int n = g.dim();
    const ScalarCtx& ctx = g.ctx();
    Mat ginv = inverse(m.gram);
    Mat ric(n, n, ctx.zero());
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Scalar s = ctx.zero();
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) s += ginv.at(i, l) * r.at(i, j, l, k);
            ric.at(j, k) = s;
        }
    Scalar s = ctx.zero();
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) s += ginv.at(j, k) * ric.at(j, k);
    Mat r0 = ric - (s / ctx.num(n)) * m.gram;
    return RicciData{std::move(ric), s, std::move(r0)};
}

// Kulkarni-Nomizu product of two symmetric bilinear forms.
inline RiemannTensor kulkarni(const Mat& h, const Mat& k) {
    int n = h.rows();
    if (h.cols() != n || k.rows() != n || k.cols() != n)
        throw DimensionMismatch("Kulkarni-Nomizu needs square matrices of equal size");
    RiemannTensor r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    r.at(i, j, a, b) = h.at(i, a) * k.at(j, b) + h.at(j, b) * k.at(i, a) -
                                       h.at(i, b) * k.at(j, a) - h.at(j, a) * k.at(i, b);
    return r;
}

// Weyl tensor in dimension 4: W = R - (1/2) r0 o g - (s/24) g o g, with o
// the Kulkarni-Nomizu product and r0 the trace-free Ricci tensor.
inline RiemannTensor weyl(const LieAlgebra& g, const MetricFrame& m) {
    if (g.dim() != 4) throw DimensionMismatch("Weyl decomposition implemented for dimension 4");
    const ScalarCtx& ctx = g.ctx();
    RiemannTensor r = riemann(g, m);
    RicciData rd = ricci_scalar(g, m, r);
    RiemannTensor w = r - ctx.num(1, 2) * kulkarni(rd.traceless, m.gram) -
                      (rd.scalar / ctx.num(24)) * kulkarni(m.gram, m.gram);
    return w;
}

inline Scalar scalar_curvature(const LieAlgebra& g, const MetricFrame& m) {
    return ricci_scalar(g, m, riemann(g, m)).scalar;
}

// Single (0,4) Weyl component W(e_i, e_j, e_k, e_l).
inline Scalar weyl_component(const LieAlgebra& g, const MetricFrame& m, int i, int j, int k,
                             int l) {
    return weyl(g, m).at(i, j, k, l);
}

// Hodge star on 2-forms as a matrix on lexicographic pair coordinates:
// (*b)_kl = (sigma sqrt(det G) / 2) b^{ij} eps_ijkl. In exact mode det G
// must be a perfect square; Gram matrices of the form L^T L always are.
inline Mat hodge_star_2(const MetricFrame& m) {
    int n = m.gram.rows();
    if (n != 4) throw DimensionMismatch("Hodge star on 2-forms implemented for dimension 4");
    ScalarCtx ctx;
    if (m.gram.at(0, 0).mode() == Mode::Float)
        ctx = ScalarCtx{Mode::Float, m.gram.at(0, 0).tolerance()};
    Mat ginv = inverse(m.gram);
    Scalar vol = det(m.gram).sqrt();
    if (m.orientation < 0) vol = -vol;
    auto pairs = index_tuples(4, 2);
    auto eps = [](int a, int b, int c, int d) {
        std::vector<int> v{a, b, c, d};
        return sort_sign(v);
    };
    Mat star(6, 6, ctx.zero());
    Scalar half = ctx.num(1, 2);
    for (size_t q = 0; q < pairs.size(); ++q) {
        int i = pairs[q][0], j = pairs[q][1];  // source f^{ij}, b_ij = 1
        for (size_t p = 0; p < pairs.size(); ++p) {
            int k = pairs[p][0], l = pairs[p][1];
            Scalar acc = ctx.zero();
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    int e = eps(a, b, k, l);
                    if (e == 0) continue;
                    // b^{ab} for b = f^i ^ f^j
                    Scalar up = ginv.at(a, i) * ginv.at(b, j) - ginv.at(a, j) * ginv.at(b, i);
                    if (up.is_zero()) continue;
                    acc += ctx.num(e) * up;
                }
            star.at(static_cast<int>(p), static_cast<int>(q)) = half * vol * acc;
        }
    }
    return star;
}

// Coordinates of the unnormalized (anti-)self-dual basis in lexicographic
// pair coordinates. For a positively oriented frame the self-dual side is
// f^12 + f^34, f^13 - f^24, f^14 + f^23; a negative orientation swaps the
// two sides.
inline std::array<Vec, 3> pm_basis(int sigma, bool self_dual, const ScalarCtx& ctx = {}) {
    if (sigma != 1 && sigma != -1) throw BadInput("orientation must be +1 or -1");
    bool plus = (sigma == 1) == self_dual;
    std::array<Vec, 3> u{Vec(6, ctx.zero()), Vec(6, ctx.zero()), Vec(6, ctx.zero())};
    Scalar one = ctx.one();
    Scalar sgn = plus ? ctx.one() : ctx.num(-1);
    u[0].at(0) = one;  // f^12
    u[0].at(5) = sgn;  // f^34
    u[1].at(1) = one;   // f^13
    u[1].at(4) = -sgn;  // f^24
    u[2].at(2) = one;  // f^14
    u[2].at(3) = sgn;  // f^23
    return u;
}

// Curvature operator and its Weyl blocks in an orthonormal frame.
struct OperatorBlocks {
    Mat coframe;  // rows are the orthonormal coframe in the original basis
    Mat op;       // 6x6, op_(ab)(cd) = R'_abcd in the orthonormal frame
    Mat bplus;    // 3x3 self-dual block of op (normalized)
    Mat bminus;   // 3x3 anti-self-dual block
    Mat offdiag;  // 3x3 mixed block
    Mat wplus;    // bplus - (s/12) Id
    Mat wminus;   // bminus - (s/12) Id
    Scalar scalar;
};

inline OperatorBlocks curvature_blocks(const LieAlgebra& g, const MetricFrame& m) {
    if (g.dim() != 4) throw DimensionMismatch("operator blocks implemented for dimension 4");
    const ScalarCtx& ctx = g.ctx();
    Mat l = orthonormal_coframe(m.gram);
    LieAlgebra gf = g.change_basis(inverse(l));
    MetricFrame mf(Mat::identity(4, ctx), m.orientation);
    RiemannTensor r4 = riemann(gf, mf);
    RicciData rd = ricci_scalar(gf, mf, r4);

    auto pairs = index_tuples(4, 2);
    Mat op(6, 6, ctx.zero());
    for (size_t p = 0; p < pairs.size(); ++p)
        for (size_t q = 0; q < pairs.size(); ++q)
            op.at(static_cast<int>(p), static_cast<int>(q)) =
                r4.at(pairs[p][0], pairs[p][1], pairs[q][0], pairs[q][1]);

    auto up = pm_basis(m.orientation, true, ctx);
    auto um = pm_basis(m.orientation, false, ctx);
    Scalar half = ctx.num(1, 2);
    Mat bplus(3, 3, ctx.zero()), bminus(3, 3, ctx.zero()), off(3, 3, ctx.zero());
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            bplus.at(p, q) = half * dot(op * up[static_cast<size_t>(p)], up[static_cast<size_t>(q)]);
            bminus.at(p, q) =
                half * dot(op * um[static_cast<size_t>(p)], um[static_cast<size_t>(q)]);
            off.at(p, q) = half * dot(op * up[static_cast<size_t>(p)], um[static_cast<size_t>(q)]);
        }
    Scalar s12 = rd.scalar / ctx.num(12);
    Mat eye3 = Mat::identity(3, ctx);
    OperatorBlocks out{std::move(l),
                       std::move(op),
                       bplus,
                       bminus,
                       off,
                       bplus - s12 * eye3,
                       bminus - s12 * eye3,
                       rd.scalar};
    return out;
}

}  // namespace akgeom

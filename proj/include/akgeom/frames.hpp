#pragma once

// Triangular coframes on 4-dimensional algebras and the metrics and
// almost-Hermitian structures assembled from them.
//
// A parameter tuple (a1, ..., a10) with a1, a3, a6, a10 > 0 encodes an
// orthonormal coframe built Gram-Schmidt style over the dual basis {e^i}:
//
//   f^1 = a1 e^1
//   f^2 = a2 f^1 + a3 e^2
//   f^3 = a4 f^1 + a5 f^2 + a6 e^3
//   f^4 = a7 f^1 + a8 f^2 + a9 f^3 + a10 e^4
//
// The rows of the returned matrix are the f^i in e-coordinates, so the
// metric declaring {f^i} orthonormal has Gram matrix L^T L and
// orthonormal_coframe recovers L exactly.

#include <array>
#include <utility>

#include "curvature.hpp"
#include "forms.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace akgeom {

inline ScalarCtx ctx_of(const Scalar& s) {
    if (s.mode() == Mode::Exact) return ScalarCtx{};
    return ScalarCtx{Mode::Float, s.tolerance()};
}

inline Mat coframe_from_params(const std::array<Scalar, 10>& a) {
    ScalarCtx ctx = ctx_of(a[0]);
    for (int i : {0, 2, 5, 9})
        if (a[static_cast<size_t>(i)].sign() <= 0)
            throw BadInput("coframe parameters a1, a3, a6, a10 must be positive");
    Mat l(4, 4, ctx.zero());
    l.at(0, 0) = a[0];
    for (int j = 0; j < 4; ++j) l.at(1, j) = a[1] * l.at(0, j);
    l.at(1, 1) += a[2];
    for (int j = 0; j < 4; ++j) l.at(2, j) = a[3] * l.at(0, j) + a[4] * l.at(1, j);
    l.at(2, 2) += a[5];
    for (int j = 0; j < 4; ++j)
        l.at(3, j) = a[6] * l.at(0, j) + a[7] * l.at(1, j) + a[8] * l.at(2, j);
    l.at(3, 3) += a[9];
    return l;
}

inline MetricFrame metric_from_params(const std::array<Scalar, 10>& a, int orientation = 1) {
    return metric_from_coframe(coframe_from_params(a), orientation);
}

// Completion of (a1..a6) to the unique parameter tail killing the Weyl
// tensor of the associated metric: a9 = 0, a10 = a6, and
//   a8 = (a1 a2 a5 + a1 a4) / a3,
//   a7 = -(a1^2 a2^2 a5 + a1^2 a2 a4 + a3^2 a5) / (a1 a3).
inline std::array<Scalar, 10> conf_flat_completion(const std::array<Scalar, 6>& a) {
    const Scalar &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4], &a6 = a[5];
    Scalar a8 = (a1 * a2 * a5 + a1 * a4) / a3;
    Scalar a7 = -(a1 * a1 * a2 * a2 * a5 + a1 * a1 * a2 * a4 + a3 * a3 * a5) / (a1 * a3);
    Scalar zero = a1 - a1;
    return {a1, a2, a3, a4, a5, a6, a7, a8, zero, a6};
}

// Rational points on the unit circle: t -> ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)).
inline std::pair<Scalar, Scalar> circle_point(const Scalar& t) {
    ScalarCtx ctx = ctx_of(t);
    Scalar den = ctx.one() + t * t;
    return {(ctx.one() - t * t) / den, (t + t) / den};
}

// Two-form components between the e-basis and the coframe rows of l:
// if Omega_e is the component matrix over {e^i} then the same form has
// component matrix (L^-1)^T Omega_e L^-1 over {f^i}, and back again.
inline Form two_form_to_frame(const Mat& l, const Form& omega_e) {
    if (omega_e.degree() != 2) throw BadInput("frame conversion expects a 2-form");
    int n = omega_e.dim();
    ScalarCtx ctx = ctx_of(l.at(0, 0));
    Mat linv = inverse(l);
    Mat oe(n, n, ctx.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) oe.at(i, j) = omega_e.value({i, j});
    Mat of = linv.transpose() * oe * linv;
    Form out(n, 2, ctx);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.set({i, j}, of.at(i, j));
    return out;
}

inline Form two_form_from_frame(const Mat& l, const Form& omega_f) {
    if (omega_f.degree() != 2) throw BadInput("frame conversion expects a 2-form");
    int n = omega_f.dim();
    ScalarCtx ctx = ctx_of(l.at(0, 0));
    Mat of(n, n, ctx.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) of.at(i, j) = omega_f.value({i, j});
    Mat oe = l.transpose() * of * l;
    Form out(n, 2, ctx);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.set({i, j}, oe.at(i, j));
    return out;
}

// Almost-Kaehler data over the conformally flat completions with a2 = 0 and
// a3 = a1 (so a7 = -a5, a8 = a4).  The fundamental form in the coframe is
//   omega = b2 f^13 + b3 f^14 + b3 f^23 - b2 f^24,   b2^2 + b3^2 = 1.
struct FrameStructure {
    std::array<Scalar, 10> params;
    Mat coframe;
    MetricFrame metric;
    Form omega;  // e-coordinates
};

inline std::array<Scalar, 10> ak_params(const Scalar& a1, const Scalar& a4, const Scalar& a5,
                                        const Scalar& a6) {
    Scalar zero = a1 - a1;
    return conf_flat_completion({a1, zero, a1, a4, a5, a6});
}

inline Form ak_omega_frame(const Scalar& b2, const Scalar& b3) {
    ScalarCtx ctx = ctx_of(b2);
    Form omega(4, 2, ctx);
    omega.set({0, 2}, b2);
    omega.set({0, 3}, b3);
    omega.set({1, 2}, b3);
    omega.set({1, 3}, -b2);
    return omega;
}

inline FrameStructure ak_structure(const Scalar& a1, const Scalar& a4, const Scalar& a5,
                                   const Scalar& a6, const Scalar& b2, const Scalar& b3) {
    std::array<Scalar, 10> params = ak_params(a1, a4, a5, a6);
    Mat l = coframe_from_params(params);
    MetricFrame metric = metric_from_coframe(l, 1);
    Form omega = two_form_from_frame(l, ak_omega_frame(b2, b3));
    return FrameStructure{std::move(params), std::move(l), std::move(metric), std::move(omega)};
}

}  // namespace akgeom

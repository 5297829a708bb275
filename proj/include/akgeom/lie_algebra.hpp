#pragma once

// Finite-dimensional real Lie algebras given by structure constants,
// together with the left-invariant exterior differential they induce on
// forms.
//
// Sign conventions used throughout:
//   [e_i, e_j] = sum_k c^k_{ij} e_k
//   (d alpha)(X, Y) = -alpha([X, Y])                   for 1-forms
//   (d gamma)(X_0..X_p) = sum_{a<b} (-1)^{a+b} gamma([X_a,X_b], ..hats..)
// so that d e^k = - sum_{i<j} c^k_{ij} e^i ^ e^j.

#include "forms.hpp"

#include <functional>
#include <optional>
#include <string>

namespace akgeom {

struct JacobiReport {
    bool ok = true;
    int i = -1, j = -1, k = -1;  // first violating triple when !ok
};

class LieAlgebra {
public:
    explicit LieAlgebra(int dim, const ScalarCtx& ctx = {})
        : dim_(dim), ctx_(ctx),
          c_(static_cast<size_t>(dim) * static_cast<size_t>(dim) * static_cast<size_t>(dim),
             ctx.zero()) {
        if (dim <= 0) throw DimensionMismatch("Lie algebra dimension must be positive");
    }

    int dim() const { return dim_; }
    const ScalarCtx& ctx() const { return ctx_; }

    // Structure constant c^k_{ij}.
    const Scalar& c(int k, int i, int j) const { return c_[index(k, i, j)]; }

    // Sets the e_k component of [e_i, e_j] to v (and of [e_j, e_i] to -v).
    void set_bracket(int i, int j, int k, const Scalar& v) {
        if (i == j) throw BadInput("bracket of a basis vector with itself");
        c_[index(k, i, j)] = v;
        c_[index(k, j, i)] = -v;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw DimensionMismatch("bracket argument size");
        Vec r(dim_, ctx_.zero());
        for (int i = 0; i < dim_; ++i) {
            if (x.at(i).is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y.at(j).is_zero() || i == j) continue;
                Scalar f = x.at(i) * y.at(j);
                for (int k = 0; k < dim_; ++k) r.at(k) += f * c(k, i, j);
            }
        }
        return r;
    }

    // Matrix of ad(e_i): column j holds [e_i, e_j].
    Mat ad(int i) const {
        Mat m(dim_, dim_, ctx_.zero());
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) m.at(k, j) = c(k, i, j);
        return m;
    }

    JacobiReport jacobi_check() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = j + 1; k < dim_; ++k) {
                    Vec ei = Vec::basis(dim_, i, ctx_);
                    Vec ej = Vec::basis(dim_, j, ctx_);
                    Vec ek = Vec::basis(dim_, k, ctx_);
                    Vec cyc = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                              bracket(bracket(ek, ei), ej);
                    if (!cyc.is_zero()) return JacobiReport{false, i, j, k};
                }
        return JacobiReport{};
    }

    bool is_unimodular() const {
        for (int i = 0; i < dim_; ++i)
            if (!ad(i).trace().is_zero()) return false;
        return true;
    }

    Form exterior_d(const Form& f) const {
        if (f.dim() != dim_) throw DimensionMismatch("form dimension mismatch");
        if (f.degree() >= dim_) throw DimensionMismatch("no room above top degree");
        Form r(dim_, f.degree() + 1, ctx_);
        auto targets = index_tuples(dim_, f.degree() + 1);
        for (size_t t = 0; t < targets.size(); ++t) {
            const auto& idx = targets[t];
            Scalar acc = ctx_.zero();
            int p = static_cast<int>(idx.size());
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b) {
                    Vec br = bracket(Vec::basis(dim_, idx[static_cast<size_t>(a)], ctx_),
                                     Vec::basis(dim_, idx[static_cast<size_t>(b)], ctx_));
                    std::vector<int> rest;
                    for (int q = 0; q < p; ++q)
                        if (q != a && q != b) rest.push_back(idx[static_cast<size_t>(q)]);
                    Scalar term = ctx_.zero();
                    for (int m = 0; m < dim_; ++m) {
                        if (br.at(m).is_zero()) continue;
                        std::vector<int> args{m};
                        args.insert(args.end(), rest.begin(), rest.end());
                        term += br.at(m) * f.value(args);
                    }
                    acc += ((a + b) % 2 == 0) ? term : -term;
                }
            r.comp(static_cast<int>(t)) = acc;
        }
        return r;
    }

    // Rewrites the algebra in the frame f_a = sum_i A(i,a) e_i, i.e. the
    // columns of A are the new basis vectors in the old coordinates.
    LieAlgebra change_basis(const Mat& a) const {
        if (a.rows() != dim_ || a.cols() != dim_)
            throw DimensionMismatch("basis change must be square of matching size");
        Mat b = inverse(a);
        LieAlgebra out(dim_, ctx_);
        for (int p = 0; p < dim_; ++p)
            for (int q = p + 1; q < dim_; ++q) {
                Vec br = bracket(a.col(p), a.col(q));
                Vec coords = b * br;
                for (int k = 0; k < dim_; ++k)
                    if (!coords.at(k).is_zero()) out.set_bracket(p, q, k, coords.at(k));
            }
        return out;
    }

    // d e^k for k = 0..dim-1.
    std::vector<Form> structure_equations() const {
        std::vector<Form> eqs;
        for (int k = 0; k < dim_; ++k) eqs.push_back(exterior_d(covector(dim_, k, ctx_)));
        return eqs;
    }

    static LieAlgebra from_structure_equations(const std::vector<Form>& eqs,
                                               const ScalarCtx& ctx = {}) {
        int dim = static_cast<int>(eqs.size());
        LieAlgebra out(dim, ctx);
        for (int k = 0; k < dim; ++k) {
            if (eqs[static_cast<size_t>(k)].dim() != dim ||
                eqs[static_cast<size_t>(k)].degree() != 2)
                throw BadInput("structure equations must be 2-forms of matching dimension");
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) {
                    Scalar v = eqs[static_cast<size_t>(k)].value({i, j});
                    if (!v.is_zero()) out.set_bracket(i, j, k, -v);
                }
        }
        return out;
    }

private:
    size_t index(int k, int i, int j) const {
        if (k < 0 || k >= dim_ || i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw DimensionMismatch("structure constant index out of range");
        return (static_cast<size_t>(k) * static_cast<size_t>(dim_) + static_cast<size_t>(i)) *
                   static_cast<size_t>(dim_) +
               static_cast<size_t>(j);
    }

    int dim_;
    ScalarCtx ctx_;
    std::vector<Scalar> c_;
};

}  // namespace akgeom

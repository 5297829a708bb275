#pragma once

// Constant-coefficient exterior forms. Components are stored on strictly
// increasing index tuples in lexicographic order, so a 2-form in dimension 4
// has six components ordered 12, 13, 14, 23, 24, 34.

#include "linalg.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace akgeom {

// All strictly increasing k-tuples out of {0..dim-1}, lexicographic.
inline std::vector<std::vector<int>> index_tuples(int dim, int degree) {
    if (degree < 0 || degree > dim) throw DimensionMismatch("bad form degree");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == degree) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < dim; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline int tuple_position(int dim, const std::vector<int>& tuple) {
    auto all = index_tuples(dim, static_cast<int>(tuple.size()));
    for (size_t p = 0; p < all.size(); ++p)
        if (all[p] == tuple) return static_cast<int>(p);
    throw DimensionMismatch("index tuple not strictly increasing");
}

// Sorts the indices, returning the permutation sign, or 0 on a repeat.
inline int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        for (size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return 0;
    return sign;
}

class Form {
public:
    Form() : dim_(0), degree_(0) {}
    Form(int dim, int degree, const ScalarCtx& ctx = {})
        : dim_(dim), degree_(degree),
          c_(index_tuples(dim, degree).size(), ctx.zero()) {}

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    int components() const { return static_cast<int>(c_.size()); }

    Scalar& comp(int pos) {
        if (pos < 0 || pos >= components()) throw DimensionMismatch("form component out of range");
        return c_[static_cast<size_t>(pos)];
    }
    const Scalar& comp(int pos) const {
        if (pos < 0 || pos >= components()) throw DimensionMismatch("form component out of range");
        return c_[static_cast<size_t>(pos)];
    }

    // Fully antisymmetric accessor: indices in any order, with sign.
    Scalar value(std::vector<int> idx) const {
        if (static_cast<int>(idx.size()) != degree_)
            throw DimensionMismatch("form evaluated at wrong arity");
        for (int i : idx)
            if (i < 0 || i >= dim_) throw DimensionMismatch("form index out of range");
        int sgn = sort_sign(idx);
        if (sgn == 0) return c_[0] - c_[0];
        Scalar v = c_[static_cast<size_t>(tuple_position(dim_, idx))];
        return sgn > 0 ? v : -v;
    }
    void set(std::vector<int> idx, const Scalar& v) {
        if (static_cast<int>(idx.size()) != degree_)
            throw DimensionMismatch("form set at wrong arity");
        int sgn = sort_sign(idx);
        if (sgn == 0) throw BadInput("repeated index in form component");
        c_[static_cast<size_t>(tuple_position(dim_, idx))] = sgn > 0 ? v : -v;
    }

    friend Form operator+(const Form& a, const Form& b) {
        same_type(a, b);
        Form r = a;
        for (int p = 0; p < r.components(); ++p) r.comp(p) += b.comp(p);
        return r;
    }
    friend Form operator-(const Form& a, const Form& b) {
        same_type(a, b);
        Form r = a;
        for (int p = 0; p < r.components(); ++p) r.comp(p) -= b.comp(p);
        return r;
    }
    friend Form operator*(const Scalar& s, const Form& a) {
        Form r = a;
        for (int p = 0; p < r.components(); ++p) r.comp(p) = s * r.comp(p);
        return r;
    }
    Form operator-() const {
        Form r = *this;
        for (int p = 0; p < r.components(); ++p) r.comp(p) = -r.comp(p);
        return r;
    }
    friend bool operator==(const Form& a, const Form& b) {
        if (a.dim_ != b.dim_ || a.degree_ != b.degree_) return false;
        for (int p = 0; p < a.components(); ++p)
            if (a.comp(p) != b.comp(p)) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    // Coefficient vector in the lexicographic component basis.
    Vec coords() const {
        Vec v(components());
        for (int p = 0; p < components(); ++p) v.at(p) = comp(p);
        return v;
    }
    static Form from_coords(int dim, int degree, const Vec& v) {
        Form f(dim, degree);
        if (v.size() != f.components()) throw DimensionMismatch("form coordinate size mismatch");
        for (int p = 0; p < f.components(); ++p) f.comp(p) = v.at(p);
        return f;
    }

private:
    static void same_type(const Form& a, const Form& b) {
        if (a.dim_ != b.dim_ || a.degree_ != b.degree_)
            throw DimensionMismatch("form type mismatch");
    }
    int dim_, degree_;
    std::vector<Scalar> c_;
};

inline Form wedge(const Form& a, const Form& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("wedge dimension mismatch");
    int deg = a.degree() + b.degree();
    if (deg > a.dim()) throw DimensionMismatch("wedge degree exceeds dimension");
    ScalarCtx ctx;
    if (a.components() > 0 && a.comp(0).mode() == Mode::Float)
        ctx = ScalarCtx{Mode::Float, a.comp(0).tolerance()};
    Form r(a.dim(), deg, ctx);
    auto ta = index_tuples(a.dim(), a.degree());
    auto tb = index_tuples(b.dim(), b.degree());
    for (size_t pa = 0; pa < ta.size(); ++pa) {
        if (a.comp(static_cast<int>(pa)).is_zero()) continue;
        for (size_t pb = 0; pb < tb.size(); ++pb) {
            if (b.comp(static_cast<int>(pb)).is_zero()) continue;
            std::vector<int> idx = ta[pa];
            idx.insert(idx.end(), tb[pb].begin(), tb[pb].end());
            int sgn = sort_sign(idx);
            if (sgn == 0) continue;
            Scalar term = a.comp(static_cast<int>(pa)) * b.comp(static_cast<int>(pb));
            int pos = tuple_position(a.dim(), idx);
            r.comp(pos) += sgn > 0 ? term : -term;
        }
    }
    return r;
}

// e^{i} (0-based index) as a 1-form.
inline Form covector(int dim, int i, const ScalarCtx& ctx = {}) {
    Form f(dim, 1, ctx);
    f.comp(i) = ctx.one();
    return f;
}

}  // namespace akgeom

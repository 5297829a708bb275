#pragma once

// Sparse multivariate polynomials over Scalar, with exact interpolation from
// samples on a tensor grid.  Interpolating a quantity that is polynomial of
// known degree and comparing coefficients against a reference polynomial
// turns finitely many exact samples into an identity proof.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace akgeom {

class Poly {
  public:
    explicit Poly(int nvars, const ScalarCtx& ctx = {}) : nvars_(nvars), ctx_(ctx) {
        if (nvars < 0) throw BadInput("polynomial needs a nonnegative variable count");
    }

    static Poly constant(int nvars, const Scalar& c) {
        Poly p(nvars, ScalarCtx{c.mode(), c.tolerance()});
        p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
        return p;
    }

    static Poly variable(int nvars, int i, const ScalarCtx& ctx = {}) {
        if (i < 0 || i >= nvars) throw BadInput("variable index out of range");
        Poly p(nvars, ctx);
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = 1;
        p.add_term(e, ctx.one());
        return p;
    }

    int nvars() const { return nvars_; }
    const ScalarCtx& ctx() const { return ctx_; }
    const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Scalar& c) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw BadInput("exponent vector length does not match the variable count");
        for (int e : exps)
            if (e < 0) throw BadInput("negative exponent");
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(exps, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Scalar coeff(const std::vector<int>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? ctx_.zero() : it->second;
    }

    bool is_zero() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_zero()) return false;
        return true;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            if (c.is_zero()) continue;
            int t = 0;
            for (int x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    Scalar eval(const std::vector<Scalar>& x) const {
        if (static_cast<int>(x.size()) != nvars_)
            throw BadInput("evaluation point has the wrong dimension");
        Scalar acc = ctx_.zero();
        for (const auto& [e, c] : terms_) {
            Scalar term = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[static_cast<size_t>(i)]; ++k)
                    term *= x[static_cast<size_t>(i)];
            acc += term;
        }
        return acc;
    }

    Poly operator-() const {
        Poly out(nvars_, ctx_);
        for (const auto& [e, c] : terms_) out.add_term(e, -c);
        return out;
    }
    Poly& operator+=(const Poly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly out(a.nvars_, a.ctx_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend Poly operator*(const Scalar& s, const Poly& p) {
        Poly out(p.nvars_, p.ctx_);
        for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (int i = 0; i < nvars_; ++i) {
                int k = e[static_cast<size_t>(i)];
                if (k == 0) continue;
                os << "*";
                if (static_cast<size_t>(i) < names.size())
                    os << names[static_cast<size_t>(i)];
                else
                    os << "x" << i;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

  private:
    void check_same(const Poly& o) const {
        if (nvars_ != o.nvars_) throw BadInput("polynomials live in different variable counts");
    }

    int nvars_;
    ScalarCtx ctx_;
    std::map<std::vector<int>, Scalar> terms_;
};

inline std::vector<std::vector<int>> monomials_up_to(int nvars, int max_degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<size_t>(pos)] = e;
            rec(pos + 1, left - e);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(0, max_degree);
    return out;
}

// Fit a polynomial of total degree <= max_degree to fn sampled on the tensor
// power of a one-variable grid.  The grid needs at least max_degree + 1
// distinct values per variable; the linear system is then uniquely solvable,
// and any inconsistency means fn is not such a polynomial.
inline Poly interpolate(int nvars, int max_degree, const std::vector<Scalar>& grid,
                        const std::function<Scalar(const std::vector<Scalar>&)>& fn) {
    if (nvars <= 0) throw BadInput("interpolation needs at least one variable");
    if (static_cast<int>(grid.size()) < max_degree + 1)
        throw BadInput("interpolation grid is too small for the declared degree");
    ScalarCtx ctx{grid[0].mode(), grid[0].tolerance()};

    auto monos = monomials_up_to(nvars, max_degree);
    size_t m = monos.size();
    size_t npoints = 1;
    for (int i = 0; i < nvars; ++i) {
        npoints *= grid.size();
        if (npoints > 100000) throw BadInput("interpolation grid is too large");
    }

    Mat sys(static_cast<int>(npoints), static_cast<int>(m) + 1, ctx.zero());
    std::vector<size_t> odo(static_cast<size_t>(nvars), 0);
    std::vector<Scalar> point(static_cast<size_t>(nvars), ctx.zero());
    for (size_t row = 0; row < npoints; ++row) {
        for (int i = 0; i < nvars; ++i) point[static_cast<size_t>(i)] = grid[odo[static_cast<size_t>(i)]];
        for (size_t col = 0; col < m; ++col) {
            Scalar v = ctx.one();
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < monos[col][static_cast<size_t>(i)]; ++k)
                    v *= point[static_cast<size_t>(i)];
            sys.at(static_cast<int>(row), static_cast<int>(col)) = v;
        }
        sys.at(static_cast<int>(row), static_cast<int>(m)) = fn(point);
        for (int i = nvars - 1; i >= 0; --i) {
            if (++odo[static_cast<size_t>(i)] < grid.size()) break;
            odo[static_cast<size_t>(i)] = 0;
        }
    }

    RrefResult red = rref(sys);
    std::vector<bool> pivot(m + 1, false);
    for (size_t i = 0; i < red.pivot_cols.size(); ++i) {
        size_t c = static_cast<size_t>(red.pivot_cols[i]);
        pivot[c] = true;
        if (c == m)
            throw BadInput("sampled values are not a polynomial of the declared degree");
    }
    for (size_t c = 0; c < m; ++c)
        if (!pivot[c]) throw BadInput("interpolation grid does not determine the coefficients");

    Poly out(nvars, ctx);
    for (size_t i = 0; i < red.pivot_cols.size(); ++i)
        out.add_term(monos[static_cast<size_t>(red.pivot_cols[i])],
                     red.r.at(static_cast<int>(i), static_cast<int>(m)));

    for (size_t row = 0; row < npoints; ++row) {
        // Row-equivalence already forces agreement; re-evaluate anyway so a
        // tolerance quirk in float mode cannot slip through.
        for (int i = 0; i < nvars; ++i) point[static_cast<size_t>(i)] = grid[odo[static_cast<size_t>(i)]];
        if (!(out.eval(point) - fn(point)).is_zero())
            throw BadInput("interpolant fails to reproduce a sample");
        for (int i = nvars - 1; i >= 0; --i) {
            if (++odo[static_cast<size_t>(i)] < grid.size()) break;
            odo[static_cast<size_t>(i)] = 0;
        }
    }
    return out;
}

}  // namespace akgeom

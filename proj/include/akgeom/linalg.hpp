#pragma once

// Dense vectors and matrices over Scalar, with the solvers the geometry
// needs: RREF, nullspace, linear solve, determinant, inverse, an SPD test,
// and the lower-triangular coframe factorization G = L^T L.
//
// All access is bounds-checked. Pivoting picks the first usable pivot in
// exact mode and the largest magnitude entry in float mode.

#include "scalar.hpp"

#include <optional>
#include <vector>

namespace akgeom {

class Vec {
public:
    Vec() = default;
    explicit Vec(int n, Scalar fill = Scalar()) : a_(static_cast<size_t>(check_size(n)), fill) {}
    static Vec basis(int n, int i, const ScalarCtx& ctx = {}) {
        Vec v(n, ctx.zero());
        v.at(i) = ctx.one();
        return v;
    }

    int size() const { return static_cast<int>(a_.size()); }
    Scalar& at(int i) {
        if (i < 0 || i >= size()) throw DimensionMismatch("vector index out of range");
        return a_[static_cast<size_t>(i)];
    }
    const Scalar& at(int i) const {
        if (i < 0 || i >= size()) throw DimensionMismatch("vector index out of range");
        return a_[static_cast<size_t>(i)];
    }

    friend Vec operator+(const Vec& x, const Vec& y) {
        same_size(x, y);
        Vec r = x;
        for (int i = 0; i < r.size(); ++i) r.at(i) += y.at(i);
        return r;
    }
    friend Vec operator-(const Vec& x, const Vec& y) {
        same_size(x, y);
        Vec r = x;
        for (int i = 0; i < r.size(); ++i) r.at(i) -= y.at(i);
        return r;
    }
    friend Vec operator*(const Scalar& c, const Vec& x) {
        Vec r = x;
        for (int i = 0; i < r.size(); ++i) r.at(i) = c * r.at(i);
        return r;
    }
    Vec operator-() const {
        Vec r = *this;
        for (int i = 0; i < r.size(); ++i) r.at(i) = -r.at(i);
        return r;
    }
    friend bool operator==(const Vec& x, const Vec& y) {
        if (x.size() != y.size()) return false;
        for (int i = 0; i < x.size(); ++i)
            if (x.at(i) != y.at(i)) return false;
        return true;
    }

    bool is_zero() const {
        for (int i = 0; i < size(); ++i)
            if (!at(i).is_zero()) return false;
        return true;
    }

private:
    static int check_size(int n) {
        if (n < 0) throw DimensionMismatch("negative vector size");
        return n;
    }
    static void same_size(const Vec& x, const Vec& y) {
        if (x.size() != y.size()) throw DimensionMismatch("vector size mismatch");
    }
    std::vector<Scalar> a_;
};

inline Scalar dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("dot size mismatch");
    if (x.size() == 0) throw DimensionMismatch("dot of empty vectors");
    Scalar s = x.at(0) * y.at(0);
    for (int i = 1; i < x.size(); ++i) s += x.at(i) * y.at(i);
    return s;
}

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, Scalar fill = Scalar())
        : rows_(check_dim(rows)), cols_(check_dim(cols)),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

    static Mat identity(int n, const ScalarCtx& ctx = {}) {
        Mat m(n, n, ctx.zero());
        for (int i = 0; i < n; ++i) m.at(i, i) = ctx.one();
        return m;
    }
    static Mat diag(const std::vector<Scalar>& d) {
        Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) {
        check_index(i, j);
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }
    const Scalar& at(int i, int j) const {
        check_index(i, j);
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    Vec row(int i) const {
        Vec v(cols_);
        for (int j = 0; j < cols_; ++j) v.at(j) = at(i, j);
        return v;
    }
    Vec col(int j) const {
        Vec v(rows_);
        for (int i = 0; i < rows_; ++i) v.at(i) = at(i, j);
        return v;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        same_shape(x, y);
        Mat r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        same_shape(x, y);
        Mat r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    friend Mat operator*(const Scalar& c, const Mat& x) {
        Mat r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = c * r.a_[k];
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = -r.a_[k];
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Mat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < y.cols_; ++j) {
                Scalar s = x.at(i, 0) * y.at(0, j);
                for (int k = 1; k < x.cols_; ++k) s += x.at(i, k) * y.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }
    friend Vec operator*(const Mat& x, const Vec& v) {
        if (x.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        Vec r(x.rows_);
        for (int i = 0; i < x.rows_; ++i) {
            Scalar s = x.at(i, 0) * v.at(0);
            for (int k = 1; k < x.cols_; ++k) s += x.at(i, k) * v.at(k);
            r.at(i) = s;
        }
        return r;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (size_t k = 0; k < x.a_.size(); ++k)
            if (x.a_[k] != y.a_[k]) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }
    Scalar trace() const {
        if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
        if (rows_ == 0) throw DimensionMismatch("trace of empty matrix");
        Scalar s = at(0, 0);
        for (int i = 1; i < rows_; ++i) s += at(i, i);
        return s;
    }

private:
    static int check_dim(int n) {
        if (n < 0) throw DimensionMismatch("negative matrix dimension");
        return n;
    }
    void check_index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw DimensionMismatch("matrix index out of range");
    }
    static void same_shape(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw DimensionMismatch("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Mat r;
    std::vector<int> pivot_cols;
    int rank = 0;
};

// Row reduction to reduced row echelon form. In float mode the pivot is the
// largest-magnitude candidate; entries within tolerance of zero are cleared.
inline RrefResult rref(Mat m) {
    RrefResult out;
    int lead = 0;
    bool flt = false;
    for (int i = 0; i < m.rows() && lead == 0; ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j).mode() == Mode::Float) { flt = true; break; }
    for (int r = 0; r < m.rows(); ++r) {
        if (lead >= m.cols()) break;
        int piv = -1;
        for (int col = lead; col < m.cols() && piv < 0; ++col) {
            if (flt) {
                int best = -1;
                double best_mag = 0.0;
                for (int i = r; i < m.rows(); ++i) {
                    double mag = std::abs(m.at(i, col).to_double());
                    if (!m.at(i, col).is_zero() && mag > best_mag) { best = i; best_mag = mag; }
                }
                if (best >= 0) { piv = best; lead = col; }
            } else {
                for (int i = r; i < m.rows(); ++i)
                    if (!m.at(i, col).is_zero()) { piv = i; lead = col; break; }
            }
        }
        if (piv < 0) break;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar p = m.at(r, lead);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) / p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, lead).is_zero()) continue;
            Scalar f = m.at(i, lead);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivot_cols.push_back(lead);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    out.r = std::move(m);
    return out;
}

inline int rank(const Mat& m) { return rref(m).rank; }

// Basis of the right nullspace, one vector per free column.
inline std::vector<Vec> nullspace(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    ScalarCtx ctx;
    if (m.rows() > 0 && m.cols() > 0 && m.at(0, 0).mode() == Mode::Float)
        ctx = ScalarCtx{Mode::Float, m.at(0, 0).tolerance()};
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        Vec v(m.cols(), ctx.zero());
        v.at(free) = ctx.one();
        for (size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v.at(rr.pivot_cols[k]) = -rr.r.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves a x = b; returns nullopt when inconsistent. Underdetermined systems
// get the particular solution with free variables set to zero.
inline std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
    if (a.rows() != b.size()) throw DimensionMismatch("solve shape mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b.at(i);
    }
    RrefResult rr = rref(std::move(aug));
    for (int c : rr.pivot_cols)
        if (c == a.cols()) return std::nullopt;
    ScalarCtx ctx;
    if (b.size() > 0 && b.at(0).mode() == Mode::Float)
        ctx = ScalarCtx{Mode::Float, b.at(0).tolerance()};
    Vec x(a.cols(), ctx.zero());
    for (size_t k = 0; k < rr.pivot_cols.size(); ++k)
        x.at(rr.pivot_cols[k]) = rr.r.at(static_cast<int>(k), a.cols());
    return x;
}

inline Scalar det(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) throw DimensionMismatch("determinant of empty matrix");
    Mat w = m;
    ScalarCtx ctx;
    if (w.at(0, 0).mode() == Mode::Float) ctx = ScalarCtx{Mode::Float, w.at(0, 0).tolerance()};
    Scalar d = ctx.one();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        if (ctx.mode == Mode::Float) {
            double best = 0.0;
            for (int i = c; i < n; ++i) {
                double mag = std::abs(w.at(i, c).to_double());
                if (!w.at(i, c).is_zero() && mag > best) { piv = i; best = mag; }
            }
        } else {
            for (int i = c; i < n; ++i)
                if (!w.at(i, c).is_zero()) { piv = i; break; }
        }
        if (piv < 0) return ctx.zero();
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(c, j));
            d = -d;
        }
        d *= w.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (w.at(i, c).is_zero()) continue;
            Scalar f = w.at(i, c) / w.at(c, c);
            for (int j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    return d;
}

inline Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows();
    Mat aug(n, 2 * n);
    ScalarCtx ctx;
    if (n > 0 && m.at(0, 0).mode() == Mode::Float)
        ctx = ScalarCtx{Mode::Float, m.at(0, 0).tolerance()};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        for (int j = 0; j < n; ++j) aug.at(i, n + j) = i == j ? ctx.one() : ctx.zero();
    }
    RrefResult rr = rref(std::move(aug));
    if (rr.rank < n) throw Error("matrix is singular");
    for (int k = 0; k < n; ++k)
        if (rr.pivot_cols[static_cast<size_t>(k)] != k) throw Error("matrix is singular");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
    return inv;
}

// Sylvester's criterion on the leading principal minors.
inline bool is_positive_definite(const Mat& g) {
    if (g.rows() != g.cols()) throw DimensionMismatch("SPD test on non-square matrix");
    if (!g.is_symmetric()) return false;
    for (int k = 1; k <= g.rows(); ++k) {
        Mat minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = g.at(i, j);
        if (det(minor).sign() <= 0) return false;
    }
    return true;
}

// Factors a symmetric positive definite G as G = L^T L with L lower
// triangular and positive diagonal; the rows of L are then an orthonormal
// coframe for the metric G, following the triangular pattern f^1 = a e^1,
// f^2 = b e^1 + c e^2, ... Rows are filled bottom-up: the last row of L is
// determined by the last row of G, and each earlier row follows from the
// rows below it. The factorization is unique; in exact mode it exists only
// when the pivots produced along the way are perfect squares.
inline Mat orthonormal_coframe(const Mat& g) {
    if (!is_positive_definite(g)) throw Error("coframe factor needs a positive definite matrix");
    int n = g.rows();
    Mat l(n, n);
    ScalarCtx ctx;
    if (g.at(0, 0).mode() == Mode::Float) ctx = ScalarCtx{Mode::Float, g.at(0, 0).tolerance()};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) l.at(i, j) = ctx.zero();
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i; j >= 0; --j) {
            // G_ij = sum_k L_ki L_kj; only k >= max(i,j) = i contributes.
            Scalar s = g.at(i, j);
            for (int k = i + 1; k < n; ++k) s -= l.at(k, i) * l.at(k, j);
            if (j == i) {
                l.at(i, i) = s.sqrt();
            } else {
                l.at(i, j) = s / l.at(i, i);
            }
        }
    }
    return l;
}

}  // namespace akgeom

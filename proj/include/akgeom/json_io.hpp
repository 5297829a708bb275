#pragma once

// JSON serialization for the library types.  Exact scalars travel as rational
// strings ("p/q", or "3" for integers); float-mode scalars travel as JSON
// numbers.  Keys use nlohmann's ordered_json so identical inputs dump to
// byte-identical text.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "curvature.hpp"
#include "forms.hpp"
#include "hermitian.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace akgeom {

using json = nlohmann::ordered_json;

inline json scalar_to_json(const Scalar& s) {
    if (s.mode() == Mode::Exact) return s.str();
    return s.to_double();
}

inline Scalar scalar_from_json(const json& j, const ScalarCtx& ctx) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), ctx.mode, ctx.tol);
    if (j.is_number_integer()) return ctx.num(j.get<long>());
    if (j.is_number()) {
        if (ctx.mode == Mode::Exact)
            throw BadInput("exact mode needs rational strings, got a float");
        return Scalar::flt(j.get<double>(), ctx.tol);
    }
    throw BadInput("expected a scalar");
}

inline json vec_to_json(const Vec& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v.at(i)));
    return out;
}

inline Vec vec_from_json(const json& j, const ScalarCtx& ctx) {
    if (!j.is_array()) throw BadInput("expected a vector");
    Vec v(static_cast<int>(j.size()), ctx.zero());
    for (size_t i = 0; i < j.size(); ++i)
        v.at(static_cast<int>(i)) = scalar_from_json(j[i], ctx);
    return v;
}

inline json mat_to_json(const Mat& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline Mat mat_from_json(const json& j, const ScalarCtx& ctx) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw BadInput("expected a matrix");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    Mat m(rows, cols, ctx.zero());
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[static_cast<size_t>(r)].size()) != cols)
            throw BadInput("ragged matrix");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = scalar_from_json(j[static_cast<size_t>(r)][static_cast<size_t>(c)], ctx);
    }
    return m;
}

inline std::string pair_key(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

inline json form2_to_json(const Form& f) {
    if (f.degree() != 2) throw BadInput("serialization expects a 2-form");
    json out = json::object();
    for (const auto& idx : index_tuples(f.dim(), 2))
        out[pair_key(idx[0], idx[1])] = scalar_to_json(f.value({idx[0], idx[1]}));
    return out;
}

inline Form form2_from_json(const json& j, int dim, const ScalarCtx& ctx) {
    if (!j.is_object()) throw BadInput("expected an object of 2-form components");
    Form f(dim, 2, ctx);
    for (const auto& [key, val] : j.items()) {
        if (key.size() != 2 || key[0] < '1' || key[1] < '1')
            throw BadInput("bad 2-form component key: " + key);
        int a = key[0] - '1', b = key[1] - '1';
        if (a >= b || b >= dim) throw BadInput("bad 2-form component key: " + key);
        f.set({a, b}, scalar_from_json(val, ctx));
    }
    return f;
}

inline json algebra_to_json(const LieAlgebra& g) {
    json brackets = json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k) {
                Scalar v = g.c(k, i, j);
                if (v.is_zero()) continue;
                brackets.push_back(json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1},
                                        {"value", scalar_to_json(v)}});
            }
    return json{{"dim", g.dim()}, {"brackets", std::move(brackets)}};
}

inline LieAlgebra algebra_from_json(const json& j, const ScalarCtx& ctx) {
    if (!j.is_object() || !j.contains("dim")) throw BadInput("algebra JSON needs a dim field");
    int dim = j["dim"].get<int>();
    if (dim <= 0) throw BadInput("algebra dimension must be positive");
    LieAlgebra g(dim, ctx);
    if (!j.contains("brackets")) return g;
    for (const auto& b : j["brackets"]) {
        int i = b.at("i").get<int>(), jj = b.at("j").get<int>(), k = b.at("k").get<int>();
        if (i < 1 || jj < 1 || k < 1 || i > dim || jj > dim || k > dim || i >= jj)
            throw BadInput("bracket indices must be 1-based with i < j");
        g.set_bracket(i - 1, jj - 1, k - 1, scalar_from_json(b.at("value"), ctx));
    }
    return g;
}

inline json metric_to_json(const MetricFrame& m) {
    return json{{"gram", mat_to_json(m.gram)}, {"orientation", m.orientation}};
}

inline MetricFrame metric_from_json(const json& j, const ScalarCtx& ctx) {
    if (!j.is_object() || !j.contains("gram")) throw BadInput("metric JSON needs a gram field");
    int orientation = j.value("orientation", 1);
    return MetricFrame(mat_from_json(j["gram"], ctx), orientation);
}

inline json structure_to_json(const MetricFrame& m, const Form& omega) {
    return json{{"gram", mat_to_json(m.gram)},
                {"orientation", m.orientation},
                {"omega", form2_to_json(omega)}};
}

struct StructureData {
    MetricFrame metric;
    Form omega;
};

inline StructureData structure_from_json(const json& j, const ScalarCtx& ctx) {
    MetricFrame m = metric_from_json(j, ctx);
    if (!j.contains("omega")) throw BadInput("structure JSON needs an omega field");
    Form omega = form2_from_json(j["omega"], m.gram.rows(), ctx);
    return StructureData{std::move(m), std::move(omega)};
}

inline json riemann_to_json(const RiemannTensor& r) {
    json out = json::array();
    for (int i = 0; i < r.dim(); ++i) {
        json ji = json::array();
        for (int j = 0; j < r.dim(); ++j) {
            json jj = json::array();
            for (int k = 0; k < r.dim(); ++k) {
                json jk = json::array();
                for (int l = 0; l < r.dim(); ++l) jk.push_back(scalar_to_json(r.at(i, j, k, l)));
                jj.push_back(std::move(jk));
            }
            ji.push_back(std::move(jj));
        }
        out.push_back(std::move(ji));
    }
    return out;
}

inline json connection_to_json(const std::vector<Mat>& conn) {
    json out = json::array();
    for (const Mat& m : conn) out.push_back(mat_to_json(m));
    return out;
}

inline json curvature_report(const LieAlgebra& g, const MetricFrame& m) {
    auto conn = levi_civita(g, m);
    RiemannTensor r = riemann(g, m, conn);
    RicciData ric = ricci_scalar(g, m, r);
    RiemannTensor w = weyl(g, m);
    OperatorBlocks blocks = curvature_blocks(g, m);
    json out;
    out["schema"] = "curvature-report/1";
    out["algebra"] = algebra_to_json(g);
    out["metric"] = metric_to_json(m);
    out["coframe"] = mat_to_json(blocks.coframe);
    out["connection"] = connection_to_json(conn);
    out["riemann"] = riemann_to_json(r);
    out["ricci"] = mat_to_json(ric.ricci);
    out["scalar"] = scalar_to_json(ric.scalar);
    out["traceless_ricci"] = mat_to_json(ric.traceless);
    out["weyl"] = riemann_to_json(w);
    out["hodge_star"] = mat_to_json(hodge_star_2(m));
    out["operator"] = mat_to_json(blocks.op);
    out["blocks"] = json{{"bplus", mat_to_json(blocks.bplus)},
                         {"bminus", mat_to_json(blocks.bminus)},
                         {"offdiag", mat_to_json(blocks.offdiag)},
                         {"wplus", mat_to_json(blocks.wplus)},
                         {"wminus", mat_to_json(blocks.wminus)}};
    return out;
}

}  // namespace akgeom

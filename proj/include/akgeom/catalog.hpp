#pragma once

// Built-in algebra families. Basis indices are 0-based in code; printed
// names follow the 1-based convention (e1..e4).
//
//   abelian   all brackets zero
//   rr30      [e1,e3] = -e2, [e2,e3] = e1
//   r2prime   [e1,e3] = e3, [e1,e4] = e4, [e2,e3] = e4, [e2,e4] = -e3
//   dS        one-parameter family, lambda >= 0:
//             [e1,e2] = e2 - lambda e3, [e1,e3] = lambda e2 + e3,
//             [e1,e4] = 2 e4, [e2,e3] = -e4

#include "lie_algebra.hpp"

#include <map>

namespace akgeom {

inline LieAlgebra make_abelian(const ScalarCtx& ctx = {}) { return LieAlgebra(4, ctx); }

inline LieAlgebra make_rr30(const ScalarCtx& ctx = {}) {
    LieAlgebra g(4, ctx);
    g.set_bracket(0, 2, 1, ctx.num(-1));
    g.set_bracket(1, 2, 0, ctx.num(1));
    return g;
}

inline LieAlgebra make_r2prime(const ScalarCtx& ctx = {}) {
    LieAlgebra g(4, ctx);
    g.set_bracket(0, 2, 2, ctx.num(1));
    g.set_bracket(0, 3, 3, ctx.num(1));
    g.set_bracket(1, 2, 3, ctx.num(1));
    g.set_bracket(1, 3, 2, ctx.num(-1));
    return g;
}

inline LieAlgebra make_ds(const Scalar& lambda) {
    ScalarCtx ctx;
    if (lambda.mode() == Mode::Float) ctx = ScalarCtx{Mode::Float, lambda.tolerance()};
    if (lambda.sign() < 0) throw BadInput("dS family needs lambda >= 0");
    LieAlgebra g(4, ctx);
    g.set_bracket(0, 1, 1, ctx.num(1));
    g.set_bracket(0, 1, 2, -lambda);
    g.set_bracket(0, 2, 1, lambda);
    g.set_bracket(0, 2, 2, ctx.num(1));
    g.set_bracket(0, 3, 3, ctx.num(2));
    g.set_bracket(1, 2, 3, ctx.num(-1));
    return g;
}

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::vector<std::string> params;  // e.g. {"lambda"}
    bool unimodular;
};

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"abelian", "abelian R^4", {}, true},
        {"rr30", "direct sum of the 3d motion-group algebra e(2) and a line", {}, true},
        {"r2prime", "the algebra with de^3 = -e^13 + e^24, de^4 = -e^23 - e^14", {}, false},
        {"dS", "solvable one-parameter family carrying a constant-curvature metric",
         {"lambda"}, false},
    };
    return entries;
}

inline LieAlgebra make_catalog_algebra(const std::string& name,
                                       const std::map<std::string, Scalar>& params,
                                       const ScalarCtx& ctx = {}) {
    auto want = [&](std::initializer_list<const char*> keys) {
        for (const auto& kv : params) {
            bool known = false;
            for (const char* k : keys)
                if (kv.first == k) known = true;
            if (!known) throw BadInput("unknown parameter \"" + kv.first + "\" for " + name);
        }
    };
    if (name == "abelian") {
        want({});
        return make_abelian(ctx);
    }
    if (name == "rr30") {
        want({});
        return make_rr30(ctx);
    }
    if (name == "r2prime") {
        want({});
        return make_r2prime(ctx);
    }
    if (name == "dS" || name == "ds") {
        want({"lambda"});
        auto it = params.find("lambda");
        if (it == params.end()) throw BadInput("dS needs a lambda parameter");
        Scalar lam = it->second;
        if (ctx.mode == Mode::Float && lam.mode() == Mode::Exact)
            lam = Scalar::flt(lam.to_double(), ctx.tol);
        return make_ds(lam);
    }
    throw BadInput("unknown catalog name \"" + name + "\"");
}

}  // namespace akgeom

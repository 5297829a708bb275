// Command-line front end: catalog listing, curvature reports, claim
// verification, and randomized scans over the built-in families.
//
// Exit codes: 0 success / verified pass, 1 verified fail, 2 usage or input
// error.  Errors are emitted as JSON objects on stderr; reports go to stdout
// or, with --out, are written atomically (temp file + rename).

#include <CLI11.hpp>

#include <akgeom/verify.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace akgeom;

[[noreturn]] void fail(const char* code, const std::string& message) {
    json err;
    err["schema"] = "error/1";
    err["code"] = code;
    err["message"] = message;
    std::cerr << err.dump(2) << "\n";
    std::exit(2);
}

struct OutputOpts {
    std::string out;
    bool timing = false;
};

void emit(const json& doc, const OutputOpts& o) {
    std::string text = doc.dump(2);
    text.push_back('\n');
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = o.out + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) fail("bad-output", "cannot open " + tmp + " for writing");
        f << text;
        if (!f.good()) fail("bad-output", "short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), o.out.c_str()) != 0)
        fail("bad-output", "cannot move report into place at " + o.out);
}

ScalarCtx make_ctx(const std::string& mode, double tol) {
    if (mode == "exact") return ScalarCtx{};
    if (mode == "float") return ScalarCtx{Mode::Float, tol};
    fail("usage", "unknown mode \"" + mode + "\" (expected exact or float)");
}

Scalar parse_scalar(const std::string& text, const ScalarCtx& ctx, const char* what) {
    try {
        return Scalar::parse(text, ctx.mode, ctx.tol);
    } catch (const std::exception& e) {
        fail("bad-input", std::string("cannot parse ") + what + " \"" + text + "\": " + e.what());
    }
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail("bad-input", "cannot open " + path);
    try {
        return json::parse(f);
    } catch (const std::exception& e) {
        fail("bad-input", "cannot parse " + path + ": " + e.what());
    }
}

std::string render_term(const Scalar& c, int k, bool first) {
    std::string coeff = c.str();
    std::string sign = first ? "" : " + ";
    if (!coeff.empty() && coeff[0] == '-') {
        sign = first ? "-" : " - ";
        coeff = coeff.substr(1);
    }
    if (coeff == "1") coeff.clear();
    if (!coeff.empty()) coeff += " ";
    return sign + coeff + "e" + std::to_string(k + 1);
}

std::string render_brackets(const LieAlgebra& g) {
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            std::string rhs;
            bool first = true;
            for (int k = 0; k < g.dim(); ++k) {
                Scalar c = g.c(k, i, j);
                if (c.is_zero()) continue;
                rhs += render_term(c, k, first);
                first = false;
            }
            if (rhs.empty()) continue;
            out << "  [e" << (i + 1) << ",e" << (j + 1) << "] = " << rhs << "\n";
            any = true;
        }
    if (!any) out << "  (all brackets vanish)\n";
    return out.str();
}

// ---------------------------------------------------------------- catalog

int cmd_catalog(const std::string& name, const std::string& lambda_text, bool as_json,
                const ScalarCtx& ctx, const OutputOpts& out) {
    if (name.empty()) {
        if (as_json) {
            json doc;
            doc["schema"] = "catalog/1";
            json entries = json::array();
            for (const auto& e : catalog()) {
                json je;
                je["name"] = e.name;
                je["summary"] = e.summary;
                je["params"] = e.params;
                je["unimodular"] = e.unimodular;
                entries.push_back(je);
            }
            doc["entries"] = entries;
            emit(doc, out);
            return 0;
        }
        std::ostringstream text;
        for (const auto& e : catalog()) {
            text << e.name;
            if (!e.params.empty()) {
                text << " (params:";
                for (const auto& p : e.params) text << " " << p;
                text << ")";
            }
            text << (e.unimodular ? "  [unimodular]" : "") << "\n    " << e.summary << "\n";
        }
        std::cout << text.str();
        return 0;
    }

    std::map<std::string, Scalar> params;
    if (!lambda_text.empty()) params.emplace("lambda", parse_scalar(lambda_text, ctx, "lambda"));
    LieAlgebra g = [&] {
        try {
            return make_catalog_algebra(name, params, ctx);
        } catch (const Error& e) {
            fail("bad-input", e.what());
        }
    }();

    if (as_json) {
        json doc;
        doc["schema"] = "catalog-entry/1";
        doc["name"] = name;
        json jp = json::object();
        for (const auto& [k, v] : params) jp[k] = v.str();
        doc["params"] = jp;
        doc["unimodular"] = g.is_unimodular();
        doc["algebra"] = algebra_to_json(g);
        emit(doc, out);
        return 0;
    }
    std::cout << name;
    if (!lambda_text.empty()) std::cout << " (lambda = " << params.at("lambda").str() << ")";
    std::cout << "\n" << render_brackets(g);
    return 0;
}

// --------------------------------------------------------------- curvature

struct CoframeFlags {
    std::array<std::string, 10> a;
    bool any() const {
        for (const auto& s : a)
            if (!s.empty()) return true;
        return false;
    }
};

int cmd_curvature(const std::string& name, const std::string& lambda_text,
                  const std::string& algebra_path, const std::string& metric_path,
                  const CoframeFlags& cf, int orientation, const ScalarCtx& ctx,
                  const OutputOpts& out) {
    if (name.empty() == algebra_path.empty())
        fail("usage", "provide exactly one of --name or --algebra");
    if (!metric_path.empty() && cf.any())
        fail("usage", "--metric conflicts with coframe parameter flags");

    LieAlgebra g = [&] {
        try {
            if (!algebra_path.empty()) return algebra_from_json(load_json(algebra_path), ctx);
            std::map<std::string, Scalar> params;
            if (!lambda_text.empty())
                params.emplace("lambda", parse_scalar(lambda_text, ctx, "lambda"));
            return make_catalog_algebra(name, params, ctx);
        } catch (const Error& e) {
            fail("bad-input", e.what());
        }
    }();

    JacobiReport jr = g.jacobi_check();
    if (!jr.ok)
        fail("bad-input", "algebra fails the Jacobi identity at basis triple (" +
                              std::to_string(jr.i + 1) + "," + std::to_string(jr.j + 1) + "," +
                              std::to_string(jr.k + 1) + ")");

    try {
        MetricFrame m = [&] {
            if (!metric_path.empty()) return metric_from_json(load_json(metric_path), ctx);
            if (cf.any()) {
                // identity coframe defaults; flags override individual slots
                std::array<Scalar, 10> p = {ctx.one(),  ctx.zero(), ctx.one(),  ctx.zero(),
                                            ctx.zero(), ctx.one(),  ctx.zero(), ctx.zero(),
                                            ctx.zero(), ctx.one()};
                for (int i = 0; i < 10; ++i)
                    if (!cf.a[static_cast<size_t>(i)].empty())
                        p[static_cast<size_t>(i)] = parse_scalar(
                            cf.a[static_cast<size_t>(i)], ctx,
                            ("a" + std::to_string(i + 1)).c_str());
                return metric_from_params(p, orientation);
            }
            return MetricFrame(Mat::identity(4, ctx), orientation);
        }();
        emit(curvature_report(g, m), out);
        return 0;
    } catch (const Error& e) {
        fail("bad-input", e.what());
    }
}

// ------------------------------------------------------------------ verify

struct TupleFlags {
    std::array<std::string, 6> a;
    bool any() const {
        for (const auto& s : a)
            if (!s.empty()) return true;
        return false;
    }
    // fixed default entries, individually overridable
    std::array<Scalar, 6> resolve(const ScalarCtx& ctx) const {
        std::array<Scalar, 6> t = {ctx.one(),  ctx.num(2),  ctx.num(3),
                                   ctx.num(1, 2), ctx.num(-1), ctx.one()};
        for (int i = 0; i < 6; ++i)
            if (!a[static_cast<size_t>(i)].empty())
                t[static_cast<size_t>(i)] = parse_scalar(
                    a[static_cast<size_t>(i)], ctx, ("a" + std::to_string(i + 1)).c_str());
        return t;
    }
};

Corruption parse_corruption(const std::string& text) {
    if (text.empty() || text == "none") return Corruption::None;
    if (text == "jacobi-break") return Corruption::JacobiBreak;
    if (text == "bracket-sign") return Corruption::BracketSign;
    fail("usage", "unknown corruption \"" + text + "\" for this claim");
}

int cmd_verify(const std::string& claim, const std::vector<std::string>& lambda_texts,
               const TupleFlags& tf, const std::vector<std::string>& t_texts, int count,
               std::uint64_t seed, const std::string& corrupt, int corrupt_subclaim,
               const ScalarCtx& ctx, const OutputOpts& out) {
    if (ctx.mode != Mode::Exact)
        fail("usage", "verification reports are exact-only; float mode is for curvature "
                      "cross-checks");

    std::vector<Scalar> lambdas;
    for (const auto& s : lambda_texts) lambdas.push_back(parse_scalar(s, ctx, "lambda"));
    std::vector<Scalar> ts;
    for (const auto& s : t_texts) ts.push_back(parse_scalar(s, ctx, "t"));

    auto run = [&]() -> VerificationReport {
        if (claim == "dS-kahler")
            return verify_dS_kahler(lambdas.empty() ? default_lambdas() : lambdas,
                                    parse_corruption(corrupt));
        if (claim == "abelian-rr30") {
            if (!corrupt.empty() && corrupt != "none" && corrupt != "extra-bracket")
                fail("usage", "unknown corruption \"" + corrupt + "\" for this claim");
            return verify_abelian_rr30(count, seed, corrupt == "extra-bracket");
        }
        if (claim == "r2prime-conf-flat" || claim == "r2prime-ak") {
            std::vector<std::array<Scalar, 6>> tuples;
            if (tf.any())
                tuples.push_back(tf.resolve(ctx));
            else
                tuples = sample_conf_flat_tuples(count, seed);
            if (claim == "r2prime-ak")
                return verify_r2prime_ak(tuples, ts.empty() ? default_circle_ts() : ts);
            if (!corrupt.empty() && corrupt != "none" && corrupt != "a7-shift")
                fail("usage", "unknown corruption \"" + corrupt + "\" for this claim");
            return verify_r2prime_conf_flat(tuples, corrupt == "a7-shift");
        }
        if (claim == "main-theorem") {
            MainTheoremOptions opts;
            if (!lambdas.empty()) opts.lambdas = lambdas;
            if (tf.any()) opts.tuples = std::vector<std::array<Scalar, 6>>{tf.resolve(ctx)};
            if (!ts.empty()) opts.ts = ts;
            opts.count = count;
            opts.seed = seed;
            opts.corrupt_subclaim = corrupt_subclaim;
            return verify_main_theorem(opts);
        }
        fail("usage", "unknown claim \"" + claim +
                          "\" (expected dS-kahler, abelian-rr30, r2prime-conf-flat, "
                          "r2prime-ak, or main-theorem)");
    };

    try {
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep = run();
        auto t1 = std::chrono::steady_clock::now();
        std::optional<double> elapsed;
        if (out.timing) elapsed = std::chrono::duration<double>(t1 - t0).count();
        emit(report_to_json(rep, elapsed), out);
        return rep.pass() ? 0 : 1;
    } catch (const Error& e) {
        fail("bad-input", e.what());
    }
}

// -------------------------------------------------------------------- scan

int cmd_scan(const std::string& family, int samples, std::uint64_t seed, const ScalarCtx& ctx,
             const OutputOpts& out) {
    if (ctx.mode != Mode::Exact) fail("usage", "scan runs in exact mode only");
    if (samples <= 0) fail("usage", "--samples must be positive");

    RationalSampler rs(seed);
    json counts = json::object();

    if (family == "dS") {
        // random parameter and a random conformal scale of the distinguished
        // gram diag(4, 1, 1, 1)
        int wplus_zero = 0, weyl_nonzero = 0;
        for (int i = 0; i < samples; ++i) {
            Scalar lambda = (i % 4 == 0) ? ctx.zero() : rs.positive();
            Scalar c = rs.positive();
            Scalar c2 = c * c;
            LieAlgebra g = make_ds(lambda);
            MetricFrame m(Mat::diag({ctx.num(4) * c2, c2, c2, c2}), 1);
            if (curvature_blocks(g, m).wplus.is_zero()) ++wplus_zero;
            if (!weyl(g, m).is_zero()) ++weyl_nonzero;
        }
        counts["wplus_zero"] = wplus_zero;
        counts["weyl_nonzero"] = weyl_nonzero;
    } else if (family == "abelian") {
        int flat = 0, constant_zero = 0;
        LieAlgebra g = make_abelian(ctx);
        Mat j0(4, 4, ctx.zero());
        j0.at(0, 1) = ctx.num(-1);
        j0.at(1, 0) = ctx.one();
        j0.at(2, 3) = ctx.num(-1);
        j0.at(3, 2) = ctx.one();
        for (int i = 0; i < samples; ++i) {
            Mat l = rs.lower_triangular(4, 3);
            Mat gram = l.transpose() * l;
            MetricFrame m0(gram, 1);
            if (riemann(g, m0).is_zero()) ++flat;
            Mat j = inverse(l) * j0 * l;
            Form om = omega_from_j(m0, j);
            int sigma = wedge(om, om).comp(0).sign() > 0 ? 1 : -1;
            MetricFrame m(gram, sigma);
            Compatibility comp = from_metric_and_omega(g, m, om);
            if (!comp.compatible) continue;
            ConstantHResult res = constant_H_test(g, m, comp.j);
            if (res.constant && res.value.is_zero()) ++constant_zero;
        }
        counts["flat"] = flat;
        counts["constant_h_zero"] = constant_zero;
    } else if (family == "rr30") {
        int flat = 0, constant_zero = 0, weyl_nonzero = 0;
        LieAlgebra g = make_rr30(ctx);
        for (int i = 0; i < samples; ++i) {
            Scalar ra = rs.positive();
            Scalar rg = rs.positive();
            Scalar alpha = ra * ra;
            Scalar gamma = rg * rg;
            Scalar delta = (i % 2 == 0) ? gamma : ctx.num(4) * gamma;
            MetricFrame m(Mat::diag({alpha, alpha, gamma, delta}), 1);
            if (riemann(g, m).is_zero()) ++flat;
            Scalar u = (i % 2 == 0) ? gamma : gamma + gamma;
            Form om(4, 2, ctx);
            om.set({0, 1}, alpha);
            om.set({2, 3}, u);
            Compatibility comp = from_metric_and_omega(g, m, om);
            if (comp.compatible) {
                ConstantHResult res = constant_H_test(g, m, comp.j);
                if (res.constant && res.value.is_zero()) ++constant_zero;
            }
            Mat l = rs.lower_triangular(4, 3);
            if (!weyl(g, MetricFrame(l.transpose() * l, 1)).is_zero()) ++weyl_nonzero;
        }
        counts["flat"] = flat;
        counts["constant_h_zero"] = constant_zero;
        counts["generic_weyl_nonzero"] = weyl_nonzero;
    } else if (family == "r2prime") {
        int nonconstant = 0, topleft_zero = 0;
        LieAlgebra g = make_r2prime(ctx);
        MetricFrame mf_id(Mat::identity(4, ctx), 1);
        for (int i = 0; i < samples; ++i) {
            Scalar a1 = rs.positive();
            Scalar a4 = rs.any();
            Scalar a5 = rs.any();
            Scalar a6 = rs.positive();
            auto bc = circle_point(rs.any());
            FrameStructure st = ak_structure(a1, a4, a5, a6, bc.first, bc.second);
            LieAlgebra gf = g.change_basis(inverse(st.coframe));
            Form om_f = ak_omega_frame(bc.first, bc.second);
            Compatibility comp = compatibility(mf_id, om_f, ctx);
            if (!comp.compatible) continue;
            ConstantHResult res = constant_H_test(gf, mf_id, comp.j);
            if (!res.constant) ++nonconstant;
            if (wplus_J_blocks(g, st.metric, st.omega).topleft.is_zero()) ++topleft_zero;
        }
        counts["almost_kaehler_structures"] = samples;
        counts["nonconstant_h"] = nonconstant;
        counts["wplus_topleft_zero"] = topleft_zero;
    } else {
        fail("usage", "unknown family \"" + family +
                          "\" (expected abelian, rr30, r2prime, or dS)");
    }

    json doc;
    doc["schema"] = "scan-report/1";
    doc["family"] = family;
    doc["samples"] = samples;
    doc["seed"] = seed;
    doc["counts"] = counts;
    emit(doc, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curvature and verification tool for 4-dimensional metric Lie algebras"};
    app.require_subcommand(1);

    std::string mode = "exact";
    double tol = 1e-12;
    OutputOpts out;
    app.add_option("--mode", mode, "scalar mode: exact or float")->capture_default_str();
    app.add_option("--tol", tol, "float-mode comparison tolerance")->capture_default_str();
    app.add_option("--out", out.out, "write the report atomically to this path");
    app.add_flag("--timing", out.timing, "include elapsed_seconds in reports");

    auto* cat = app.add_subcommand("catalog", "list the built-in algebra families");
    cat->fallthrough();
    std::string cat_name, cat_lambda;
    bool cat_json = false;
    cat->add_option("--name", cat_name, "instantiate one family");
    cat->add_option("--lambda", cat_lambda, "family parameter (rational, e.g. 1/2)");
    cat->add_flag("--json", cat_json, "emit JSON instead of text");

    auto* cur = app.add_subcommand("curvature", "full curvature report for (algebra, metric)");
    cur->fallthrough();
    std::string cur_name, cur_lambda, cur_algebra, cur_metric;
    CoframeFlags cur_cf;
    int cur_orientation = 1;
    cur->add_option("--name", cur_name, "catalog algebra name");
    cur->add_option("--lambda", cur_lambda, "family parameter");
    cur->add_option("--algebra", cur_algebra, "algebra JSON file");
    cur->add_option("--metric", cur_metric, "metric JSON file (gram + orientation)");
    for (int i = 0; i < 10; ++i)
        cur->add_option("--a" + std::to_string(i + 1), cur_cf.a[static_cast<size_t>(i)],
                        "coframe parameter a" + std::to_string(i + 1));
    cur->add_option("--orientation", cur_orientation, "+1 or -1")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run a claim-level verification report");
    ver->fallthrough();
    std::string ver_claim, ver_corrupt;
    std::vector<std::string> ver_lambdas, ver_ts;
    TupleFlags ver_tf;
    int ver_count = 6;
    int ver_corrupt_subclaim = -1;
    std::uint64_t ver_seed = 20240817;
    ver->add_option("claim", ver_claim,
                    "dS-kahler | abelian-rr30 | r2prime-conf-flat | r2prime-ak | main-theorem")
        ->required();
    ver->add_option("--lambda", ver_lambdas, "lambda sample (repeatable)");
    for (int i = 0; i < 6; ++i)
        ver->add_option("--a" + std::to_string(i + 1), ver_tf.a[static_cast<size_t>(i)],
                        "tuple entry a" + std::to_string(i + 1));
    ver->add_option("--t", ver_ts, "circle parameter sample (repeatable)");
    ver->add_option("--count,--samples", ver_count, "sample count")->capture_default_str();
    ver->add_option("--seed", ver_seed, "sampling seed")->capture_default_str();
    ver->add_option("--corrupt", ver_corrupt,
                    "negative control: jacobi-break | bracket-sign | extra-bracket | a7-shift");
    ver->add_option("--corrupt-subclaim", ver_corrupt_subclaim,
                    "main-theorem negative control: corrupt sub-claim 0, 1, or 2");

    auto* scn = app.add_subcommand("scan", "sample structures on a family and count verdicts");
    scn->fallthrough();
    std::string scn_family;
    int scn_samples = 10;
    std::uint64_t scn_seed = 7;
    scn->add_option("family", scn_family, "abelian | rr30 | r2prime | dS")->required();
    scn->add_option("--samples", scn_samples, "number of samples")->capture_default_str();
    scn->add_option("--seed", scn_seed, "sampling seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        json err;
        err["schema"] = "error/1";
        err["code"] = "usage";
        err["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }

    ScalarCtx ctx = make_ctx(mode, tol);
    try {
        if (cat->parsed()) return cmd_catalog(cat_name, cat_lambda, cat_json, ctx, out);
        if (cur->parsed())
            return cmd_curvature(cur_name, cur_lambda, cur_algebra, cur_metric, cur_cf,
                                 cur_orientation, ctx, out);
        if (ver->parsed())
            return cmd_verify(ver_claim, ver_lambdas, ver_tf, ver_ts, ver_count, ver_seed,
                              ver_corrupt, ver_corrupt_subclaim, ctx, out);
        if (scn->parsed()) return cmd_scan(scn_family, scn_samples, scn_seed, ctx, out);
    } catch (const Error& e) {
        fail("bad-input", e.what());
    } catch (const std::exception& e) {
        fail("internal", e.what());
    }
    return 2;
}

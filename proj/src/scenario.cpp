#include "blax/scenario.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "blax/errors.hpp"
#include "blax/expr_parser.hpp"

namespace blax {

namespace {

using nlohmann::json;

const std::vector<std::string> kCheckOrder = {
    "cybe",    "constraints", "closure", "traces",      "lax",
    "pcm-closure", "charges", "crosscheck", "linear-limit"};

LieBasisSpec parse_algebra(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw MalformedInput("algebra must be an object with a 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "gl") return LieBasisSpec::gl(j.at("N").get<int>());
    if (type == "su2") return LieBasisSpec::su2();
    if (type == "su2_adjoint") return LieBasisSpec::su2_adjoint();
    if (type == "abelian") return LieBasisSpec::abelian_diagonal(j.at("N").get<int>());
    throw MalformedInput("unknown algebra type '" + type + "'");
}

MatrixRF parse_matrix(const json& j, int dim, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw MalformedInput(what + " must be a " + std::to_string(dim) + "x" +
                             std::to_string(dim) + " matrix of expression strings");
    MatrixRF m(dim);
    for (int i = 0; i < dim; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw MalformedInput(what + " row " + std::to_string(i) + " has wrong length");
        for (int c = 0; c < dim; ++c)
            m.at(i, c) = parse_expression(row.at(c).get<std::string>());
    }
    return m;
}

Eigen::MatrixXd parse_numeric_matrix(const json& j, int dim, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw MalformedInput(what + " must be a " + std::to_string(dim) + "x" +
                             std::to_string(dim) + " numeric matrix");
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int c = 0; c < dim; ++c) m(i, c) = j.at(i).at(c).get<double>();
    return m;
}

AntiAutomorphism parse_sigma(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "reflection") return AntiAutomorphism::reflection();
        if (s == "twisted") return AntiAutomorphism::twisted();
        throw MalformedInput("unknown sigma '" + s + "'");
    }
    if (j.is_object())
        return AntiAutomorphism::custom(j.at("sign").get<int>(),
                                        j.at("transpose").get<bool>(),
                                        j.at("negate_spectral").get<bool>());
    throw MalformedInput("sigma must be a name or a custom payload");
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(6) << v;
    return os.str();
}

std::string tensor_summary(const SpectralTensor& t) {
    if (t.is_zero()) return "zero";
    int nonzero = 0;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            if (!t.at(i, j).is_zero()) ++nonzero;
    return "nonzero (" + std::to_string(nonzero) + " entries)";
}

std::string matrix_field_summary(const MatrixFieldExpr& m) {
    if (m.is_zero()) return "zero";
    int nonzero = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).is_zero()) ++nonzero;
    return "nonzero (" + std::to_string(nonzero) + " entries)";
}

struct Runner {
    const Scenario& sc;
    int trace_order;
    Report report;

    // Built lazily: the symbolic stages beyond cybe/constraints need the full
    // model data (Lax matrix and bracket table), which only the builtin pair
    // provides.
    bool pcm_built = false;
    PCMData pcm;

    PCMData& model() {
        if (!pcm_built) {
            pcm = build_pcm(sc.algebra, false);
            pcm_built = true;
        }
        return pcm;
    }

    CheckRecord dispatch(const std::string& name) {
        if (name == "cybe") return cybe();
        if (name == "constraints") return constraints();
        if (name == "closure") return closure();
        if (name == "traces") return traces();
        if (name == "lax") return lax();
        if (name == "pcm-closure") return pcm_closure();
        if (name == "charges") return charges();
        if (name == "crosscheck") return crosscheck();
        if (name == "linear-limit") return linear_limit();
        throw MalformedInput("unknown check name '" + name + "'");
    }

    CheckRecord require_builtin(const std::string& name) {
        CheckRecord rec{name, "error",
                        "requires the builtin pcm Lax data (custom r,s given)",
                        {}, 0.0};
        return rec;
    }

    CheckRecord cybe() {
        CheckRecord rec{"cybe", "fail", "", {{"algebra", sc.algebra.name}}, 0.0};
        const auto res = cybe_residual(sc.r, sc.s);
        if (!res.s_symmetric) {
            rec.residual = "precondition failed: s is not symmetric";
            return rec;
        }
        if (!res.r_skew) {
            rec.residual = "precondition failed: r is not skew-symmetric";
            return rec;
        }
        rec.residual = tensor_summary(res.residual);
        rec.status = res.pass ? "pass" : "fail";
        return rec;
    }

    CheckRecord constraints() {
        CheckRecord rec{"constraints", "fail", "", {}, 0.0};
        const auto res_r = constraint_residual(sc.k, sc.r, sc.sigma);
        const auto res_s = constraint_residual(sc.k, sc.s, sc.sigma);
        rec.params["r_residual"] = tensor_summary(res_r);
        rec.params["s_residual"] = tensor_summary(res_s);
        const bool ok = res_r.is_zero() && res_s.is_zero();
        rec.residual = ok ? "zero" : "nonzero";
        rec.status = ok ? "pass" : "fail";
        return rec;
    }

    CheckRecord closure() {
        if (!sc.builtin_pcm) return require_builtin("closure");
        auto& d = model();
        const auto rep = closure_check(d.L, sc.k, sc.sigma, d.table, d.r, d.s);
        CheckRecord rec{"closure", rep.pass ? "pass" : "fail",
                        matrix_field_summary(rep.residual), {}, 0.0};
        rec.params["delta_prime_cnumber"] = rep.delta_prime_cnumber ? "true" : "false";
        rec.params["delta_prime_matches_fin"] =
            rep.delta_prime_matches_fin ? "true" : "false";
        rec.params["constraints_hold"] = rep.constraints_hold ? "true" : "false";
        return rec;
    }

    CheckRecord traces() {
        if (!sc.builtin_pcm) return require_builtin("traces");
        auto& d = model();
        CheckRecord rec{"traces", "pass", "zero", {}, 0.0};
        rec.params["max_power"] = std::to_string(trace_order);
        for (int n = 1; n <= trace_order; ++n)
            for (int m = 1; m <= trace_order; ++m) {
                const auto br = trace_commute(d.L, sc.k, sc.sigma, d.table, n, m);
                if (!br.is_zero()) {
                    rec.status = "fail";
                    rec.residual = "nonzero at powers (" + std::to_string(n) + "," +
                                   std::to_string(m) + ")";
                    return rec;
                }
            }
        return rec;
    }

    CheckRecord lax() {
        if (!sc.builtin_pcm) return require_builtin("lax");
        auto& d = model();
        CheckRecord rec{"lax", "pass", "zero", {{"orders", "1,2"}}, 0.0};
        const auto p1 = lax_partner(d.L, sc.k, sc.sigma, d.table, d.r, d.s, 1);
        const auto p2 = pcm_lax_partner(d, {sc.sigma, sc.k});
        for (const auto* p : {&p1, &p2}) {
            const auto res = zero_curvature_residual(*p, d.L, sc.k, sc.sigma, d.table);
            if (!res.is_zero()) {
                rec.status = "fail";
                rec.residual = "nonzero at order " + std::to_string(p->order);
                return rec;
            }
        }
        return rec;
    }

    CheckRecord pcm_closure() {
        if (!sc.builtin_pcm) return require_builtin("pcm-closure");
        const auto rep = boundary_current_closure(model(), {sc.sigma, sc.k});
        CheckRecord rec{"pcm-closure", rep.pass ? "pass" : "fail",
                        rep.pass ? "zero" : "nonzero", {}, 0.0};
        for (std::size_t i = 0; i < rep.failed_relations.size(); ++i)
            rec.params["failed_" + std::to_string(i)] = rep.failed_relations[i];
        return rec;
    }

    CurrentSample sample() const {
        return CurrentSample::random(sc.algebra.N, sc.numeric.seed, 3, 0.3,
                                     sc.numeric.length, sc.numeric.lattice);
    }

    KSeries kseries() const {
        if (sc.numeric.has_K) return sc.numeric.K;
        const int n = sc.algebra.N;
        KSeries K{Eigen::MatrixXd::Identity(n, n), Eigen::MatrixXd::Zero(n, n)};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) K.k(i, j) = to_double(sc.k.at(i, j).eval({}));
        return K;
    }

    CheckRecord charges() {
        const auto s = sample();
        const auto est = boundary_charges_direct(s, kseries(), sc.sigma);
        CheckRecord rec{"charges", "pass", "", {}, 0.0};
        rec.params["seed"] = std::to_string(s.seed);
        rec.params["h"] = fmt(est.h);
        rec.params["lattice"] = std::to_string(s.cells);
        rec.params["method"] = est.method;
        rec.params["t0_norm"] = fmt(est.t0.norm());
        rec.params["t1_norm"] = fmt(est.t1.norm());
        rec.params["ct0_norm"] = fmt(est.ct0.norm());
        rec.params["ct1_norm"] = fmt(est.ct1.norm());
        const bool finite = est.t0.allFinite() && est.t1.allFinite() &&
                            est.ct0.allFinite() && est.ct1.allFinite();
        rec.status = finite ? "pass" : "fail";
        rec.residual = finite ? "finite" : "non-finite";
        return rec;
    }

    CheckRecord crosscheck() {
        const auto s = sample();
        const auto rep =
            expansion_crosscheck(s, kseries(), sc.sigma, sc.numeric.lambda_grid);
        CheckRecord rec{"crosscheck", "fail", "", {}, 0.0};
        rec.params["seed"] = std::to_string(s.seed);
        rec.params["h"] = fmt(rep.step);
        rec.params["rel_ct0"] = fmt(rep.rel_ct0);
        rec.params["rel_ct1"] = fmt(rep.rel_ct1);
        // the printed vs j1-variant comparison of the second bulk coefficient
        rec.params["rel_t1_printed"] = fmt(rep.rel_t1_printed);
        rec.params["rel_t1_variant"] = fmt(rep.rel_t1_variant);
        rec.params["t1_match"] =
            rep.rel_t1_variant <= rep.rel_t1_printed ? "j1-variant" : "printed";
        // quadrature-limited tolerance for seeded bandlimited samples
        const double tol = 1e-4;
        const bool ok = rep.rel_ct0 < tol && rep.rel_ct1 < tol;
        rec.status = ok ? "pass" : "fail";
        rec.residual = "max rel " + fmt(std::max(rep.rel_ct0, rep.rel_ct1));
        return rec;
    }

    CheckRecord linear_limit() {
        if (!sc.builtin_pcm) return require_builtin("linear-limit");
        const auto rep = linear_limit_check(model(), {sc.sigma, sc.k});
        CheckRecord rec{"linear-limit", rep.found ? "pass" : "fail",
                        rep.found ? "zero" : "no argument reading matches", {}, 0.0};
        rec.params["gen_matches"] = rep.gen_matches ? "true" : "false";
        rec.params["candidates"] = std::to_string(rep.candidates.size());
        if (rep.found) rec.params["chosen"] = rep.chosen;
        return rec;
    }
};

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string("scenario is not valid JSON: ") + e.what());
    }

    Scenario sc;
    sc.algebra = parse_algebra(j.at("algebra"));
    const int n = sc.algebra.N;

    const auto& jr = j.at("r");
    const auto& js = j.at("s");
    const bool r_builtin = jr.is_string() && jr.get<std::string>() == "pcm";
    const bool s_builtin = js.is_string() && js.get<std::string>() == "pcm";
    if (r_builtin != s_builtin)
        throw MalformedInput("r and s must both be builtin \"pcm\" or both explicit");
    sc.builtin_pcm = r_builtin;
    if (sc.builtin_pcm) {
        const auto pcm = build_pcm(sc.algebra, false);
        sc.r = pcm.r;
        sc.s = pcm.s;
    } else {
        sc.r = SpectralTensor(n, {1, 2}, parse_matrix(jr, n * n, "r"));
        sc.s = SpectralTensor(n, {1, 2}, parse_matrix(js, n * n, "s"));
    }

    sc.sigma = parse_sigma(j.at("sigma"));
    sc.k = parse_matrix(j.at("k"), n, "k");

    if (j.contains("numeric")) {
        const auto& jn = j.at("numeric");
        if (jn.contains("lattice")) sc.numeric.lattice = jn.at("lattice").get<int>();
        if (jn.contains("length")) sc.numeric.length = jn.at("length").get<double>();
        if (jn.contains("seed")) sc.numeric.seed = jn.at("seed").get<unsigned>();
        if (jn.contains("lambda_grid"))
            sc.numeric.lambda_grid = jn.at("lambda_grid").get<std::vector<double>>();
        if (jn.contains("K")) {
            sc.numeric.K.k = parse_numeric_matrix(jn.at("K").at("k"), n, "K.k");
            sc.numeric.K.f = parse_numeric_matrix(jn.at("K").at("f"), n, "K.f");
            sc.numeric.has_K = true;
        }
        if (sc.numeric.lattice <= 0 || sc.numeric.length <= 0)
            throw MalformedInput("numeric lattice and length must be positive");
    }

    if (j.contains("checks"))
        sc.checks = j.at("checks").get<std::vector<std::string>>();
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

bool Report::all_pass() const {
    for (const auto& r : records)
        if (r.status == "fail" || r.status == "error") return false;
    return true;
}

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& r : records) {
        os << std::left << std::setw(14) << r.name << " " << std::setw(8) << r.status
           << " " << r.residual;
        for (const auto& [k, v] : r.params) os << "  " << k << "=" << v;
        os << "  (" << std::fixed << std::setprecision(1) << r.millis << " ms)\n";
    }
    os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
}

std::string Report::machine() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json rec;
        rec["name"] = r.name;
        rec["status"] = r.status;
        rec["residual"] = r.residual;
        rec["params"] = r.params;  // std::map: deterministic key order
        out.push_back(rec);
    }
    return out.dump(2) + "\n";
}

Report run(const Scenario& sc, std::vector<std::string> checks, int trace_order) {
    if (checks.empty()) checks = sc.checks;
    if (checks.empty()) checks = kCheckOrder;

    // validate names and put them into dependency order
    std::vector<std::string> ordered;
    for (const auto& name : kCheckOrder)
        for (const auto& c : checks)
            if (c == name) {
                ordered.push_back(name);
                break;
            }
    for (const auto& c : checks) {
        bool known = false;
        for (const auto& name : kCheckOrder) known = known || name == c;
        if (!known) throw MalformedInput("unknown check name '" + c + "'");
    }

    Runner runner{sc, trace_order, {}, false, {}};
    bool chain_failed = false;
    for (const auto& name : ordered) {
        CheckRecord rec;
        const auto start = std::chrono::steady_clock::now();
        if (chain_failed) {
            rec = {name, "skipped", "earlier stage failed", {}, 0.0};
        } else {
            try {
                rec = runner.dispatch(name);
            } catch (const std::exception& e) {
                rec = {name, "error", e.what(), {}, 0.0};
            }
        }
        rec.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        if (rec.status == "fail" || rec.status == "error") chain_failed = true;
        runner.report.records.push_back(std::move(rec));
    }
    return runner.report;
}

}  // namespace blax

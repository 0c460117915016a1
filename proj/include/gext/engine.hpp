#pragma once

#include "gext/report.hpp"
#include "gext/specfile.hpp"
#include "gext/transfer.hpp"

namespace gext {

struct RunConfig {
    uint64_t seed = 0;
    int max_degree = 3;
    int cap = 2;
    int trials = 25;
    int p = 1, q = 1;
    int max_dim_u = 8;  // desk-scale guardrail; override flag exists
    ResourceLimits limits;
};

// the bar degree a command legitimately needs; explicit arguments act as
// the override for the default degree guardrail
inline int needed_bar_degree(const std::string& cmd, const RunConfig& cfg) {
    if (cmd == "ext" || cmd == "hochschild") return cfg.max_degree + 1;
    if (cmd == "cup" || cmd == "bracket") return 2 * cfg.cap + 1;
    if (cmd == "verify-operad") return std::max(3 * cfg.cap - 2, 2);
    if (cmd == "verify-gerstenhaber") return std::max(3 * cfg.cap, 2 * cfg.cap + 1);
    if (cmd == "verify-extension-loop") return cfg.p + cfg.q + 1;
    return 2;
}

namespace engine_detail {

template <class K>
const typename LoadedSpec<K>::Coeffs& first_coefficients(const LoadedSpec<K>& spec) {
    if (spec.coefficients.empty()) throw SpecError("spec defines no coefficients block");
    return spec.coefficients.begin()->second;
}

template <class K>
std::unique_ptr<OperadContext<K>> context_for(const LoadedSpec<K>& spec, const RunConfig& cfg) {
    const auto& C = first_coefficients(spec);
    const auto& B = *spec.bialgebroids.at(C.bialgebroid);
    if (!C.validated) {
        ValidationReport all;
        all.merge(check_yd_left_left(B, C.pair.Z), "Z");
        all.merge(check_yd_left_right(B, C.pair.X), "X");
        if (C.pair.Z.has_monoid) all.merge(check_braided_monoid(B, C.pair.Z), "Z");
        if (C.pair.X.has_comonoid) all.merge(check_braided_comonoid(B, C.pair.X), "X");
        all.merge(check_commuting_pair(B, C.pair.X, C.pair.Z), "pair");
        if (!all.ok()) {
            std::string msg = "coefficient data fails validation:";
            for (auto& f : all.failures) msg += " " + f.axiom + "@" + f.witness;
            throw SpecError(msg);
        }
    }
    CoefficientPair<K> pair = C.pair;
    return make_operad_context(B, std::move(pair), cfg.limits);
}

template <class K>
Cochain<K> pick_cocycle(const OperadContext<K>& ctx, const ExtGroups<K>& E, int deg) {
    const auto& S = ctx.space(deg);
    if (!E.reps[deg].empty()) return cochain_from_coords(ctx.barX, S, E.reps[deg][0]);
    if (E.cocycles[deg].dim() > 0)
        return cochain_from_coords(ctx.barX, S,
                                   to_dense(E.cocycles[deg].basis[0], S.dim()));
    return zero_cochain(ctx.barX, deg, ctx.C.Z.mod);
}

} // namespace engine_detail

// `check-axioms`: every structural checker over everything the spec defines.
template <class K>
void run_check_axioms(const LoadedSpec<K>& spec, const RunConfig& cfg, Report& rep) {
    for (const auto& [name, alg] : spec.algebras)
        rep.verdict("algebra " + name, check_algebra(alg));
    for (const auto& [name, bg] : spec.bialgebroids)
        rep.verdict("bialgebroid " + name, check_bialgebroid(*bg));
    for (const auto& [name, C] : spec.coefficients) {
        const auto& B = *spec.bialgebroids.at(C.bialgebroid);
        rep.verdict("coefficients " + name + " Z-YD", check_yd_left_left(B, C.pair.Z));
        rep.verdict("coefficients " + name + " X-YD", check_yd_left_right(B, C.pair.X));
        if (C.pair.Z.has_monoid)
            rep.verdict("coefficients " + name + " braided-monoid", check_braided_monoid(B, C.pair.Z));
        if (C.pair.X.has_comonoid)
            rep.verdict("coefficients " + name + " braided-comonoid",
                        check_braided_comonoid(B, C.pair.X));
        rep.verdict("coefficients " + name + " commuting-pair",
                    check_commuting_pair(B, C.pair.X, C.pair.Z));
    }
}

template <class K>
void run_ext(const LoadedSpec<K>& spec, const RunConfig& cfg, Report& rep) {
    auto ctx = engine_detail::context_for(spec, cfg);
    auto E = ext_groups(*ctx, cfg.max_degree);
    rep.table("ext_dims", E.dims);
    // the standing projectivity assumption, certified at desk scale by bar
    // exactness through the built range
    {
        auto& bar = ctx->barX;
        bool exact = rank(bar.d(0)) == bar.W.dim;
        for (int n = 0; n + 1 <= bar.built() && exact; ++n)
            exact = rank(bar.d(n)) + rank(bar.d(n + 1)) == bar.dim(n);
        std::string verdict = exact ? "verified (bar complex exact through degree " +
                                          std::to_string(bar.built() - 1) + ")"
                                    : "UNVERIFIED at desk scale";
        rep.line("projectivity assumption: " + verdict);
        rep.json["projectivity_assumption"] = verdict;
        if (!exact) rep.failed = true;
    }
    for (int n = 0; n <= cfg.max_degree; ++n) {
        for (size_t i = 0; i < E.reps[n].size(); ++i) {
            Cochain<K> c = cochain_from_coords(ctx->barX, ctx->space(n), E.reps[n][i]);
            Matrix<K> tail = cochain_to_tail(ctx->barX, c);
            std::ostringstream os;
            os << "representative Ext^" << n << "[" << i << "] (tail values):\n" << tail.str();
            rep.line(os.str());
            rep.json["representatives"][std::to_string(n)].push_back(tail.str());
        }
    }
}

template <class K>
void run_products(const LoadedSpec<K>& spec, const RunConfig& cfg, Report& rep, bool do_cup) {
    auto ctx = engine_detail::context_for(spec, cfg);
    auto E = ext_groups(*ctx, 2 * cfg.cap);
    rep.table("ext_dims", std::vector<int>(E.dims.begin(), E.dims.begin() + cfg.cap + 1));
    // product table of class representatives, coordinates modulo coboundaries
    for (int pdeg = 0; pdeg <= cfg.cap; ++pdeg)
        for (int qdeg = 0; qdeg <= cfg.cap; ++qdeg) {
            if (!do_cup && pdeg + qdeg < 1) continue;
            for (size_t i = 0; i < E.reps[pdeg].size(); ++i)
                for (size_t j = 0; j < E.reps[qdeg].size(); ++j) {
                    auto a = cochain_from_coords(ctx->barX, ctx->space(pdeg), E.reps[pdeg][i]);
                    auto b = cochain_from_coords(ctx->barX, ctx->space(qdeg), E.reps[qdeg][j]);
                    Cochain<K> c = do_cup ? class_cup(*ctx, a, b) : class_bracket(*ctx, a, b);
                    // reduce modulo coboundaries against the chosen representatives
                    auto coords = cochain_coords(ctx->barX, ctx->space(c.degree), c);
                    std::ostringstream os;
                    os << (do_cup ? "cup" : "bracket") << " [" << pdeg << "." << i << "] x ["
                       << qdeg << "." << j << "] -> degree " << c.degree << " class ";
                    SparseRow<K> red = E.coboundaries[c.degree].reduce(to_sparse(*coords));
                    if (red.empty()) os << "0";
                    else {
                        os << "[";
                        for (size_t t = 0; t < red.size(); ++t) {
                            if (t) os << " ";
                            os << red[t].first << ":" << red[t].second.str();
                        }
                        os << "]";
                    }
                    rep.line(os.str());
                }
        }
}

template <class K>
void run_verify_operad(const LoadedSpec<K>& spec, const RunConfig& cfg, Report& rep) {
    auto ctx = engine_detail::context_for(spec, cfg);
    rep.verdict("operad-axioms", verify_operad(*ctx, cfg.cap, cfg.trials, cfg.seed));
    rep.verdict("coaction-rewrite", verify_cortes(*ctx));
}

template <class K>
void run_verify_gerstenhaber(const LoadedSpec<K>& spec, const RunConfig& cfg, Report& rep) {
    auto ctx = engine_detail::context_for(spec, cfg);
    auto E = ext_groups(*ctx, 2 * cfg.cap);
    rep.table("ext_dims", std::vector<int>(E.dims.begin(), E.dims.begin() + cfg.cap + 1));
    rep.verdict("gerstenhaber-on-classes", verify_gerstenhaber(*ctx, E, cfg.cap));
}

template <class K>
void run_verify_extension_loop(const LoadedSpec<K>& spec, const RunConfig& cfg, Report& rep) {
    auto ctx = engine_detail::context_for(spec, cfg);
    auto E = ext_groups(*ctx, std::max(cfg.p, cfg.q));
    auto cp = engine_detail::pick_cocycle(*ctx, E, cfg.p);
    auto cq = engine_detail::pick_cocycle(*ctx, E, cfg.q);
    auto T = make_transfer_setup(*ctx, extension_from_cocycle(*ctx, cp),
                                 extension_from_cocycle(*ctx, cq));
    rep.verdict("extension-loop(p=" + std::to_string(cfg.p) + ",q=" + std::to_string(cfg.q) + ")",
                verify_extension_loop(*ctx, *T));
}

template <class K>
void run_hochschild(const LoadedSpec<K>& spec, const RunConfig& cfg, Report& rep) {
    if (spec.algebras.empty()) throw SpecError("hochschild: spec defines no algebra");
    const auto& A = spec.algebras.begin()->second;
    auto B = enveloping(A);
    auto ctx = make_operad_context(B, unit_coefficients(B), cfg.limits);
    auto E = ext_groups(*ctx, cfg.max_degree);
    rep.table("hochschild_dims", E.dims);
}

// dispatch; returns the process exit code (0 pass, 1 math failure)
template <class K>
int run_command(const LoadedSpec<K>& spec, const std::string& cmd, const RunConfig& cfg0,
                Report& rep) {
    RunConfig cfg = cfg0;
    for (const auto& [name, bg] : spec.bialgebroids)
        if (bg->U.dim > cfg.max_dim_u)
            throw SpecError("bialgebroid '" + name + "': dim U = " + std::to_string(bg->U.dim) +
                            " exceeds the guard " + std::to_string(cfg.max_dim_u) +
                            " (raise --max-dim-u)");
    cfg.limits.max_degree = std::max(cfg.limits.max_degree, needed_bar_degree(cmd, cfg));
    rep.echo(cmd, cfg.seed);
    if (cmd == "check-axioms") run_check_axioms(spec, cfg, rep);
    else if (cmd == "ext") run_ext(spec, cfg, rep);
    else if (cmd == "cup") run_products(spec, cfg, rep, true);
    else if (cmd == "bracket") run_products(spec, cfg, rep, false);
    else if (cmd == "verify-operad") run_verify_operad(spec, cfg, rep);
    else if (cmd == "verify-gerstenhaber") run_verify_gerstenhaber(spec, cfg, rep);
    else if (cmd == "verify-extension-loop") run_verify_extension_loop(spec, cfg, rep);
    else if (cmd == "hochschild") run_hochschild(spec, cfg, rep);
    else throw SpecError("unknown command '" + cmd + "'");
    rep.json["pass"] = !rep.failed;
    rep.line(rep.failed ? "result: FAIL" : "result: pass");
    return rep.failed ? 1 : 0;
}

} // namespace gext

// gext: exact Gerstenhaber calculus on Ext over left bialgebroids.
//
// Usage: gext <command> <spec-file> [options]
// Commands: check-axioms, ext, cup, bracket, verify-operad,
//           verify-gerstenhaber, verify-extension-loop, hochschild, run-tasks
// Exit codes: 0 all checks pass, 1 a mathematical check failed,
//             2 usage or resource error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "gext/engine.hpp"

using namespace gext;

namespace {

int64_t env_long(const char* name, int64_t fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoll(v);
    } catch (...) {
        return fallback;
    }
}

struct Options {
    std::string command, specPath, fieldOverride;
    RunConfig cfg;
    bool json = false;
    bool timing = false;
};

template <class K>
int run_all(const Options& opt) {
    SpecAST ast = parse_spec_file(opt.specPath);
    LoadedSpec<K> spec = load_spec<K>(ast);
    auto t0 = std::chrono::steady_clock::now();

    auto run_one = [&](const std::string& cmd, const RunConfig& cfg) {
        Report rep;
        int code = run_command(spec, cmd, cfg, rep);
        rep.emit(std::cout, opt.json);
        return code;
    };

    int code = 0;
    if (opt.command == "run-tasks") {
        if (spec.tasks.empty()) throw SpecError("run-tasks: spec has no task block");
        for (const auto& argv : spec.tasks) {
            RunConfig cfg = opt.cfg;
            for (size_t i = 1; i < argv.size(); ++i) {
                auto need = [&](size_t i) {
                    if (i + 1 >= argv.size()) throw SpecError("task option " + argv[i] + " needs a value");
                    return std::stoll(argv[i + 1]);
                };
                if (argv[i] == "--max-degree") cfg.max_degree = int(need(i++));
                else if (argv[i] == "--cap") cfg.cap = int(need(i++));
                else if (argv[i] == "--trials") cfg.trials = int(need(i++));
                else if (argv[i] == "--seed") cfg.seed = uint64_t(need(i++));
                else if (argv[i] == "--p") cfg.p = int(need(i++));
                else if (argv[i] == "--q") cfg.q = int(need(i++));
                else throw SpecError("task option '" + argv[i] + "' not recognized");
            }
            code = std::max(code, run_one(argv[0], cfg));
        }
    } else {
        code = run_one(opt.command, opt.cfg);
    }
    if (opt.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "elapsed_ms: " << ms << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gext: exact Gerstenhaber calculus on Ext over left bialgebroids"};
    Options opt;
    opt.cfg.limits.max_ambient = env_long("GEXT_MAX_AMBIENT", 20000);
    opt.cfg.limits.max_degree = int(env_long("GEXT_MAX_DEGREE", 5));
    opt.cfg.max_degree = 3;

    app.add_option("command", opt.command,
                   "check-axioms | ext | cup | bracket | verify-operad | verify-gerstenhaber | "
                   "verify-extension-loop | hochschild | run-tasks")
        ->required();
    app.add_option("spec", opt.specPath, "spec file path")->required();
    app.add_option("--seed", opt.cfg.seed, "RNG seed (default 0)");
    app.add_option("--max-degree", opt.cfg.max_degree, "maximum degree for ext/hochschild");
    app.add_option("--cap", opt.cfg.cap, "degree cap for verify-operad/gerstenhaber and products");
    app.add_option("--trials", opt.cfg.trials, "random trials for verify-operad");
    app.add_option("--p", opt.cfg.p, "first extension length for verify-extension-loop");
    app.add_option("--q", opt.cfg.q, "second extension length for verify-extension-loop");
    app.add_option("--field", opt.fieldOverride, "override the spec's scalar field (Q or F(p))");
    app.add_option("--max-ambient", opt.cfg.limits.max_ambient,
                   "resource guard: largest ambient tensor dimension");
    app.add_option("--max-dim-u", opt.cfg.max_dim_u, "resource guard: largest dim U (default 8)");
    app.add_option("--max-bar-degree", opt.cfg.limits.max_degree,
                   "resource guard: largest bar degree built beyond command needs");
    app.add_flag("--json", opt.json, "emit a structured JSON report");
    app.add_flag("--timing", opt.timing, "print elapsed time to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        std::string field = opt.fieldOverride;
        if (field.empty()) {
            const char* envf = std::getenv("GEXT_FIELD");
            SpecAST ast = parse_spec_file(opt.specPath);
            field = ast.field;
            if (envf && ast.field == "Q") field = envf;  // env overrides the default only
        }
        if (field == "Q") return run_all<Rat>(opt);
        if (field.size() >= 4 && field.substr(0, 2) == "F(" && field.back() == ')') {
            Fp::set_modulus(std::stoll(field.substr(2, field.size() - 3)));
            return run_all<Fp>(opt);
        }
        if (field.size() >= 2 && field[0] == 'F') {
            Fp::set_modulus(std::stoll(field.substr(1)));
            return run_all<Fp>(opt);
        }
        throw SpecError("unknown field '" + field + "' (use Q or F(p))");
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

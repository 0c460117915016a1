#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gext/yd.hpp"

namespace gext {

// Line-oriented spec file AST: named blocks of key/value lines with integer
// and rational literals ("a/b"). Parsing is field-agnostic; the loader
// converts literals into the configured scalar type.
struct SpecLine {
    int line_no = 0;
    std::string key;
    std::vector<std::string> pre;   // tokens before "->"
    std::vector<std::string> post;  // tokens after "->" (or all tokens if no arrow)
};

struct SpecBlock {
    int line_no = 0;
    std::string kind;  // algebra | bialgebroid | coefficients | task
    std::string name;
    std::vector<SpecLine> lines;
};

struct SpecAST {
    std::string field = "Q";
    std::vector<SpecBlock> blocks;
};

// throws std::runtime_error with file:line:column context on parse errors
SpecAST parse_spec_file(const std::string& path);
SpecAST parse_spec_text(const std::string& text, const std::string& filename);

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class K>
Vec<K> parse_vec(const std::vector<std::string>& toks, int expect, const SpecLine& ln,
                 const std::string& block) {
    if (int(toks.size()) != expect)
        throw SpecError("block '" + block + "' line " + std::to_string(ln.line_no) + ": expected " +
                        std::to_string(expect) + " entries, got " + std::to_string(toks.size()));
    Vec<K> v(expect);
    for (int i = 0; i < expect; ++i) v[i] = K::parse(toks[i]);
    return v;
}

inline int parse_int(const std::string& tok, const SpecLine& ln, const std::string& block) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (...) {
        throw SpecError("block '" + block + "' line " + std::to_string(ln.line_no) +
                        ": bad integer '" + tok + "'");
    }
}

} // namespace detail

template <class K>
struct LoadedSpec {
    std::map<std::string, FiniteAlgebra<K>> algebras;
    std::map<std::string, std::unique_ptr<LeftBialgebroid<K>>> bialgebroids;
    struct Coeffs {
        std::string bialgebroid;
        CoefficientPair<K> pair;
        bool validated = false;  // unit coefficients are validated on construction
    };
    std::map<std::string, Coeffs> coefficients;
    std::vector<std::vector<std::string>> tasks;
};

template <class K>
LoadedSpec<K> load_spec(const SpecAST& ast) {
    LoadedSpec<K> out;
    for (const auto& blk : ast.blocks) {
        auto get = [&](const SpecLine& ln, const char* what, int n) {
            return detail::parse_vec<K>(ln.post, n, ln, blk.name);
        };
        if (blk.kind == "algebra") {
            int dim = -1;
            Vec<K> unit;
            std::map<std::pair<int, int>, Vec<K>> mult;
            for (const auto& ln : blk.lines) {
                if (ln.key == "dim") dim = detail::parse_int(ln.post.at(0), ln, blk.name);
                else if (ln.key == "unit") unit = get(ln, "unit", dim);
                else if (ln.key == "mult") {
                    if (ln.pre.size() != 2)
                        throw SpecError("block '" + blk.name + "' line " + std::to_string(ln.line_no) +
                                        ": mult needs two basis indices");
                    int i = detail::parse_int(ln.pre[0], ln, blk.name);
                    int j = detail::parse_int(ln.pre[1], ln, blk.name);
                    if (i < 0 || i >= dim || j < 0 || j >= dim)
                        throw SpecError("block '" + blk.name + "' line " + std::to_string(ln.line_no) +
                                        ": basis index out of range");
                    mult[{i, j}] = get(ln, "mult", dim);
                } else
                    throw SpecError("block '" + blk.name + "' line " + std::to_string(ln.line_no) +
                                    ": unknown key '" + ln.key + "'");
            }
            if (dim <= 0) throw SpecError("algebra '" + blk.name + "': missing dim");
            if (int(mult.size()) != dim * dim)
                throw SpecError("algebra '" + blk.name + "': expected " + std::to_string(dim * dim) +
                                " mult rows, got " + std::to_string(mult.size()));
            std::vector<Vec<K>> table;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) table.push_back(mult.at({i, j}));
            out.algebras.emplace(blk.name, FiniteAlgebra<K>::make(dim, table, unit));
        } else if (blk.kind == "bialgebroid") {
            std::string mode, base;
            Matrix<K> deltaH, counitH;
            int hd = 0;
            for (const auto& ln : blk.lines) {
                if (ln.key == "enveloping" || ln.key == "bialgebra") {
                    mode = ln.key;
                    base = ln.post.at(0);
                    if (!out.algebras.count(base))
                        throw SpecError("bialgebroid '" + blk.name + "': unresolved algebra '" +
                                        base + "'");
                    hd = out.algebras.at(base).dim;
                    if (mode == "bialgebra") {
                        deltaH = Matrix<K>(hd * hd, hd);
                        counitH = Matrix<K>(1, hd);
                    }
                } else if (ln.key == "delta") {
                    int i = detail::parse_int(ln.pre.at(0), ln, blk.name);
                    deltaH.set_col(i, get(ln, "delta", hd * hd));
                } else if (ln.key == "counit") {
                    Vec<K> v = get(ln, "counit", hd);
                    for (int j = 0; j < hd; ++j) counitH(0, j) = v[j];
                } else
                    throw SpecError("block '" + blk.name + "' line " + std::to_string(ln.line_no) +
                                    ": unknown key '" + ln.key + "'");
            }
            auto ptr = std::make_unique<LeftBialgebroid<K>>();
            if (mode == "enveloping") *ptr = enveloping(out.algebras.at(base));
            else if (mode == "bialgebra") *ptr = from_bialgebra(out.algebras.at(base), deltaH, counitH);
            else throw SpecError("bialgebroid '" + blk.name + "': needs 'enveloping' or 'bialgebra'");
            out.bialgebroids.emplace(blk.name, std::move(ptr));
        } else if (blk.kind == "coefficients") {
            typename LoadedSpec<K>::Coeffs C;
            bool is_unit = false;
            const LeftBialgebroid<K>* B = nullptr;
            for (const auto& ln : blk.lines) {
                if (ln.key == "unit" || ln.key == "bialgebroid") {
                    C.bialgebroid = ln.post.at(0);
                    if (!out.bialgebroids.count(C.bialgebroid))
                        throw SpecError("coefficients '" + blk.name + "': unresolved bialgebroid '" +
                                        C.bialgebroid + "'");
                    B = out.bialgebroids.at(C.bialgebroid).get();
                    is_unit = (ln.key == "unit");
                    if (is_unit) {
                        C.pair = unit_coefficients(*B);
                        C.validated = true;
                    }
                } else if (B) {
                    // explicit coefficient data
                    auto& P = C.pair;
                    int nU = B->U.dim, nA = B->A.dim;
                    auto legs_from = [&](const Vec<K>& v, int dl, int dr) {
                        Legs<K> legs;
                        for (int a = 0; a < dl; ++a)
                            for (int b = 0; b < dr; ++b)
                                if (!v[a * dr + b].is_zero()) legs.push_back({v[a * dr + b], a, b});
                        return legs;
                    };
                    if (ln.key == "z_dim") {
                        P.Z.mod.dim = detail::parse_int(ln.post.at(0), ln, blk.name);
                        P.Z.mod.act.assign(nU, Matrix<K>(P.Z.mod.dim, P.Z.mod.dim));
                        P.Z.coact.assign(P.Z.mod.dim, {});
                    } else if (ln.key == "z_act") {
                        int u = detail::parse_int(ln.pre.at(0), ln, blk.name);
                        Vec<K> v = get(ln, "z_act", P.Z.mod.dim * P.Z.mod.dim);
                        for (int r = 0; r < P.Z.mod.dim; ++r)
                            for (int c = 0; c < P.Z.mod.dim; ++c)
                                P.Z.mod.act.at(u)(r, c) = v[r * P.Z.mod.dim + c];
                    } else if (ln.key == "z_coact") {
                        int z = detail::parse_int(ln.pre.at(0), ln, blk.name);
                        P.Z.coact.at(z) = legs_from(get(ln, "z_coact", nU * P.Z.mod.dim), nU, P.Z.mod.dim);
                    } else if (ln.key == "z_mul") {
                        int nZ = P.Z.mod.dim;
                        if (!P.Z.has_monoid) {
                            P.Z.mu = Matrix<K>(nZ, nZ * nZ);
                            P.Z.has_monoid = true;
                        }
                        int i = detail::parse_int(ln.pre.at(0), ln, blk.name);
                        int j = detail::parse_int(ln.pre.at(1), ln, blk.name);
                        P.Z.mu.set_col(i * nZ + j, get(ln, "z_mul", nZ));
                    } else if (ln.key == "z_one") {
                        P.Z.one = get(ln, "z_one", P.Z.mod.dim);
                    } else if (ln.key == "x_dim") {
                        P.X.mod.dim = detail::parse_int(ln.post.at(0), ln, blk.name);
                        P.X.mod.act.assign(nU, Matrix<K>(P.X.mod.dim, P.X.mod.dim));
                        P.X.coact.assign(P.X.mod.dim, {});
                    } else if (ln.key == "x_act") {
                        int u = detail::parse_int(ln.pre.at(0), ln, blk.name);
                        Vec<K> v = get(ln, "x_act", P.X.mod.dim * P.X.mod.dim);
                        for (int r = 0; r < P.X.mod.dim; ++r)
                            for (int c = 0; c < P.X.mod.dim; ++c)
                                P.X.mod.act.at(u)(r, c) = v[r * P.X.mod.dim + c];
                    } else if (ln.key == "x_coact") {
                        int x = detail::parse_int(ln.pre.at(0), ln, blk.name);
                        P.X.coact.at(x) = legs_from(get(ln, "x_coact", P.X.mod.dim * nU), P.X.mod.dim, nU);
                    } else if (ln.key == "x_comul") {
                        if (!P.X.has_comonoid) {
                            P.X.comul.assign(P.X.mod.dim, {});
                            P.X.counit = Matrix<K>(nA, P.X.mod.dim);
                            P.X.has_comonoid = true;
                        }
                        int x = detail::parse_int(ln.pre.at(0), ln, blk.name);
                        P.X.comul.at(x) =
                            legs_from(get(ln, "x_comul", P.X.mod.dim * P.X.mod.dim), P.X.mod.dim, P.X.mod.dim);
                    } else if (ln.key == "x_counit") {
                        int x = detail::parse_int(ln.pre.at(0), ln, blk.name);
                        Vec<K> v = get(ln, "x_counit", nA);
                        for (int r = 0; r < nA; ++r) P.X.counit(r, x) = v[r];
                    } else
                        throw SpecError("block '" + blk.name + "' line " + std::to_string(ln.line_no) +
                                        ": unknown key '" + ln.key + "'");
                } else
                    throw SpecError("coefficients '" + blk.name + "': name a bialgebroid first");
            }
            if (!B) throw SpecError("coefficients '" + blk.name + "': missing bialgebroid");
            out.coefficients.emplace(blk.name, std::move(C));
        } else if (blk.kind == "task") {
            for (const auto& ln : blk.lines) {
                std::vector<std::string> argv{ln.key};
                for (auto& t : ln.post) argv.push_back(t);
                out.tasks.push_back(argv);
            }
        } else {
            throw SpecError("unknown block kind '" + blk.kind + "' at line " +
                            std::to_string(blk.line_no));
        }
    }
    return out;
}

} // namespace gext

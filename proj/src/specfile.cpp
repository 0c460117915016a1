#include "gext/specfile.hpp"

#include <fstream>
#include <sstream>

namespace gext {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;  // comment to end of line
        toks.push_back(t);
    }
    return toks;
}

} // namespace

SpecAST parse_spec_text(const std::string& text, const std::string& filename) {
    SpecAST ast;
    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;
    SpecBlock* open = nullptr;
    std::vector<SpecBlock> blocks;
    bool sawField = false;
    while (std::getline(in, raw)) {
        ++lineNo;
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        auto err = [&](const std::string& msg) {
            throw SpecError(filename + ":" + std::to_string(lineNo) + ": " + msg);
        };
        if (!open) {
            if (toks[0] == "field") {
                if (toks.size() != 2) err("field needs one token (Q or F(p))");
                ast.field = toks[1];
                sawField = true;
            } else if (toks.size() == 3 && toks[2] == "{") {
                blocks.push_back(SpecBlock{lineNo, toks[0], toks[1], {}});
                open = &blocks.back();
            } else if (toks.size() == 2 && toks[1] == "{") {
                blocks.push_back(SpecBlock{lineNo, toks[0], toks[0], {}});
                open = &blocks.back();
            } else {
                err("expected 'field ...' or '<kind> <name> {', got '" + toks[0] + "'");
            }
        } else {
            if (toks[0] == "}") {
                if (toks.size() != 1) err("unexpected tokens after '}'");
                open = nullptr;
                continue;
            }
            SpecLine ln;
            ln.line_no = lineNo;
            ln.key = toks[0];
            size_t arrow = toks.size();
            for (size_t i = 1; i < toks.size(); ++i)
                if (toks[i] == "->") {
                    arrow = i;
                    break;
                }
            for (size_t i = 1; i < std::min(arrow, toks.size()); ++i) ln.pre.push_back(toks[i]);
            for (size_t i = arrow + 1; i < toks.size(); ++i) ln.post.push_back(toks[i]);
            if (arrow == toks.size()) {
                ln.post = ln.pre;
                ln.pre.clear();
            }
            open->lines.push_back(std::move(ln));
        }
    }
    if (open)
        throw SpecError(filename + ": unterminated block '" + open->name + "' opened at line " +
                        std::to_string(open->line_no));
    (void)sawField;
    ast.blocks = std::move(blocks);
    return ast;
}

SpecAST parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str(), path);
}

} // namespace gext

// SPDX-License-Identifier: Apache-2.0
#include "chroma/defs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace chroma {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
    return out;
}

std::string line_msg(std::size_t lineno, const std::string& what) {
    return "line " + std::to_string(lineno) + ": " + what;
}

Model require_model(const std::string& tok, std::size_t lineno) {
    auto model = model_from_string(tok);
    if (!model) throw ParseError(line_msg(lineno, "unknown color model '" + tok + "'"), lineno, true);
    return *model;
}

void run_directive(const std::vector<std::string>& tok, std::size_t lineno,
                   EvalContext& ctx) {
    const std::string& d = tok[0];
    auto need = [&](std::size_t n) {
        if (tok.size() < n + 1)
            throw ParseError(line_msg(lineno, "'" + d + "' needs " + std::to_string(n) +
                                                  " arguments"),
                             lineno, true);
    };
    if (d == "definecolor" || d == "providecolor") {
        need(3);
        const std::string& name = tok[1];
        bool providing = d == "providecolor";
        if (tok[2] == "named") {
            providing ? ctx.db.provide_from_named(name, tok[3])
                      : ctx.db.define_from_named(name, tok[3]);
            return;
        }
        Model model = require_model(tok[2], lineno);
        // The channel spec may be space-separated, so it spans the
        // remaining tokens; rejoining is lossless for the spec syntax.
        std::string spec = tok[3];
        for (std::size_t i = 4; i < tok.size(); ++i) spec += ' ' + tok[i];
        providing ? ctx.db.provide(name, model, spec) : ctx.db.define(name, model, spec);
    } else if (d == "colorlet") {
        need(2);
        color_let(ctx, tok[1], parse_expr(tok[2]));
    } else if (d == "definecolorseries") {
        need(5);
        Model model = require_model(tok[2], lineno);
        auto scheme = step_scheme_from(tok[3]);
        if (!scheme)
            throw ParseError(line_msg(lineno, "unknown series scheme '" + tok[3] + "'"), lineno,
                             true);
        ctx.series.define(tok[1], model, *scheme, parse_expr(tok[4]), parse_expr(tok[5]));
    } else if (d == "resetcolorseries") {
        need(2);
        double div = 0.0;
        auto [end, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), div);
        if (ec != std::errc() || end != tok[1].data() + tok[1].size())
            throw ParseError(line_msg(lineno, "invalid divisions '" + tok[1] + "'"), lineno, true);
        ctx.series.reset(tok[2], div, ctx);
    } else if (d == "current") {
        need(1);
        set_current(ctx, parse_expr(tok[1]));
    } else {
        throw ParseError(line_msg(lineno, "unknown directive '" + d + "'"), lineno, true);
    }
}

}  // namespace

EvalContext make_standard_context() {
    return EvalContext{ColorDatabase::with_builtin_tables(), {}, {}};
}

void apply_defs(std::istream& in, EvalContext& ctx) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        try {
            run_directive(tok, lineno, ctx);
        } catch (const ParseError& e) {
            if (e.position_is_line()) throw;  // already annotated
            throw ParseError(line_msg(lineno, e.what()), lineno, true);
        } catch (const UndefinedColorError& e) {
            throw UndefinedColorError(line_msg(lineno, e.what()), e.name());
        } catch (const EvalError& e) {
            throw EvalError(line_msg(lineno, e.what()));
        }
    }
}

EvalContext load_defs(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open defs file '" + path.string() + "'");
    EvalContext ctx = make_standard_context();
    apply_defs(in, ctx);
    return ctx;
}

}  // namespace chroma

// SPDX-License-Identifier: Apache-2.0
//
// chroma: evaluate color expressions, convert between models, render
// swatch tables, walk color series and trace row striping.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/defs.hpp"
#include "chroma/stripes.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace chroma;

constexpr const char* kDefaultModels = "rgb,cmyk,hsb,HTML,gray";

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string channels6(const ColorValue& v, char sep = ' ') {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += fmt6(v[i]);
    }
    return out;
}

// "rgb 0.500000 0.500000 0.000000 #808000"
std::string value_report(const ColorValue& v) {
    return std::string(to_string(v.model())) + ' ' + channels6(v) + " #" + to_hex(v).str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, sep)) out.push_back(piece);
    return out;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Model parse_model_arg(const std::string& name) {
    auto m = model_from_string(name);
    if (!m) throw ParseError("unknown color model '" + name + "'");
    return *m;
}

EvalContext build_context(const std::string& defs_path, const std::string& named_table_path,
                          const std::string& current_expr) {
    EvalContext ctx = defs_path.empty() ? make_standard_context() : load_defs(defs_path);
    if (!named_table_path.empty()) {
        std::ifstream in(named_table_path);
        if (!in) throw EvalError("cannot open named table '" + named_table_path + "'");
        ctx.db.load_named_table(in);
    }
    if (!current_expr.empty()) set_current(ctx, parse_expr(current_expr));
    return ctx;
}

// ---- eval ----------------------------------------------------------------

struct EvalOpts {
    std::string expr;
    std::string model;
    std::string current;
    std::string defs;
    std::string named_table;
};

int run_eval(const EvalOpts& o) {
    EvalContext ctx = build_context(o.defs, o.named_table, o.current);
    ColorExpr e = parse_expr(o.expr);
    ColorValue v = o.model.empty() ? evaluate(e, ctx)
                                   : evaluate_in(e, parse_model_arg(o.model), ctx);
    std::cout << value_report(v) << '\n';
    return 0;
}

// ---- convert --------------------------------------------------------------

struct ConvertOpts {
    std::string input;
    std::string to;
};

int run_convert(const ConvertOpts& o) {
    auto colon = o.input.find(':');
    if (colon == std::string::npos)
        throw ParseError("expected 'model:channels' input", 0);
    Model from = parse_model_arg(o.input.substr(0, colon));
    ColorValue v = parse_channel_spec(from, o.input.substr(colon + 1));
    std::cout << value_report(convert(v, parse_model_arg(o.to))) << '\n';
    return 0;
}

// ---- swatch ---------------------------------------------------------------

struct SwatchOpts {
    std::vector<std::string> exprs;
    std::string file;
    std::string models = kDefaultModels;
    std::string format = "text";
    std::string named_table;
};

struct SwatchRow {
    std::string expr;
    std::string error;                        // nonempty on failure
    std::vector<ColorValue> values;           // parallel to the model list
    std::string hex;
};

std::vector<SwatchRow> swatch_rows(const std::vector<std::string>& exprs,
                                   const std::vector<Model>& models, EvalContext& ctx) {
    std::vector<SwatchRow> rows;
    for (const std::string& text : exprs) {
        SwatchRow row;
        row.expr = text;
        try {
            ColorValue v = evaluate(parse_expr(text), ctx);
            for (Model m : models) row.values.push_back(convert(v, m));
            row.hex = to_hex(v).str();
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_swatch_text(const std::vector<SwatchRow>& rows, const std::vector<Model>& models) {
    for (const SwatchRow& row : rows) {
        std::cout << row.expr;
        if (!row.error.empty()) {
            std::cout << "  error:" << row.error << '\n';
            continue;
        }
        for (std::size_t i = 0; i < models.size(); ++i) {
            std::cout << "  " << to_string(models[i]) << ':';
            if (models[i] == Model::html)
                std::cout << '#' << row.hex;
            else
                std::cout << channels6(row.values[i], ',');
        }
        std::cout << '\n';
    }
}

void print_swatch_json(const std::vector<SwatchRow>& rows, const std::vector<Model>& models) {
    json out = json::array();
    for (const SwatchRow& row : rows) {
        json obj;
        obj["expr"] = row.expr;
        if (!row.error.empty()) {
            obj["error"] = row.error;
            out.push_back(std::move(obj));
            continue;
        }
        json values = json::object();
        for (std::size_t i = 0; i < models.size(); ++i) {
            if (models[i] == Model::html) continue;  // carried by "hex"
            json arr = json::array();
            for (double ch : row.values[i].channels()) arr.push_back(ch);
            values[std::string(to_string(models[i]))] = std::move(arr);
        }
        obj["values"] = std::move(values);
        obj["hex"] = row.hex;
        out.push_back(std::move(obj));
    }
    std::cout << out.dump(2) << '\n';
}

void print_swatch_html(const std::vector<SwatchRow>& rows, const std::vector<Model>& models) {
    std::cout << "<table>\n<tr><th></th><th>expression</th>";
    for (Model m : models) std::cout << "<th>" << to_string(m) << "</th>";
    std::cout << "</tr>\n";
    for (const SwatchRow& row : rows) {
        if (!row.error.empty()) {
            std::cout << "<tr><td></td><td>" << row.expr << "</td><td colspan=\""
                      << models.size() << "\">" << row.error << "</td></tr>\n";
            continue;
        }
        std::cout << "<tr><td style=\"background-color:#" << row.hex
                  << "\">&nbsp;&nbsp;&nbsp;</td><td>" << row.expr << "</td>";
        for (std::size_t i = 0; i < models.size(); ++i) {
            std::cout << "<td>";
            if (models[i] == Model::html)
                std::cout << '#' << row.hex;
            else
                std::cout << channels6(row.values[i]);
            std::cout << "</td>";
        }
        std::cout << "</tr>\n";
    }
    std::cout << "</table>\n";
}

int run_swatch(const SwatchOpts& o) {
    std::vector<std::string> exprs = o.exprs;
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw EvalError("cannot open expression file '" + o.file + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (!line.empty()) exprs.push_back(line);
        }
    }
    if (exprs.empty()) throw ParseError("no expressions given", 0);

    std::vector<Model> models;
    for (const std::string& name : split(o.models, ',')) models.push_back(parse_model_arg(name));

    EvalContext ctx = build_context("", o.named_table, "");
    std::vector<SwatchRow> rows = swatch_rows(exprs, models, ctx);

    if (o.format == "json")
        print_swatch_json(rows, models);
    else if (o.format == "html")
        print_swatch_html(rows, models);
    else
        print_swatch_text(rows, models);

    for (const SwatchRow& row : rows)
        if (row.error.empty()) return 0;
    return 4;  // every row failed
}

// ---- series ---------------------------------------------------------------

struct SeriesOpts {
    std::string name;
    std::string defs;
    std::string accesses;
    std::string named_table;
};

struct SeriesAccessSpec {
    bool indexed = false;
    int amount = 1;  // '+' count, or the index
};

int parse_small_int(const std::string& text, const char* what) {
    if (text.empty() || text.size() > 6 ||
        text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string("invalid ") + what + " '" + text + "'", 0);
    return std::stoi(text);
}

std::vector<SeriesAccessSpec> parse_accesses(const std::string& spec) {
    std::vector<SeriesAccessSpec> out;
    for (const std::string& raw : split(spec, ',')) {
        std::string piece = trim(raw);
        if (piece.empty()) throw ParseError("empty series access", 0);
        int repeat = 1;
        if (auto sp = piece.find_first_of(" \t"); sp != std::string::npos) {
            std::string rep = trim(piece.substr(sp));
            piece = trim(piece.substr(0, sp));
            if (rep.size() < 2 || rep[0] != 'x')
                throw ParseError("expected repeat 'xN' after access", 0);
            repeat = parse_small_int(rep.substr(1), "repeat count");
            if (repeat < 1) throw ParseError("repeat must be >= 1", 0);
        }
        SeriesAccessSpec acc;
        if (piece[0] == '+') {
            if (piece.find_first_not_of('+') != std::string::npos)
                throw ParseError("malformed advance '" + piece + "'", 0);
            acc.amount = static_cast<int>(piece.size());
        } else if (piece.front() == '[' && piece.back() == ']') {
            acc.indexed = true;
            acc.amount = parse_small_int(piece.substr(1, piece.size() - 2), "series index");
        } else {
            throw ParseError("malformed series access '" + piece + "'", 0);
        }
        out.insert(out.end(), repeat, acc);
    }
    return out;
}

int run_series(const SeriesOpts& o) {
    EvalContext ctx = build_context(o.defs, o.named_table, "");
    for (const SeriesAccessSpec& acc : parse_accesses(o.accesses)) {
        ColorValue v = acc.indexed ? ctx.series.at(o.name, acc.amount)
                                   : ctx.series.advance(o.name, acc.amount);
        std::cout << channels6(v) << '\n';
    }
    return 0;
}

// ---- stripe ---------------------------------------------------------------

struct StripeOpts {
    int rows = 0;
    int start = 1;
    std::string odd;
    std::string even;
    std::string command;
    std::string events;
};

struct StripeEvents {
    std::multimap<int, std::string> before;            // row -> "rowcolor <expr>" | "hide" | "show"
    std::map<int, std::string> cell;                   // row -> expr
};

StripeEvents parse_events(const std::string& path) {
    StripeEvents ev;
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open events file '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        auto bad = [&](const std::string& what) {
            return ParseError("line " + std::to_string(lineno) + ": " + what, lineno, true);
        };
        int row = 0;
        if (!(ls >> row) || row < 1) throw bad("expected a row number");
        if (kind == "before") {
            std::string action, expr;
            if (!(ls >> action)) throw bad("expected an action");
            if (action == "rowcolor") {
                if (!(ls >> expr)) throw bad("'rowcolor' needs an expression");
                parse_expr(expr);  // validate now, report with line number
                ev.before.emplace(row, "rowcolor " + expr);
            } else if (action == "hide" || action == "show") {
                ev.before.emplace(row, action);
            } else {
                throw bad("unknown action '" + action + "'");
            }
        } else if (kind == "cell") {
            std::string expr;
            if (!(ls >> expr)) throw bad("'cell' needs an expression");
            parse_expr(expr);
            ev.cell[row] = expr;
        } else {
            throw bad("unknown event '" + kind + "'");
        }
    }
    return ev;
}

int run_stripe(const StripeOpts& o) {
    if (o.rows < 0) throw EvalError("row count must be >= 0");
    std::optional<ColorExpr> odd, even;
    if (!o.odd.empty()) odd = parse_expr(o.odd);
    if (!o.even.empty()) even = parse_expr(o.even);
    std::optional<std::string> command;
    if (!o.command.empty()) command = o.command;
    StripeEvents ev;
    if (!o.events.empty()) ev = parse_events(o.events);

    StripeScheduler sched(o.start, std::move(odd), std::move(even), std::move(command));
    for (int n = 1; n <= o.rows; ++n) {
        auto [begin, end] = ev.before.equal_range(n);
        for (auto it = begin; it != end; ++it) {
            const std::string& action = it->second;
            if (action == "hide")
                sched.hide();
            else if (action == "show")
                sched.show();
            else
                sched.set_row_override(parse_expr(action.substr(std::string("rowcolor ").size())));
        }
        RowPaint paint = sched.begin_row();
        std::cout << paint.row_number << ' ' << (paint.color ? unparse(*paint.color) : "-");
        for (const std::string& cmd : paint.commands) std::cout << ' ' << cmd;
        if (auto it = ev.cell.find(n); it != ev.cell.end()) {
            auto effective = cell_paint(paint, parse_expr(it->second));
            std::cout << " cell=" << (effective ? unparse(*effective) : "-");
        }
        std::cout << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"color expression toolkit"};
    app.require_subcommand(1);

    EvalOpts eval_opts;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a color expression");
    eval_cmd->add_option("expr", eval_opts.expr, "color expression")->required();
    eval_cmd->add_option("--model", eval_opts.model, "convert the result to this model");
    eval_cmd->add_option("--current", eval_opts.current, "set the current color first");
    eval_cmd->add_option("--defs", eval_opts.defs, "definition script to load");
    eval_cmd->add_option("--named-table", eval_opts.named_table, "replacement named-color table");

    ConvertOpts conv_opts;
    CLI::App* conv_cmd = app.add_subcommand("convert", "convert channels between models");
    conv_cmd->add_option("input", conv_opts.input, "input as model:channels")->required();
    conv_cmd->add_option("--to", conv_opts.to, "target model")->required();

    SwatchOpts swatch_opts;
    CLI::App* swatch_cmd = app.add_subcommand("swatch", "render a swatch table");
    swatch_cmd->add_option("exprs", swatch_opts.exprs, "color expressions");
    swatch_cmd->add_option("--file", swatch_opts.file, "file with one expression per line");
    swatch_cmd->add_option("--models", swatch_opts.models,
                           "comma-separated model list (default " + std::string(kDefaultModels) +
                               ")");
    swatch_cmd->add_option("--format", swatch_opts.format, "text, json or html")
        ->check(CLI::IsMember({"text", "json", "html"}));
    swatch_cmd->add_option("--named-table", swatch_opts.named_table,
                           "replacement named-color table");

    SeriesOpts series_opts;
    CLI::App* series_cmd = app.add_subcommand("series", "walk a color series");
    series_cmd->add_option("name", series_opts.name, "series name")->required();
    series_cmd->add_option("--defs", series_opts.defs, "script defining and resetting the series")
        ->required();
    series_cmd->add_option("--accesses", series_opts.accesses,
                           "accesses, e.g. '+,+,+' or '++ x7' or '[2] x7'")
        ->required();
    series_cmd->add_option("--named-table", series_opts.named_table,
                           "replacement named-color table");

    StripeOpts stripe_opts;
    CLI::App* stripe_cmd = app.add_subcommand("stripe", "trace row striping");
    stripe_cmd->add_option("--rows", stripe_opts.rows, "number of rows")->required();
    stripe_cmd->add_option("--start", stripe_opts.start, "first striped row (default 1)");
    stripe_cmd->add_option("--odd", stripe_opts.odd, "stripe expression for odd rows");
    stripe_cmd->add_option("--even", stripe_opts.even, "stripe expression for even rows");
    stripe_cmd->add_option("--command", stripe_opts.command, "boundary command token");
    stripe_cmd->add_option("--events", stripe_opts.events, "events file");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(eval_cmd)) return run_eval(eval_opts);
        if (app.got_subcommand(conv_cmd)) return run_convert(conv_opts);
        if (app.got_subcommand(swatch_cmd)) return run_swatch(swatch_opts);
        if (app.got_subcommand(series_cmd)) return run_series(series_opts);
        if (app.got_subcommand(stripe_cmd)) return run_stripe(stripe_opts);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const chroma::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const chroma::UndefinedColorError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const chroma::EvalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}

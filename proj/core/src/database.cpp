// SPDX-License-Identifier: Apache-2.0
#include "chroma/database.hpp"

#include <sstream>

#include "chroma/expr.hpp"

namespace chroma {

namespace {

void check_name(std::string_view name) {
    if (!is_valid_name(name))
        throw ParseError("invalid color name '" + std::string(name) + "'");
}

// Parses one table line into (name, value); returns false on blank/comment.
bool parse_table_line(std::string line, std::size_t lineno, std::string& name,
                      ColorValue& value) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!(ls >> name)) return false;
    if (!is_valid_name(name))
        throw ParseError("invalid color name '" + name + "'", lineno, true);
    std::string model_tok;
    if (!(ls >> model_tok))
        throw ParseError("missing color model for '" + name + "'", lineno, true);
    auto model = model_from_string(model_tok);
    if (!model)
        throw ParseError("unknown color model '" + model_tok + "'", lineno, true);
    std::string rest;
    std::getline(ls, rest);
    try {
        value = parse_channel_spec(*model, rest);
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " for '" + name + "'", lineno, true);
    }
    return true;
}

std::size_t load_table(std::istream& in, std::map<std::string, ColorValue, std::less<>>& table) {
    std::map<std::string, ColorValue, std::less<>> fresh;
    std::string line;
    std::size_t lineno = 0;
    ColorValue value = ColorValue::gray(0);
    std::string name;
    while (std::getline(in, line)) {
        ++lineno;
        if (parse_table_line(line, lineno, name, value)) fresh.insert_or_assign(name, value);
    }
    table = std::move(fresh);
    return table.size();
}

}  // namespace

ColorDatabase ColorDatabase::with_builtin_tables() {
    ColorDatabase db;
    std::istringstream base{std::string(builtin_base_table())};
    db.load_definitions(base);
    std::istringstream named{std::string(builtin_named_table())};
    db.load_named_table(named);
    return db;
}

void ColorDatabase::define(std::string_view name, Model model, std::string_view channel_spec) {
    define(name, parse_channel_spec(model, channel_spec));
}

void ColorDatabase::define(std::string_view name, const ColorValue& value) {
    check_name(name);
    user_.insert_or_assign(std::string(name), value);
}

void ColorDatabase::provide(std::string_view name, Model model, std::string_view channel_spec) {
    if (defined_by_user(name)) return;
    define(name, model, channel_spec);
}

void ColorDatabase::provide(std::string_view name, const ColorValue& value) {
    if (defined_by_user(name)) return;
    define(name, value);
}

void ColorDatabase::define_from_named(std::string_view name, std::string_view source) {
    auto it = named_.find(source);
    if (it == named_.end())
        throw UndefinedColorError("unknown named color '" + std::string(source) + "'",
                                  std::string(source));
    define(name, it->second);
}

void ColorDatabase::provide_from_named(std::string_view name, std::string_view source) {
    if (defined_by_user(name)) return;
    define_from_named(name, source);
}

ColorValue ColorDatabase::resolve(std::string_view name) const {
    if (const ColorValue* v = find(name)) return *v;
    throw UndefinedColorError(std::string(name));
}

const ColorValue* ColorDatabase::find(std::string_view name) const noexcept {
    if (auto it = user_.find(name); it != user_.end()) return &it->second;
    if (auto it = named_.find(name); it != named_.end()) return &it->second;
    return nullptr;
}

bool ColorDatabase::defined_by_user(std::string_view name) const noexcept {
    return user_.find(name) != user_.end();
}

std::size_t ColorDatabase::load_named_table(std::istream& in) { return load_table(in, named_); }

std::size_t ColorDatabase::load_definitions(std::istream& in) {
    // define semantics, so existing user entries with the same name are
    // overwritten but others survive.
    std::string line;
    std::size_t lineno = 0, count = 0;
    ColorValue value = ColorValue::gray(0);
    std::string name;
    while (std::getline(in, line)) {
        ++lineno;
        if (parse_table_line(line, lineno, name, value)) {
            user_.insert_or_assign(name, value);
            ++count;
        }
    }
    return count;
}

}  // namespace chroma

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "chroma/color.hpp"

namespace chroma {

// Mutable store of named colors. Lookup goes through the user table first,
// then the named ("driver") table. Names are case-sensitive.
class ColorDatabase {
public:
    ColorDatabase() = default;

    // A database preloaded with the standard base colors (user table) and
    // the shipped driver color table (named table).
    static ColorDatabase with_builtin_tables();

    // define overwrites; provide is a no-op when the name is already in
    // the user table.
    void define(std::string_view name, Model model, std::string_view channel_spec);
    void define(std::string_view name, const ColorValue& value);
    void provide(std::string_view name, Model model, std::string_view channel_spec);
    void provide(std::string_view name, const ColorValue& value);

    // The `named` pseudo-model route: stores a copy of the named-table
    // entry under a new (or the same) name.
    void define_from_named(std::string_view name, std::string_view source);
    void provide_from_named(std::string_view name, std::string_view source);

    ColorValue resolve(std::string_view name) const;  // throws UndefinedColorError
    const ColorValue* find(std::string_view name) const noexcept;
    bool defined_by_user(std::string_view name) const noexcept;

    // Replaces the named table with the entries read from `in`; returns the
    // entry count. Lines are `name model ch1 [ch2 ch3 [ch4]]`; `#` starts a
    // comment; blank lines are ignored. Throws ParseError with the line
    // number on a malformed line.
    std::size_t load_named_table(std::istream& in);

    // Same file format, loaded into the user table with define semantics.
    std::size_t load_definitions(std::istream& in);

    std::size_t user_count() const noexcept { return user_.size(); }
    std::size_t named_count() const noexcept { return named_.size(); }

private:
    using Table = std::map<std::string, ColorValue, std::less<>>;
    Table user_;
    Table named_;
};

// The builtin tables in the named-table file format. These mirror the
// data files shipped under data/ (generated from them at build time).
std::string_view builtin_base_table() noexcept;
std::string_view builtin_named_table() noexcept;

}  // namespace chroma

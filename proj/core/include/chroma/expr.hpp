// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chroma/color.hpp"

namespace chroma {

// AST for the color expression language.
//
//   expr        = extended | standard ;
//   standard    = { "-" } , atom , { "!" percent , [ "!" atom ] } ;
//   atom        = name | "." | series ;
//   series      = name , "!!" , ( plus-run | "[" integer "]" ) ;
//   plus-run    = "+" , { "+" } ;
//   extended    = model , [ "," decimal ] , ":" , term , { ";" term } ;
//   term        = standard , "," , decimal ;
//   percent     = decimal in [0,100] ;
//
// Names start with a letter and continue with letters/digits. Expressions
// contain no whitespace. "!!" is matched before "!". A "!" followed by a
// decimal always starts a new mix step, so a step without a partner mixes
// with white.

struct NameRef {
    std::string name;
    friend bool operator==(const NameRef&, const NameRef&) = default;
};

// `.` — the ambient current color.
struct CurrentColor {
    friend bool operator==(const CurrentColor&, const CurrentColor&) = default;
};

// series!!+, series!!++, ... — returns the series cursor value, then moves
// the cursor forward by `count` (the number of '+' signs).
struct SeriesNext {
    std::string series;
    int count = 1;
    friend bool operator==(const SeriesNext&, const SeriesNext&) = default;
};

// series!![k] — pure indexed access, cursor untouched.
struct SeriesIndex {
    std::string series;
    int index = 0;
    friend bool operator==(const SeriesIndex&, const SeriesIndex&) = default;
};

using Atom = std::variant<NameRef, CurrentColor, SeriesNext, SeriesIndex>;

// One `!percent[!atom]` link. No partner means "mix with white".
struct MixStep {
    double percent = 0.0;
    std::optional<Atom> partner;
    friend bool operator==(const MixStep&, const MixStep&) = default;
};

struct StandardExpr {
    int complements = 0;  // leading '-' count
    Atom head;
    std::vector<MixStep> chain;
    friend bool operator==(const StandardExpr&, const StandardExpr&) = default;
};

struct WeightedTerm {
    StandardExpr expr;
    double weight = 0.0;
    friend bool operator==(const WeightedTerm&, const WeightedTerm&) = default;
};

// model[,divisor]:expr,w;... — weighted sum over `divisor` (default: sum
// of the weights), evaluated in `model`.
struct ExtendedExpr {
    Model model = Model::rgb;
    std::optional<double> divisor;
    std::vector<WeightedTerm> terms;
    friend bool operator==(const ExtendedExpr&, const ExtendedExpr&) = default;
};

struct ColorExpr {
    std::variant<StandardExpr, ExtendedExpr> node;

    bool is_standard() const { return std::holds_alternative<StandardExpr>(node); }
    const StandardExpr& standard() const { return std::get<StandardExpr>(node); }
    const ExtendedExpr& extended() const { return std::get<ExtendedExpr>(node); }

    friend bool operator==(const ColorExpr&, const ColorExpr&) = default;
};

// Throws ParseError (with byte position) on malformed input. Never crashes:
// any input yields an AST or an error.
ColorExpr parse_expr(std::string_view text);

// Canonical text form; parse(unparse(e)) == e. Decimals are printed in the
// shortest fixed notation that parses back to the same value.
std::string unparse(const ColorExpr& e);
std::string unparse(const StandardExpr& e);
std::string unparse(const Atom& a);

// True iff `name` is usable as a color or series name: nonempty, a letter
// first, letters/digits after.
bool is_valid_name(std::string_view name) noexcept;

}  // namespace chroma

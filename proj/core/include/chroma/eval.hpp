// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "chroma/database.hpp"
#include "chroma/expr.hpp"
#include "chroma/series.hpp"

namespace chroma {

// Everything an expression can refer to: the color database, the ambient
// current color (`.`), and the series states. Single-owner mutable;
// evaluation never mutates the database and touches series state only
// through advance atoms.
struct EvalContext {
    ColorDatabase db;
    std::optional<ColorValue> current;
    SeriesTable series;
};

// Evaluates the expression to a concrete color.
//
// A standard expression folds its mix chain left to right, so the head's
// model is the working model throughout; a step without a partner mixes
// with the database's `white`. Leading minus signs complement the folded
// result when their count is odd. An extended expression converts each
// term to its model, forms the weighted sum over the divisor (default: sum
// of weights) and clamps.
ColorValue evaluate(const ColorExpr& e, EvalContext& ctx);

// evaluate, then convert to `target`.
ColorValue evaluate_in(const ColorExpr& e, Model target, EvalContext& ctx);

// Sets the ambient current color. On error the previous value is kept.
void set_current(EvalContext& ctx, const ColorExpr& e);

// colorlet: binds `name` to the evaluated (concrete) value, so later
// redefinition of the expression's sources does not affect it.
void color_let(EvalContext& ctx, std::string_view name, const ColorExpr& e);

}  // namespace chroma

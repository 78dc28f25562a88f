// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "chroma/expr.hpp"

namespace chroma {

struct EvalContext;

// How the per-step increment of a series is obtained at reset time.
enum class StepScheme {
    last,  // step = (last - base) / divisions
    step,  // the second expression's channels are the step itself
};

std::optional<StepScheme> step_scheme_from(std::string_view name) noexcept;

// Arithmetic color series. A definition captures its two expressions
// unevaluated; reset evaluates them in the caller's context and fixes
// base, step and a cursor. Values are clamp(base + k*step), computed from
// the exact affine state so clamping never accumulates.
class SeriesTable {
public:
    void define(std::string_view name, Model model, StepScheme scheme, ColorExpr start,
                ColorExpr second);

    // Throws UndefinedColorError for an unknown series and EvalError for
    // divisions <= 0. Expression errors propagate.
    void reset(std::string_view name, double divisions, EvalContext& ctx);

    // Cursor value, then cursor += steps. Throws EvalError before a reset.
    ColorValue advance(std::string_view name, int steps);

    // Pure indexed access from the reset base; cursor untouched.
    ColorValue at(std::string_view name, int index) const;

    bool contains(std::string_view name) const noexcept;
    long cursor(std::string_view name) const;  // throws before reset

private:
    struct State {
        std::array<double, 4> base{};
        std::array<double, 4> step{};
        long cursor = 0;
        double divisions = 1.0;
    };
    struct Entry {
        Model model = Model::rgb;
        StepScheme scheme = StepScheme::last;
        ColorExpr start;
        ColorExpr second;
        std::optional<State> state;
    };

    const Entry& entry(std::string_view name) const;
    Entry& entry(std::string_view name);
    ColorValue value_at(const Entry& e, long k) const;

    std::map<std::string, Entry, std::less<>> entries_;
};

}  // namespace chroma

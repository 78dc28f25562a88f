// SPDX-License-Identifier: Apache-2.0
#include "chroma/eval.hpp"

namespace chroma {

namespace {

ColorValue eval_atom(const Atom& a, EvalContext& ctx) {
    return std::visit(
        [&ctx](const auto& atom) -> ColorValue {
            using T = std::decay_t<decltype(atom)>;
            if constexpr (std::is_same_v<T, NameRef>) {
                return ctx.db.resolve(atom.name);
            } else if constexpr (std::is_same_v<T, CurrentColor>) {
                if (!ctx.current) throw EvalError("no current color is set");
                return *ctx.current;
            } else if constexpr (std::is_same_v<T, SeriesNext>) {
                return ctx.series.advance(atom.series, atom.count);
            } else {
                return ctx.series.at(atom.series, atom.index);
            }
        },
        a);
}

ColorValue eval_standard(const StandardExpr& e, EvalContext& ctx) {
    ColorValue v = eval_atom(e.head, ctx);
    for (const MixStep& step : e.chain) {
        ColorValue partner =
            step.partner ? eval_atom(*step.partner, ctx) : ctx.db.resolve("white");
        v = mix(v, step.percent, partner);
    }
    if (e.complements % 2 != 0) v = complement(v);
    return v;
}

ColorValue eval_extended(const ExtendedExpr& e, EvalContext& ctx) {
    std::array<double, 4> sum{};
    double weight_sum = 0.0;
    for (const WeightedTerm& term : e.terms) {
        ColorValue v = convert(eval_standard(term.expr, ctx), e.model);
        for (std::size_t i = 0; i < v.size(); ++i) sum[i] += term.weight * v[i];
        weight_sum += term.weight;
    }
    double divisor = e.divisor.value_or(weight_sum);
    if (divisor == 0.0)
        throw EvalError(e.divisor ? "extended expression divisor is zero"
                                  : "extended expression weights sum to zero");
    for (double& ch : sum) ch /= divisor;
    return ColorValue(e.model, std::span<const double>(sum.data(), arity(e.model)));
}

}  // namespace

ColorValue evaluate(const ColorExpr& e, EvalContext& ctx) {
    if (e.is_standard()) return eval_standard(e.standard(), ctx);
    return eval_extended(e.extended(), ctx);
}

ColorValue evaluate_in(const ColorExpr& e, Model target, EvalContext& ctx) {
    return convert(evaluate(e, ctx), target);
}

void set_current(EvalContext& ctx, const ColorExpr& e) {
    ColorValue v = evaluate(e, ctx);
    ctx.current = v;
}

void color_let(EvalContext& ctx, std::string_view name, const ColorExpr& e) {
    ctx.db.define(name, evaluate(e, ctx));
}

}  // namespace chroma

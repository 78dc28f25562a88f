// SPDX-License-Identifier: Apache-2.0
#include "chroma/series.hpp"

#include "chroma/eval.hpp"

namespace chroma {

std::optional<StepScheme> step_scheme_from(std::string_view name) noexcept {
    if (name == "last") return StepScheme::last;
    if (name == "step") return StepScheme::step;
    return std::nullopt;
}

void SeriesTable::define(std::string_view name, Model model, StepScheme scheme, ColorExpr start,
                         ColorExpr second) {
    if (!is_valid_name(name))
        throw ParseError("invalid series name '" + std::string(name) + "'");
    entries_.insert_or_assign(std::string(name),
                              Entry{model, scheme, std::move(start), std::move(second), {}});
}

const SeriesTable::Entry& SeriesTable::entry(std::string_view name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
        throw UndefinedColorError("undefined color series '" + std::string(name) + "'",
                                  std::string(name));
    return it->second;
}

SeriesTable::Entry& SeriesTable::entry(std::string_view name) {
    return const_cast<Entry&>(std::as_const(*this).entry(name));
}

void SeriesTable::reset(std::string_view name, double divisions, EvalContext& ctx) {
    entry(name);  // fail early on unknown series
    if (!(divisions > 0.0)) throw EvalError("series divisions must be positive");
    // Evaluate both expressions before touching state; either may throw,
    // and they may re-enter this table through series atoms.
    Entry snapshot = entry(name);
    ColorValue base = convert(evaluate(snapshot.start, ctx), snapshot.model);
    ColorValue second = convert(evaluate(snapshot.second, ctx), snapshot.model);
    State st;
    st.divisions = divisions;
    for (std::size_t i = 0; i < base.size(); ++i) {
        st.base[i] = base[i];
        st.step[i] = snapshot.scheme == StepScheme::last ? (second[i] - base[i]) / divisions
                                                         : second[i];
    }
    entry(name).state = st;
}

ColorValue SeriesTable::value_at(const Entry& e, long k) const {
    const State& st = *e.state;
    std::array<double, 4> ch{};
    for (std::size_t i = 0; i < arity(e.model); ++i) ch[i] = st.base[i] + double(k) * st.step[i];
    return ColorValue(e.model, std::span<const double>(ch.data(), arity(e.model)));
}

ColorValue SeriesTable::advance(std::string_view name, int steps) {
    Entry& e = entry(name);
    if (!e.state)
        throw EvalError("color series '" + std::string(name) + "' accessed before reset");
    ColorValue v = value_at(e, e.state->cursor);
    e.state->cursor += steps;
    return v;
}

ColorValue SeriesTable::at(std::string_view name, int index) const {
    const Entry& e = entry(name);
    if (!e.state)
        throw EvalError("color series '" + std::string(name) + "' accessed before reset");
    return value_at(e, index);
}

bool SeriesTable::contains(std::string_view name) const noexcept {
    return entries_.find(name) != entries_.end();
}

long SeriesTable::cursor(std::string_view name) const {
    const Entry& e = entry(name);
    if (!e.state)
        throw EvalError("color series '" + std::string(name) + "' accessed before reset");
    return e.state->cursor;
}

}  // namespace chroma

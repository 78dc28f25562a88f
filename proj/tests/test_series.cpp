// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <doctest.h>

#include "chroma/defs.hpp"

using namespace chroma;

namespace {

// The setup used throughout: series over rgb from the current color to its
// complement, reset with 5 divisions while the current color is blue.
EvalContext foo_context() {
    EvalContext ctx = make_standard_context();
    set_current(ctx, parse_expr("blue"));
    ctx.series.define("foo", Model::rgb, StepScheme::last, parse_expr("."), parse_expr("-."));
    ctx.series.reset("foo", 5, ctx);
    return ctx;
}

void check_close(const ColorValue& v, std::initializer_list<double> expect, double tol) {
    REQUIRE(v.size() == expect.size());
    std::size_t i = 0;
    for (double e : expect) CHECK(std::abs(v[i++] - e) <= tol);
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("define stores, reset evaluates") {
    EvalContext ctx = make_standard_context();
    // expressions are captured unevaluated: `.` is not bound yet
    ctx.series.define("foo", Model::rgb, StepScheme::last, parse_expr("."), parse_expr("-."));
    CHECK(ctx.series.contains("foo"));
    CHECK_THROWS_AS(ctx.series.reset("foo", 5, ctx), EvalError);  // no current color yet
    set_current(ctx, parse_expr("blue"));
    ctx.series.reset("foo", 5, ctx);
    check_close(ctx.series.at("foo", 0), {0, 0, 1}, 0);
    check_close(ctx.series.at("foo", 5), {1, 1, 0}, 1e-12);
}

TEST_CASE("scheme parsing") {
    CHECK(step_scheme_from("last") == StepScheme::last);
    CHECK(step_scheme_from("step") == StepScheme::step);
    CHECK(!step_scheme_from("grad"));
    CHECK(!step_scheme_from(""));
}

TEST_CASE("reset errors") {
    EvalContext ctx = make_standard_context();
    CHECK_THROWS_AS(ctx.series.reset("nosuch", 5, ctx), UndefinedColorError);
    ctx.series.define("bar", Model::gray, StepScheme::last, parse_expr("black"),
                      parse_expr("white"));
    CHECK_THROWS_AS(ctx.series.reset("bar", 0, ctx), EvalError);
    CHECK_THROWS_AS(ctx.series.reset("bar", -1, ctx), EvalError);
}

TEST_CASE("access before reset") {
    EvalContext ctx = make_standard_context();
    ctx.series.define("bar", Model::gray, StepScheme::last, parse_expr("black"),
                      parse_expr("white"));
    CHECK_THROWS_AS(ctx.series.advance("bar", 1), EvalError);
    CHECK_THROWS_AS(ctx.series.at("bar", 0), EvalError);
    CHECK_THROWS_AS(ctx.series.advance("nosuch", 1), UndefinedColorError);
}

TEST_CASE("seven single advances saturate at the last color") {
    EvalContext ctx = foo_context();
    const double expect[7][3] = {{0, 0, 1},       {0.2, 0.2, 0.8}, {0.4, 0.4, 0.6},
                                 {0.6, 0.6, 0.4}, {0.8, 0.8, 0.2}, {1, 1, 0},
                                 {1, 1, 0}};
    for (const auto& e : expect) {
        ColorValue v = evaluate(parse_expr("foo!!+"), ctx);
        check_close(v, {e[0], e[1], e[2]}, 1e-9);
    }
    CHECK(ctx.series.cursor("foo") == 7);
}

TEST_CASE("seven double advances") {
    EvalContext ctx = foo_context();
    const double expect[7][3] = {{0, 0, 1},       {0.4, 0.4, 0.6}, {0.8, 0.8, 0.2},
                                 {1, 1, 0},       {1, 1, 0},       {1, 1, 0},
                                 {1, 1, 0}};
    for (const auto& e : expect) {
        ColorValue v = evaluate(parse_expr("foo!!++"), ctx);
        check_close(v, {e[0], e[1], e[2]}, 1e-9);
    }
    CHECK(ctx.series.cursor("foo") == 14);
}

TEST_CASE("indexed access is pure") {
    EvalContext ctx = foo_context();
    for (int i = 0; i < 7; ++i)
        check_close(evaluate(parse_expr("foo!![2]"), ctx), {0.4, 0.4, 0.6}, 1e-9);
    CHECK(ctx.series.cursor("foo") == 0);
}

TEST_CASE("interleaved indexed access never disturbs advances") {
    EvalContext plain = foo_context();
    EvalContext mixed = foo_context();
    std::mt19937 rng(3);
    for (int i = 0; i < 12; ++i) {
        int probes = int(rng() % 4);
        for (int j = 0; j < probes; ++j) mixed.series.at("foo", int(rng() % 9));
        ColorValue a = plain.series.advance("foo", 1);
        ColorValue b = mixed.series.advance("foo", 1);
        CHECK(a == b);
    }
}

TEST_CASE("reset makes the sequence reproducible") {
    EvalContext ctx = foo_context();
    std::vector<ColorValue> first;
    for (int i = 0; i < 9; ++i) first.push_back(ctx.series.advance("foo", 1));
    ctx.series.reset("foo", 5, ctx);
    for (int i = 0; i < 9; ++i) CHECK(ctx.series.advance("foo", 1) == first[size_t(i)]);
}

TEST_CASE("advance(n) is n-fold bookkeeping") {
    EvalContext a = foo_context();
    EvalContext b = foo_context();
    CHECK(a.series.advance("foo", 3) == b.series.advance("foo", 1));
    b.series.advance("foo", 1);
    b.series.advance("foo", 1);
    CHECK(a.series.advance("foo", 1) == b.series.advance("foo", 1));
    CHECK(a.series.cursor("foo") == b.series.cursor("foo"));
}

TEST_CASE("divisions of one jump straight to the last color") {
    EvalContext ctx = make_standard_context();
    ctx.series.define("b", Model::gray, StepScheme::last, parse_expr("black"),
                      parse_expr("white"));
    ctx.series.reset("b", 1, ctx);
    check_close(ctx.series.advance("b", 1), {0}, 0);
    check_close(ctx.series.advance("b", 1), {1}, 0);
}

TEST_CASE("step scheme uses the raw increment") {
    EvalContext ctx = make_standard_context();
    ctx.series.define("s", Model::rgb, StepScheme::step, parse_expr("black"),
                      parse_expr("rgb:red,1"));
    // black converted to rgb is (0,0,0); step is red's channels
    ctx.series.reset("s", 5, ctx);
    check_close(ctx.series.at("s", 1), {1, 0, 0}, 0);
    check_close(ctx.series.at("s", 2), {1, 0, 0}, 0);  // clamped
}

TEST_CASE("fractional divisions are accepted") {
    EvalContext ctx = make_standard_context();
    ctx.series.define("f", Model::gray, StepScheme::last, parse_expr("black"),
                      parse_expr("white"));
    ctx.series.reset("f", 2.5, ctx);
    check_close(ctx.series.at("f", 1), {0.4}, 1e-12);
}

TEST_CASE("clamping does not corrupt the affine state") {
    EvalContext ctx = foo_context();
    // walk far past saturation, then index back into range
    for (int i = 0; i < 40; ++i) ctx.series.advance("foo", 1);
    check_close(ctx.series.at("foo", 3), {0.6, 0.6, 0.4}, 1e-12);
}

TEST_SUITE_END();

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "chroma/error.hpp"

namespace chroma {

// Color models a ColorValue can live in. `named` colors are a resolution
// mechanism of the database, not a model, so they do not appear here.
enum class Model { rgb, cmy, cmyk, hsb, gray, html };

constexpr std::size_t arity(Model m) noexcept {
    switch (m) {
        case Model::cmyk: return 4;
        case Model::gray: return 1;
        default: return 3;
    }
}

std::string_view to_string(Model m) noexcept;

// Accepts the canonical spellings (rgb, cmy, cmyk, hsb, gray, HTML);
// "html" is tolerated as well.
std::optional<Model> model_from_string(std::string_view name) noexcept;

// A color: a model tag plus channels in [0,1], length arity(model).
// Channels are clamped on construction, so every reachable value satisfies
// the range invariant. hsb hue is a unit real (full circle = 1.0).
class ColorValue {
public:
    ColorValue(Model model, std::span<const double> channels);
    ColorValue(Model model, std::initializer_list<double> channels);

    static ColorValue rgb(double r, double g, double b) { return {Model::rgb, {r, g, b}}; }
    static ColorValue gray(double g) { return {Model::gray, {g}}; }
    static ColorValue cmyk(double c, double m, double y, double k) {
        return {Model::cmyk, {c, m, y, k}};
    }

    Model model() const noexcept { return model_; }
    std::size_t size() const noexcept { return arity(model_); }
    std::span<const double> channels() const noexcept { return {ch_.data(), size()}; }
    double operator[](std::size_t i) const noexcept { return ch_[i]; }

    friend bool operator==(const ColorValue&, const ColorValue&) = default;

private:
    Model model_;
    std::array<double, 4> ch_{};
};

// Six uppercase hex digits RRGGBB. Lowercase input is normalized.
class HexCode {
public:
    explicit HexCode(std::string_view digits);  // throws ParseError if malformed

    const std::string& str() const noexcept { return digits_; }

    friend bool operator==(const HexCode&, const HexCode&) = default;

private:
    std::string digits_;
};

// Conversion between any two models. Routes through rgb except for the
// direct pairs rgb<->cmy, cmy<->cmyk and gray<->rgb. convert(c, c.model())
// returns c unchanged.
ColorValue convert(const ColorValue& c, Model to);

// p% of a plus (100-p)% of b, computed channel-wise in a's model.
// Throws EvalError if p is outside [0,100].
ColorValue mix(const ColorValue& a, double percent, const ColorValue& b);

// Channel-wise 1-x for rgb/cmy/gray/html; cmyk goes via cmy and hsb via
// rgb. The result keeps the input's model.
ColorValue complement(const ColorValue& c);

// 8-bit quantization, round-half-up. from_hex yields rgb channels byte/255.
HexCode to_hex(const ColorValue& c);
ColorValue from_hex(const HexCode& h);
ColorValue from_hex(std::string_view digits);

// Parses a channel list, comma- or whitespace-separated, into a value of
// the given model. For html the six-digit hex form is also accepted.
ColorValue parse_channel_spec(Model model, std::string_view text);

}  // namespace chroma

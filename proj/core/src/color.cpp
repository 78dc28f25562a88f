// SPDX-License-Identifier: Apache-2.0
#include "chroma/color.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace chroma {

namespace {

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

using Channels = std::array<double, 4>;

Channels rgb_to_cmy(const Channels& c) {
    return {1.0 - c[0], 1.0 - c[1], 1.0 - c[2], 0.0};
}

Channels cmy_to_rgb(const Channels& c) { return rgb_to_cmy(c); }

Channels cmy_to_cmyk(const Channels& c) {
    double k = std::min({c[0], c[1], c[2]});
    return {c[0] - k, c[1] - k, c[2] - k, k};
}

Channels cmyk_to_cmy(const Channels& c) {
    return {std::min(1.0, c[0] + c[3]), std::min(1.0, c[1] + c[3]),
            std::min(1.0, c[2] + c[3]), 0.0};
}

Channels rgb_to_gray(const Channels& c) {
    return {0.3 * c[0] + 0.59 * c[1] + 0.11 * c[2], 0.0, 0.0, 0.0};
}

Channels gray_to_rgb(const Channels& c) { return {c[0], c[0], c[0], 0.0}; }

Channels rgb_to_hsb(const Channels& c) {
    double mx = std::max({c[0], c[1], c[2]});
    double mn = std::min({c[0], c[1], c[2]});
    double delta = mx - mn;
    double brightness = mx;
    double saturation = mx > 0.0 ? delta / mx : 0.0;
    double hue = 0.0;  // hue of an exactly gray color is 0
    if (delta > 0.0) {
        if (mx == c[0])
            hue = (c[1] - c[2]) / delta;
        else if (mx == c[1])
            hue = (c[2] - c[0]) / delta + 2.0;
        else
            hue = (c[0] - c[1]) / delta + 4.0;
        hue /= 6.0;
        if (hue < 0.0) hue += 1.0;
        if (hue >= 1.0) hue = 0.0;  // keep hue on [0,1)
    }
    return {hue, saturation, brightness, 0.0};
}

Channels hsb_to_rgb(const Channels& c) {
    double h = c[0], s = c[1], v = c[2];
    if (s == 0.0) return {v, v, v, 0.0};
    double h6 = h * 6.0;
    int sector = static_cast<int>(h6) % 6;  // h == 1.0 wraps to sector 0
    double f = h6 - std::floor(h6);
    double p = v * (1.0 - s);
    double q = v * (1.0 - s * f);
    double t = v * (1.0 - s * (1.0 - f));
    switch (sector) {
        case 0: return {v, t, p, 0.0};
        case 1: return {q, v, p, 0.0};
        case 2: return {p, v, t, 0.0};
        case 3: return {p, q, v, 0.0};
        case 4: return {t, p, v, 0.0};
        default: return {v, p, q, 0.0};
    }
}

Channels raw(const ColorValue& c) {
    Channels out{};
    auto ch = c.channels();
    std::copy(ch.begin(), ch.end(), out.begin());
    return out;
}

Channels to_rgb_channels(const ColorValue& c) {
    Channels ch = raw(c);
    switch (c.model()) {
        case Model::rgb:
        case Model::html: return ch;
        case Model::cmy: return cmy_to_rgb(ch);
        case Model::cmyk: return cmy_to_rgb(cmyk_to_cmy(ch));
        case Model::hsb: return hsb_to_rgb(ch);
        case Model::gray: return gray_to_rgb(ch);
    }
    return ch;
}

ColorValue from_rgb_channels(const Channels& rgb, Model to) {
    Channels out = rgb;
    switch (to) {
        case Model::rgb:
        case Model::html: break;
        case Model::cmy: out = rgb_to_cmy(rgb); break;
        case Model::cmyk: out = cmy_to_cmyk(rgb_to_cmy(rgb)); break;
        case Model::hsb: out = rgb_to_hsb(rgb); break;
        case Model::gray: out = rgb_to_gray(rgb); break;
    }
    return ColorValue(to, std::span<const double>(out.data(), arity(to)));
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string_view to_string(Model m) noexcept {
    switch (m) {
        case Model::rgb: return "rgb";
        case Model::cmy: return "cmy";
        case Model::cmyk: return "cmyk";
        case Model::hsb: return "hsb";
        case Model::gray: return "gray";
        case Model::html: return "HTML";
    }
    return "?";
}

std::optional<Model> model_from_string(std::string_view name) noexcept {
    if (name == "rgb") return Model::rgb;
    if (name == "cmy") return Model::cmy;
    if (name == "cmyk") return Model::cmyk;
    if (name == "hsb") return Model::hsb;
    if (name == "gray") return Model::gray;
    if (name == "HTML" || name == "html") return Model::html;
    return std::nullopt;
}

ColorValue::ColorValue(Model model, std::span<const double> channels) : model_(model) {
    if (channels.size() != arity(model))
        throw EvalError("wrong channel count for model '" + std::string(to_string(model)) +
                        "': expected " + std::to_string(arity(model)) + ", got " +
                        std::to_string(channels.size()));
    for (std::size_t i = 0; i < channels.size(); ++i) ch_[i] = clamp01(channels[i]);
}

ColorValue::ColorValue(Model model, std::initializer_list<double> channels)
    : ColorValue(model, std::span<const double>(channels.begin(), channels.size())) {}

HexCode::HexCode(std::string_view digits) {
    if (digits.size() != 6) throw ParseError("hex code must be six digits", 0);
    digits_.reserve(6);
    for (std::size_t i = 0; i < 6; ++i) {
        if (hex_digit(digits[i]) < 0) throw ParseError("invalid hex digit", i);
        digits_.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(digits[i]))));
    }
}

ColorValue convert(const ColorValue& c, Model to) {
    if (to == c.model()) return c;
    // cmy<->cmyk is the one direct pair that does not touch the rgb hub.
    if (c.model() == Model::cmy && to == Model::cmyk) {
        Channels out = cmy_to_cmyk(raw(c));
        return ColorValue(to, std::span<const double>(out.data(), 4));
    }
    if (c.model() == Model::cmyk && to == Model::cmy) {
        Channels out = cmyk_to_cmy(raw(c));
        return ColorValue(to, std::span<const double>(out.data(), 3));
    }
    return from_rgb_channels(to_rgb_channels(c), to);
}

ColorValue mix(const ColorValue& a, double percent, const ColorValue& b) {
    if (!(percent >= 0.0 && percent <= 100.0))
        throw EvalError("mix percentage out of range [0,100]");
    ColorValue bb = convert(b, a.model());
    double p = percent / 100.0;
    Channels out{};
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = p * a[i] + (1.0 - p) * bb[i];
    return ColorValue(a.model(), std::span<const double>(out.data(), a.size()));
}

ColorValue complement(const ColorValue& c) {
    switch (c.model()) {
        case Model::cmyk:
            return convert(complement(convert(c, Model::cmy)), Model::cmyk);
        case Model::hsb:
            return convert(complement(convert(c, Model::rgb)), Model::hsb);
        default: {
            Channels out{};
            for (std::size_t i = 0; i < c.size(); ++i) out[i] = 1.0 - c[i];
            return ColorValue(c.model(), std::span<const double>(out.data(), c.size()));
        }
    }
}

HexCode to_hex(const ColorValue& c) {
    ColorValue r = convert(c, Model::rgb);
    char buf[7];
    auto byte = [](double x) { return static_cast<unsigned>(std::floor(x * 255.0 + 0.5)); };
    std::snprintf(buf, sizeof buf, "%02X%02X%02X", byte(r[0]), byte(r[1]), byte(r[2]));
    return HexCode(buf);
}

ColorValue from_hex(const HexCode& h) {
    const std::string& d = h.str();
    Channels out{};
    for (int i = 0; i < 3; ++i)
        out[i] = (hex_digit(d[2 * i]) * 16 + hex_digit(d[2 * i + 1])) / 255.0;
    return ColorValue(Model::rgb, std::span<const double>(out.data(), 3));
}

ColorValue from_hex(std::string_view digits) { return from_hex(HexCode(digits)); }

ColorValue parse_channel_spec(Model model, std::string_view text) {
    // Tokens are separated by commas or whitespace; both styles are
    // accepted, even mixed.
    std::array<double, 4> vals{};
    std::size_t count = 0;
    std::size_t i = 0;
    auto is_sep = [](char c) {
        return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n';
    };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) ++i;
        std::string_view tok = text.substr(start, i - start);
        if (model == Model::html && count == 0 && i >= text.size() && tok.size() == 6 &&
            std::find_if(tok.begin(), tok.end(),
                         [](char c) { return hex_digit(c) < 0; }) == tok.end()) {
            // Lone hex token: the natural textual form of an HTML color.
            ColorValue rgb = from_hex(tok);
            return ColorValue(Model::html, rgb.channels());
        }
        if (count >= arity(model))
            throw ParseError("too many channels for model '" +
                                 std::string(to_string(model)) + "'",
                             start);
        double v = 0.0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size())
            throw ParseError("invalid channel value '" + std::string(tok) + "'", start);
        vals[count++] = v;
    }
    if (count != arity(model))
        throw ParseError("expected " + std::to_string(arity(model)) + " channels for model '" +
                             std::string(to_string(model)) + "', got " + std::to_string(count),
                         0);
    return ColorValue(model, std::span<const double>(vals.data(), count));
}

}  // namespace chroma

// SPDX-License-Identifier: Apache-2.0
#include "chroma/expr.hpp"

#include <charconv>

namespace chroma {

namespace {

bool is_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_alnum(char c) { return is_letter(c) || is_digit(c); }

// Recursive-descent parser over a string_view with a running byte position.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ColorExpr parse() {
        if (text_.empty()) throw ParseError("empty color expression", 0);
        ColorExpr e = parse_expr();
        if (!at_end()) fail("unexpected trailing characters");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // decimal = digits [ "." digits ] | "." digits
    bool decimal_starts_here(std::size_t ahead = 0) const {
        char c = peek(ahead);
        if (is_digit(c)) return true;
        return c == '.' && is_digit(peek(ahead + 1));
    }

    double parse_decimal(const char* what) {
        std::size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        if (peek() == '.' && is_digit(peek(1))) {
            ++pos_;
            while (is_digit(peek())) ++pos_;
        }
        std::string_view tok = text_.substr(start, pos_ - start);
        if (tok.empty()) {
            pos_ = start;
            fail(std::string("expected ") + what);
        }
        double v = 0.0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size()) {
            pos_ = start;
            fail(std::string("invalid ") + what + " '" + std::string(tok) + "'");
        }
        return v;
    }

    double parse_percent() {
        std::size_t start = pos_;
        double p = parse_decimal("percentage");
        if (p < 0.0 || p > 100.0) {
            pos_ = start;
            fail("percentage out of range [0,100]");
        }
        return p;
    }

    std::string parse_name() {
        if (!is_letter(peek())) fail("expected color name");
        std::size_t start = pos_;
        while (is_alnum(peek())) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Atom parse_atom() {
        if (consume('.')) return CurrentColor{};
        std::string name = parse_name();
        if (peek() == '!' && peek(1) == '!') {  // "!!" before "!"
            pos_ += 2;
            if (peek() == '+') {
                int count = 0;
                while (consume('+')) ++count;
                return SeriesNext{std::move(name), count};
            }
            if (consume('[')) {
                if (!is_digit(peek())) fail("expected series index");
                std::size_t start = pos_;
                while (is_digit(peek())) ++pos_;
                std::string_view tok = text_.substr(start, pos_ - start);
                int k = 0;
                auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
                if (ec != std::errc()) fail("series index out of range");
                if (!consume(']')) fail("expected ']' after series index");
                return SeriesIndex{std::move(name), k};
            }
            fail("expected '+' or '[index]' after '!!'");
        }
        return NameRef{std::move(name)};
    }

    StandardExpr parse_standard() {
        StandardExpr e;
        while (consume('-')) ++e.complements;
        e.head = parse_atom();
        while (peek() == '!') {
            // A lone '!' here: "!!" was already folded into the atom, so
            // this starts a mix step.
            ++pos_;
            MixStep step;
            step.percent = parse_percent();
            if (peek() == '!' && peek(1) != '!' && !decimal_starts_here(1)) {
                // '!' followed by an atom completes the step; '!' followed
                // by a decimal begins the next step (this one gets white).
                ++pos_;
                step.partner = parse_atom();
            }
            e.chain.push_back(std::move(step));
        }
        return e;
    }

    WeightedTerm parse_term() {
        WeightedTerm t;
        t.expr = parse_standard();
        if (!consume(',')) fail("expected ',weight' after extended term");
        t.weight = parse_decimal("weight");
        return t;
    }

    ExtendedExpr parse_extended() {
        ExtendedExpr e;
        std::size_t head_pos = pos_;
        std::string head = parse_name();
        auto model = model_from_string(head);
        if (!model) {
            pos_ = head_pos;
            fail("unknown color model '" + head + "'");
        }
        e.model = *model;
        if (consume(',')) e.divisor = parse_decimal("divisor");
        if (!consume(':')) fail("expected ':' in extended expression");
        e.terms.push_back(parse_term());
        while (consume(';')) e.terms.push_back(parse_term());
        return e;
    }

    // An extended expression is recognized by a head name followed by ':'
    // or ',': neither character can occur in a standard expression at that
    // point, so one token of lookahead decides.
    bool looks_extended() const {
        if (peek() == '-' || peek() == '.') return false;
        std::size_t i = pos_;
        if (i >= text_.size() || !is_letter(text_[i])) return false;
        while (i < text_.size() && is_alnum(text_[i])) ++i;
        return i < text_.size() && (text_[i] == ':' || text_[i] == ',');
    }

    ColorExpr parse_expr() {
        if (looks_extended()) return ColorExpr{parse_extended()};
        return ColorExpr{parse_standard()};
    }
};

// Shortest fixed-notation form that round-trips; "7" rather than "7.0".
std::string format_decimal(double v) {
    char buf[352];  // fixed notation of any double fits
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
    std::string s(buf, end);
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::size_t last = s.find_last_not_of('0');
        s.erase(last == dot ? dot : last + 1);
    }
    return s;
}

struct AtomPrinter {
    std::string operator()(const NameRef& n) const { return n.name; }
    std::string operator()(const CurrentColor&) const { return "."; }
    std::string operator()(const SeriesNext& s) const {
        return s.series + "!!" + std::string(static_cast<std::size_t>(s.count), '+');
    }
    std::string operator()(const SeriesIndex& s) const {
        return s.series + "!![" + std::to_string(s.index) + "]";
    }
};

}  // namespace

ColorExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string unparse(const Atom& a) { return std::visit(AtomPrinter{}, a); }

std::string unparse(const StandardExpr& e) {
    std::string out(static_cast<std::size_t>(e.complements), '-');
    out += unparse(e.head);
    for (const MixStep& step : e.chain) {
        out += '!';
        out += format_decimal(step.percent);
        if (step.partner) {
            out += '!';
            out += unparse(*step.partner);
        }
    }
    return out;
}

std::string unparse(const ColorExpr& e) {
    if (e.is_standard()) return unparse(e.standard());
    const ExtendedExpr& x = e.extended();
    std::string out(to_string(x.model));
    if (x.divisor) {
        out += ',';
        out += format_decimal(*x.divisor);
    }
    out += ':';
    bool first = true;
    for (const WeightedTerm& t : x.terms) {
        if (!first) out += ';';
        first = false;
        out += unparse(t.expr);
        out += ',';
        out += format_decimal(t.weight);
    }
    return out;
}

bool is_valid_name(std::string_view name) noexcept {
    if (name.empty() || !is_letter(name[0])) return false;
    for (char c : name)
        if (!is_alnum(c)) return false;
    return true;
}

}  // namespace chroma

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chroma {

// Base class for everything this library throws on bad input or bad state.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lexical/syntactic failure. `position` is a byte offset into the offending
// text (or a 1-based line number for line-oriented inputs, see `is_line`).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position = 0, bool is_line = false)
        : Error(what), position_(position), line_based_(is_line) {}

    std::size_t position() const noexcept { return position_; }
    bool position_is_line() const noexcept { return line_based_; }

private:
    std::size_t position_;
    bool line_based_;
};

// Lookup of a color or series name that is not defined.
class UndefinedColorError : public Error {
public:
    explicit UndefinedColorError(const std::string& name)
        : Error("undefined color '" + name + "'"), name_(name) {}
    UndefinedColorError(const std::string& what, const std::string& name)
        : Error(what), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Evaluation, range, or state failure (bad percent, zero divisor,
// series accessed before reset, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

}  // namespace chroma

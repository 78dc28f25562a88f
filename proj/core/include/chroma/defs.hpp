// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>

#include "chroma/eval.hpp"

namespace chroma {

// A context with the builtin tables loaded: the common starting point for
// scripts and the CLI.
EvalContext make_standard_context();

// Applies a definition script to the context, one directive per line:
//
//   definecolor <name> <model> <channel spec>
//   providecolor <name> <model> <channel spec>
//   colorlet <name> <expr>
//   definecolorseries <name> <model> <scheme> <expr> <expr>
//   resetcolorseries <div> <name>
//   current <expr>
//
// `#` starts a comment; blank lines are skipped. Channel specs may be
// comma- or space-separated. Execution stops at the first error, which is
// rethrown with the line number prefixed (its class is preserved).
void apply_defs(std::istream& in, EvalContext& ctx);

// Standard context plus the script at `path`.
EvalContext load_defs(const std::filesystem::path& path);

}  // namespace chroma

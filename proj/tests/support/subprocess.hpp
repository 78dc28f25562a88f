// SPDX-License-Identifier: Apache-2.0
//
// Minimal popen-based runner for driving the CLI from tests.
#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace subprocess {

struct Result {
    int exit_code = -1;
    std::string out;  // stdout only
};

inline std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg)
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    return quoted + "'";
}

inline Result run(const std::vector<std::string>& argv) {
    std::string cmd;
    for (const std::string& a : argv) {
        if (!cmd.empty()) cmd += ' ';
        cmd += shell_quote(a);
    }
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    Result r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Path of the CLI under test, from the environment (set by ctest).
inline std::string cli_path() {
    const char* p = std::getenv("CHROMA_CLI");
    if (!p || !*p) throw std::runtime_error("CHROMA_CLI is not set");
    return p;
}

}  // namespace subprocess

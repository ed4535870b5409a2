#ifndef PERIFLOW_TESTS_SUBPROCESS_HPP
#define PERIFLOW_TESTS_SUBPROCESS_HPP

// Small POSIX helper for driving the CLI binary from tests.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace subprocess {

struct Result {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

inline Result run(const std::string& command) {
    Result result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace subprocess

#endif

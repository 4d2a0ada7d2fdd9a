// Shared test plumbing: fixture paths, file slurping, and a popen-based
// runner for the command-line tool.

#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

inline std::string fixture_path(const std::string& name) {
    return std::string(SPIDERLAB_FIXTURE_DIR) + "/" + name;
}

inline std::string cli_path() {
    return SPIDERLAB_CLI_PATH;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

inline std::string temp_file(const std::string& name) {
    return "/tmp/spiderlab_test_" + std::to_string(getpid()) + "_" + name;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr merged
};

inline CommandResult run_command(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + cmd);
    CommandResult result;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

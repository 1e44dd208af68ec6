#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace test {

struct CliResult {
    int exit_code;
    std::string output;  // stdout; stderr goes to the side file when asked
};

/// Runs the CLI binary through the shell, capturing stdout and the exit
/// code. When stderr_path is non-empty, stderr is redirected there.
inline CliResult run_cli(const std::string& binary, const std::string& args,
                         const std::string& stderr_path = "") {
    std::string command = binary + " " + args;
    command += stderr_path.empty() ? " 2>/dev/null" : " 2>" + stderr_path;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("run_cli: popen failed");
    }
    std::string output;
    std::array<char, 4096> buffer;
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return CliResult{exit_code, std::move(output)};
}

inline std::filesystem::path write_matrix_file(const std::string& name,
                                               const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

}  // namespace test

#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Runs a shell command capturing stdout/stderr; scratch names the capture
/// files so concurrent tests do not trample each other.
inline RunResult run(const std::string& command, const std::string& scratch) {
    const std::string out_path = scratch + ".out";
    const std::string err_path = scratch + ".err";
    const std::string full = command + " >" + out_path + " 2>" + err_path;
    const int status = std::system(full.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

/// Path of the CLI binary under test, provided by the build.
inline std::string cli_path() {
    if (const char* env = std::getenv("FOFE_CLI")) return env;
    throw std::runtime_error("FOFE_CLI is not set");
}

}  // namespace testsupport

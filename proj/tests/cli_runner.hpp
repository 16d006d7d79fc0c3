#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

// Path of the CLI under test, injected by the build.
#ifndef BOSONKIT_CLI_PATH
#error "BOSONKIT_CLI_PATH must be defined"
#endif

/// Runs the CLI with `args`, discarding its output; returns the exit status.
inline int run_cli(const std::string& args)
{
    const std::string cmd = std::string("\"") + BOSONKIT_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

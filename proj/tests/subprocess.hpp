#pragma once

// Minimal popen-based runner for CLI tests.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct RunResult {
  int exit_code;
  std::string output;  // stdout, plus stderr if merged
};

inline RunResult run_command(const std::string& command_line) {
  FILE* pipe = popen(command_line.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string output;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, output};
}

// Runs the markov2 CLI with the given argument string, stderr dropped.
inline RunResult run_cli(const std::string& args) {
  return run_command(std::string(MARKOV2_CLI_PATH) + " " + args +
                     " 2>/dev/null");
}

// Same, with stderr merged into the captured output.
inline RunResult run_cli_merged(const std::string& args) {
  return run_command(std::string(MARKOV2_CLI_PATH) + " " + args + " 2>&1");
}

}  // namespace testutil

#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

// Helpers for driving the command-line binary from tests. The build passes
// the binary's location in PAIRFOLD_CLI_PATH.

namespace testutil {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

/// Runs a shell command, capturing stdout+stderr and the exit status.
inline CommandResult run_command(const std::string& command) {
  FILE* pipe = ::popen((command + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  CommandResult result;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

/// Runs the project CLI with the given argument string.
inline CommandResult cli(const std::string& args) {
  return run_command(std::string("'") + PAIRFOLD_CLI_PATH + "' " + args);
}

/// Runs the project CLI with the given text on standard input.
inline CommandResult cli_with_stdin(const std::string& input,
                                    const std::string& args) {
  const std::string path =
      "/tmp/pairfold_cli_stdin." + std::to_string(::getpid()) + ".txt";
  {
    std::ofstream file(path, std::ios::binary);
    file << input;
  }
  CommandResult result =
      run_command(std::string("'") + PAIRFOLD_CLI_PATH + "' " + args + " < " + path);
  std::remove(path.c_str());
  return result;
}

/// Splits CSV text into rows of cells. No quoting support; the table
/// output never quotes.
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  for (char ch : text) {
    if (ch == ',') {
      row.push_back(cell);
      cell.clear();
    } else if (ch == '\n') {
      row.push_back(cell);
      cell.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      cell += ch;
    }
  }
  if (!cell.empty() || !row.empty()) {
    row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Splits arbitrary text into whitespace-separated tokens.
inline std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::string tok;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      if (!tok.empty()) out.push_back(std::move(tok));
      tok.clear();
    } else {
      tok += ch;
    }
  }
  if (!tok.empty()) out.push_back(std::move(tok));
  return out;
}

}  // namespace testutil

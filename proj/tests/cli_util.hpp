#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace cliutil {

inline std::string cli_path() {
  const char* env = std::getenv("BOOLEQ_CLI");
  return env != nullptr ? env : "./tools/booleq";
}

inline std::string golden_dir() {
  const char* env = std::getenv("BOOLEQ_GOLDEN_DIR");
  return env != nullptr ? env : "../tests/golden";
}

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the CLI through /bin/sh; `prefix` can set per-invocation environment
// variables. stderr is discarded unless merge_stderr is set.
inline CliResult run_cli(const std::string& args, bool merge_stderr = false,
                         const std::string& prefix = "") {
  const std::string cmd = prefix + cli_path() + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.out.append(buf, n);
  }
  const int rc = pclose(pipe);
  if (WIFEXITED(rc)) {
    result.status = WEXITSTATUS(rc);
  }
  return result;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Command lines whose output is frozen as golden files.
struct GoldenCase {
  const char* file;
  const char* args;
};

inline const GoldenCase* golden_cases(size_t& count) {
  static const GoldenCase cases[] = {
      {"basis_d2_symbolic_text.golden", "basis --d 2 --symbolic"},
      {"basis_d2_symbolic_latex.golden",
       "basis --d 2 --symbolic --format latex"},
      {"basis_d3_symbolic_text.golden", "basis --d 3 --symbolic"},
      {"basis_d3_symbolic_latex.golden",
       "basis --d 3 --symbolic --format latex"},
      {"basis_d4_symbolic_text.golden", "basis --d 4 --symbolic"},
      {"basis_d4_symbolic_latex.golden",
       "basis --d 4 --symbolic --format latex"},
      {"basis_d3_x0_text.golden", "basis --d 3 --x 0"},
      {"basis_d3_x1_text.golden", "basis --d 3 --x 1"},
      {"basis_d3_x2_text.golden", "basis --d 3 --x 2"},
      {"basis_d3_x0_latex.golden", "basis --d 3 --x 0 --format latex"},
      {"projector_d3_x0_text.golden", "projector --d 3 --x 0"},
      {"projector_d3_x1_text.golden", "projector --d 3 --x 1"},
      {"projector_d3_x2_text.golden", "projector --d 3 --x 2"},
      {"projector_d3_x0_latex.golden", "projector --d 3 --x 0 --format latex"},
      {"bell_00_text.golden", "bell --x 0 --y 0"},
      {"bell_01_text.golden", "bell --x 0 --y 1"},
      {"bell_10_text.golden", "bell --x 1 --y 0"},
      {"bell_11_text.golden", "bell --x 1 --y 1"},
      {"bell_00_latex.golden", "bell --x 0 --y 0 --format latex"},
      {"bell_01_latex.golden", "bell --x 0 --y 1 --format latex"},
      {"bell_10_latex.golden", "bell --x 1 --y 0 --format latex"},
      {"bell_11_latex.golden", "bell --x 1 --y 1 --format latex"},
  };
  count = sizeof(cases) / sizeof(cases[0]);
  return cases;
}

}  // namespace cliutil

#pragma once

#include <string>
#include <vector>

#include "abtk/types.hpp"

namespace abtk {

// Exit-code contract: 0 ok, 1 input error, 2 domain/regime error,
// 3 numerical-invariant failure, 4 degenerate-data warning path.
enum ExitCode {
  kOk = 0,
  kInputError = 1,
  kDomainError = 2,
  kInvariantFailure = 3,
  kDegenerateData = 4,
};

int exit_code_for(const Error& e);

struct CommonOptions {
  std::string config_path;
  std::string out_dir;  // default: $AB_OUT_DIR or "."
  int threads = 0;
  bool fast = false;
};

// Command handlers shared by the CLI binary and the determinism checks.
// Each returns the process exit code and writes its outputs under out_dir.
int cmd_scatter(const CommonOptions& opt);
int cmd_asymptote(const CommonOptions& opt);
int cmd_evolve(const CommonOptions& opt);
int cmd_compare(const CommonOptions& opt);
int cmd_verify(const CommonOptions& opt);

std::string default_out_dir();

}  // namespace abtk

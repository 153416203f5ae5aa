#pragma once

// Job dispatch for the bdm command-line tool.

#include <optional>
#include <string>
#include <vector>

namespace bdm::cli {

inline const std::vector<std::string> kCommands{"umbrella",    "toric",    "charvar",    "singlocus", "discriminant",
                                                "holonomic",   "rankfinite", "grweyl",   "witness"};

struct JobSpec {
  std::string command;
  std::string input;                  // path to a JSON system file
  std::optional<std::string> weight;  // "Lx,Ld" with ':'-separated entries, or "F"
  std::optional<std::string> beta;    // "b1,...,bd"
  bool verify = false;
  bool json = false;
  bool gkz = false;  // singlocus: closed form for H_A
};

struct JobResult {
  int exit_code = 0;  // 0 ok, 1 parse/internal error, 2 unsupported input, 3 verification mismatch
  std::string output;
  std::string error;
};

JobResult run(const JobSpec& spec);
// Same as run, with the system given as JSON text instead of a path.
JobResult run_text(const JobSpec& spec, const std::string& system_json);

}  // namespace bdm::cli

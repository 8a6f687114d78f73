#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/error.hpp"
#include "ribbon/hyperbolic.hpp"
#include "ribbon/invariants.hpp"

namespace ribbon::cli {

enum ExitCode : int {
  kOk = 0,
  kDiagnostics = 1,
  kValidation = 2,
  kCycle = 3,
  kInfeasibleTarget = 4,
  kCapExceeded = 5,
  kInvariantViolation = 6,
};

int exit_code_for(ErrorKind kind);

enum class TargetKind { Minimal, Maximal, Genus };

struct Target {
  TargetKind kind = TargetKind::Minimal;
  std::size_t genus = 0;
};

// "minimal", "maximal" or "genus=<g>".
std::optional<Target> parse_target(std::string_view text);

struct RunConfig {
  std::string command;
  std::string input;
  Target target;
  double margin = kDefaultMargin;
  std::uint64_t max_rotations = kDefaultRotationCap;
  std::uint64_t max_trees = kDefaultTreeCap;
  std::uint64_t seed = 0;
  std::size_t restarts = 8;
  std::string output;        // empty: stdout
  std::string moves_output;  // optional move log
  bool json = false;
  unsigned threads = 0;      // 0: RIBBON_EMBED_THREADS or 1
};

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses the arguments (program name excluded) and dispatches; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ribbon::cli

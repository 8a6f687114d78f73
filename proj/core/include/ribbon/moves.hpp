#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"
#include "ribbon/rotation.hpp"

namespace ribbon {

// A single-dart reinsertion at one vertex and its effect on the boundary count.
struct MoveRecord {
  VertexId vertex = 0;
  std::vector<Dart> old_cycle;
  std::vector<Dart> new_cycle;
  int boundary_delta = 0;
};

struct MoveResult {
  RotationSystem rotation;
  MoveRecord record;
};

// Cyclic orders reachable from `cycle` by moving one dart to another slot,
// scanned by dart position then insertion position; the identity is skipped.
std::vector<std::vector<Dart>> single_dart_reinsertions(const std::vector<Dart>& cycle);

// First reinsertion at v that changes the boundary count by `delta`, if any.
std::optional<MoveResult> find_move(const MetricGraph& g, const RotationSystem& r, VertexId v, int delta);

// Merges three boundary walks through v into one. Requires v to meet >= 3 walks;
// a failure to find the move is reported as Error(InvariantViolation).
MoveResult reduce_move(const MetricGraph& g, const RotationSystem& r, VertexId v);

// First move (vertices by id) that adds two boundary walks.
// Throws Error(Validation) if none exists.
MoveResult increase_move(const MetricGraph& g, const RotationSystem& r);

// `move <vertex> <old-cycle> -> <new-cycle> delta <+2|-2>`
std::string format_move(const MetricGraph& g, const MoveRecord& m);

struct OptimizeOptions {
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  bool allow_enumeration = true;
  EnumerationOptions enumeration;
};

enum class OptimizeMethod { Greedy, Restart, Enumeration };
const char* to_string(OptimizeMethod m);

struct OptimizeResult {
  RotationSystem rotation;
  std::size_t boundaries = 0;
  std::optional<std::size_t> target;  // known optimum, when computable
  bool certified = false;             // boundaries == target
  OptimizeMethod method = OptimizeMethod::Greedy;
  std::size_t greedy_boundaries = 0;  // where greedy descent from R0 stopped
  bool greedy_stalled = false;        // greedy from R0 missed the target
  std::vector<MoveRecord> moves;      // moves leading to `rotation` (empty after enumeration)
};

// Greedy descent: apply reduce_move at the first vertex meeting >= 3 walks until
// none remains. Returns the final rotation and the moves taken.
OptimizeResult greedy_minimize(const MetricGraph& g, const RotationSystem& start);
OptimizeResult greedy_maximize(const MetricGraph& g, const RotationSystem& start);

// Greedy from R0, then seeded restarts, then exhaustive enumeration if allowed.
// The minimization target is 1 + zeta(G); the maximization target is the
// enumerated maximum.
OptimizeResult minimize_boundaries(const MetricGraph& g, const RotationSystem& start,
                                   const OptimizeOptions& options = {});
OptimizeResult maximize_boundaries(const MetricGraph& g, const RotationSystem& start,
                                   const OptimizeOptions& options = {});

}  // namespace ribbon

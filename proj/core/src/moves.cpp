#include "ribbon/moves.hpp"

#include <algorithm>

#include "ribbon/error.hpp"
#include "ribbon/invariants.hpp"

namespace ribbon {

const char* to_string(OptimizeMethod m) {
  switch (m) {
    case OptimizeMethod::Greedy: return "greedy";
    case OptimizeMethod::Restart: return "restart";
    case OptimizeMethod::Enumeration: return "enumeration";
  }
  return "unknown";
}

std::vector<std::vector<Dart>> single_dart_reinsertions(const std::vector<Dart>& cycle) {
  std::vector<std::vector<Dart>> out;
  const std::size_t k = cycle.size();
  if (k < 3) return out;
  const std::vector<Dart> original = canonical_cycle(cycle);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Dart> rest;
    rest.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) rest.push_back(cycle[j]);
    }
    // k - 1 distinct slots on a cycle of k - 1 darts.
    for (std::size_t slot = 0; slot + 1 < k; ++slot) {
      std::vector<Dart> candidate = rest;
      candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(slot), cycle[i]);
      candidate = canonical_cycle(std::move(candidate));
      if (candidate == original) continue;
      if (std::find(out.begin(), out.end(), candidate) != out.end()) continue;
      out.push_back(std::move(candidate));
    }
  }
  return out;
}

std::optional<MoveResult> find_move(const MetricGraph& g, const RotationSystem& r, VertexId v, int delta) {
  const std::size_t before = boundary_count(g, r);
  std::vector<Dart> old_cycle(r.cycle(v).begin(), r.cycle(v).end());
  for (auto& candidate : single_dart_reinsertions(old_cycle)) {
    RotationSystem next = r.with_cycle(v, candidate);
    const long after = static_cast<long>(boundary_count(g, next));
    if (after - static_cast<long>(before) == delta) {
      MoveRecord record{v, old_cycle, std::move(candidate), delta};
      return MoveResult{std::move(next), std::move(record)};
    }
  }
  return std::nullopt;
}

MoveResult reduce_move(const MetricGraph& g, const RotationSystem& r, VertexId v) {
  auto incidence = vertex_boundary_incidence(g, r);
  if (incidence.at(v) < 3) {
    throw Error(ErrorKind::Validation, "vertex '" + g.vertex_name(v) + "' meets " +
                                           std::to_string(incidence[v]) + " boundary walks; need at least 3");
  }
  auto move = find_move(g, r, v, -2);
  if (!move) {
    throw Error(ErrorKind::InvariantViolation,
                "no single-dart reinsertion at '" + g.vertex_name(v) + "' merges three boundary walks");
  }
  return std::move(*move);
}

MoveResult increase_move(const MetricGraph& g, const RotationSystem& r) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (auto move = find_move(g, r, v, +2)) return std::move(*move);
  }
  throw Error(ErrorKind::Validation, "no single-dart move increases the boundary count");
}

std::string format_move(const MetricGraph& g, const MoveRecord& m) {
  return "move " + g.vertex_name(m.vertex) + " " + format_cycle(g, m.old_cycle) + " -> " +
         format_cycle(g, m.new_cycle) + " delta " + (m.boundary_delta > 0 ? "+" : "") +
         std::to_string(m.boundary_delta);
}

OptimizeResult greedy_minimize(const MetricGraph& g, const RotationSystem& start) {
  OptimizeResult out;
  out.rotation = start;
  for (;;) {
    auto incidence = vertex_boundary_incidence(g, out.rotation);
    auto it = std::find_if(incidence.begin(), incidence.end(), [](std::size_t n) { return n >= 3; });
    if (it == incidence.end()) break;
    auto v = static_cast<VertexId>(it - incidence.begin());
    MoveResult move = reduce_move(g, out.rotation, v);
    out.rotation = std::move(move.rotation);
    out.moves.push_back(std::move(move.record));
  }
  out.boundaries = boundary_count(g, out.rotation);
  out.greedy_boundaries = out.boundaries;
  return out;
}

OptimizeResult greedy_maximize(const MetricGraph& g, const RotationSystem& start) {
  OptimizeResult out;
  out.rotation = start;
  for (;;) {
    std::optional<MoveResult> move;
    for (VertexId v = 0; v < g.vertex_count() && !move; ++v) move = find_move(g, out.rotation, v, +2);
    if (!move) break;
    out.rotation = std::move(move->rotation);
    out.moves.push_back(std::move(move->record));
  }
  out.boundaries = boundary_count(g, out.rotation);
  out.greedy_boundaries = out.boundaries;
  return out;
}

namespace {

template <class Greedy, class Better>
OptimizeResult optimize(const MetricGraph& g, const RotationSystem& start, const OptimizeOptions& options,
                        std::optional<std::size_t> target, bool minimize, Greedy greedy, Better better) {
  OptimizeResult best = greedy(g, start);
  best.target = target;
  best.greedy_stalled = target && best.boundaries != *target;
  const std::size_t greedy_boundaries = best.boundaries;
  const bool stalled = best.greedy_stalled;
  auto finish = [&](OptimizeResult r, OptimizeMethod method) {
    r.target = target;
    r.certified = target && r.boundaries == *target;
    r.method = method;
    r.greedy_boundaries = greedy_boundaries;
    r.greedy_stalled = stalled;
    return r;
  };
  if (target && best.boundaries == *target) return finish(std::move(best), OptimizeMethod::Greedy);

  // Restarts from seeded rotations; the lowest seed wins ties.
  bool improved_by_restart = false;
  for (std::size_t k = 1; k <= options.restarts; ++k) {
    OptimizeResult attempt = greedy(g, default_rotation(g, options.seed + k));
    if (better(attempt.boundaries, best.boundaries)) {
      best = std::move(attempt);
      improved_by_restart = true;
    }
    if (target && best.boundaries == *target) break;
  }
  OptimizeMethod method = improved_by_restart ? OptimizeMethod::Restart : OptimizeMethod::Greedy;
  if (target && best.boundaries == *target) return finish(std::move(best), method);

  if (options.allow_enumeration) {
    try {
      RotationEnumerator enumerator(g, options.enumeration.max_rotations);
      BoundaryCensus census = boundary_census(g, options.enumeration);
      OptimizeResult exact;
      exact.rotation = enumerator.at(minimize ? census.argmin : census.argmax);
      exact.boundaries = minimize ? census.min_boundaries : census.max_boundaries;
      if (!target) target = exact.boundaries;
      return finish(std::move(exact), OptimizeMethod::Enumeration);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
    }
  }
  return finish(std::move(best), method);
}

}  // namespace

OptimizeResult minimize_boundaries(const MetricGraph& g, const RotationSystem& start, const OptimizeOptions& options) {
  std::optional<std::size_t> target;
  try {
    target = 1 + betti_deficiency(g, options.enumeration.max_trees);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }
  return optimize(g, start, options, target, true, greedy_minimize,
                  [](std::size_t a, std::size_t b) { return a < b; });
}

OptimizeResult maximize_boundaries(const MetricGraph& g, const RotationSystem& start, const OptimizeOptions& options) {
  std::optional<std::size_t> target;
  if (options.allow_enumeration) {
    try {
      target = boundary_census(g, options.enumeration).max_boundaries;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
    }
  }
  return optimize(g, start, options, target, false, greedy_maximize,
                  [](std::size_t a, std::size_t b) { return a > b; });
}

}  // namespace ribbon

#include "ribbon/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "ribbon/error.hpp"

namespace ribbon {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::CycleGraph: return "cycle";
    case ErrorKind::InfeasibleTarget: return "infeasible-target";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::InvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

MetricGraph::MetricGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)), incident_(vertex_names_.size()) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.tail >= vertex_names_.size() || edge.head >= vertex_names_.size()) {
      throw Error(ErrorKind::Validation, "edge '" + edge.name + "' references an unknown vertex");
    }
    if (!(edge.length > 0.0) || edge.length == std::numeric_limits<double>::infinity()) {
      throw Error(ErrorKind::Validation, "edge '" + edge.name + "' has non-positive length");
    }
    incident_[edge.tail].push_back(forward_dart(e));
    incident_[edge.head].push_back(backward_dart(e));
  }
}

std::optional<VertexId> MetricGraph::find_vertex(std::string_view name) const {
  for (VertexId v = 0; v < vertex_names_.size(); ++v) {
    if (vertex_names_[v] == name) return v;
  }
  return std::nullopt;
}

std::optional<EdgeId> MetricGraph::find_edge(std::string_view name) const {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].name == name) return e;
  }
  return std::nullopt;
}

std::string MetricGraph::dart_name(Dart d) const {
  return edges_.at(edge_of(d)).name + ((d & 1u) ? "-" : "+");
}

std::optional<Dart> MetricGraph::find_dart(std::string_view name) const {
  if (name.size() < 2) return std::nullopt;
  const char sign = name.back();
  if (sign != '+' && sign != '-') return std::nullopt;
  auto e = find_edge(name.substr(0, name.size() - 1));
  if (!e) return std::nullopt;
  return sign == '+' ? forward_dart(*e) : backward_dart(*e);
}

double MetricGraph::total_length() const {
  return std::accumulate(edges_.begin(), edges_.end(), 0.0,
                         [](double acc, const Edge& e) { return acc + e.length; });
}

bool operator==(const Edge& a, const Edge& b) {
  return a.name == b.name && a.tail == b.tail && a.head == b.head && a.length == b.length;
}

bool operator==(const MetricGraph& a, const MetricGraph& b) {
  return a.vertex_names_ == b.vertex_names_ && a.edges_ == b.edges_;
}

MetricGraph graph_from_edges(std::span<const NamedEdge> edges) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;
  auto vertex = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, static_cast<VertexId>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const NamedEdge& e : edges) {
    VertexId u = vertex(e.tail);
    VertexId v = vertex(e.head);
    out.push_back(Edge{e.name, u, v, e.length});
  }
  return MetricGraph(std::move(names), std::move(out));
}

std::size_t betti(const MetricGraph& g) {
  // -|V| + |E| + 1, non-negative for a connected graph.
  return g.edge_count() + 1 - g.vertex_count();
}

long euler_char(const MetricGraph& g) {
  return static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count());
}

bool is_connected(const MetricGraph& g) {
  if (g.vertex_count() == 0) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (Dart d : g.darts_at(v)) {
      VertexId w = g.vertex_of(partner(d));
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

bool is_cycle(const MetricGraph& g) {
  if (!is_connected(g)) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

std::optional<std::size_t> girth(const MetricGraph& g) {
  // For each edge (u, v): shortest u-v path avoiding that edge, plus one.
  // Loops give 1 and parallel edges give 2 without special cases.
  std::optional<std::size_t> best;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n);
  for (EdgeId skip = 0; skip < g.edge_count(); ++skip) {
    const Edge& e = g.edge(skip);
    if (e.tail == e.head) return 1;
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    std::deque<VertexId> queue{e.tail};
    dist[e.tail] = 0;
    while (!queue.empty() && dist[e.head] == std::numeric_limits<std::size_t>::max()) {
      VertexId v = queue.front();
      queue.pop_front();
      if (best && dist[v] + 1 >= *best) break;
      for (Dart d : g.darts_at(v)) {
        if (edge_of(d) == skip) continue;
        VertexId w = g.vertex_of(partner(d));
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[e.head] != std::numeric_limits<std::size_t>::max()) {
      std::size_t len = dist[e.head] + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

MetricGraph smooth(const MetricGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) {
      throw Error(ErrorKind::Validation,
                  "vertex '" + g.vertex_name(v) + "' has degree " + std::to_string(g.degree(v)) +
                      "; smoothing requires degree >= 2");
    }
  }
  if (is_cycle(g)) {
    throw Error(ErrorKind::CycleGraph, "graph is a single cycle");
  }

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<bool> edge_alive(edges.size(), true);
  std::vector<bool> vertex_alive(g.vertex_count(), true);

  // Degree is invariant under suppression of other vertices, so one pass suffices;
  // the incident edge ids however change as merges happen, hence the lookup below.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) continue;
    std::vector<EdgeId> at_v;
    for (EdgeId e = 0; e < edges.size(); ++e) {
      if (!edge_alive[e]) continue;
      if (edges[e].tail == v) at_v.push_back(e);
      if (edges[e].head == v) at_v.push_back(e);
    }
    // A degree-2 vertex with a loop would be an isolated cycle, excluded above.
    EdgeId keep = std::min(at_v[0], at_v[1]);
    EdgeId drop = std::max(at_v[0], at_v[1]);
    auto far_end = [&](EdgeId e) { return edges[e].tail == v ? edges[e].head : edges[e].tail; };
    VertexId b = far_end(drop);
    // The surviving edge keeps its direction: its endpoint at v moves to b.
    if (edges[keep].tail == v) edges[keep].tail = b;
    else edges[keep].head = b;
    edges[keep].length += edges[drop].length;
    edge_alive[drop] = false;
    vertex_alive[v] = false;
  }

  std::vector<VertexId> remap(g.vertex_count(), 0);
  std::vector<std::string> names;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!vertex_alive[v]) continue;
    remap[v] = static_cast<VertexId>(names.size());
    names.push_back(g.vertex_name(v));
  }
  std::vector<Edge> out;
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (!edge_alive[e]) continue;
    Edge edge = edges[e];
    edge.tail = remap[edge.tail];
    edge.head = remap[edge.head];
    out.push_back(std::move(edge));
  }
  return MetricGraph(std::move(names), std::move(out));
}

std::vector<Violation> validate(const MetricGraph& g, std::size_t require_min_degree) {
  std::vector<Violation> out;
  if (g.vertex_count() == 0 || g.edge_count() == 0) {
    out.push_back({ViolationKind::Empty, std::nullopt, "graph has no edges"});
    return out;
  }
  if (!is_connected(g)) {
    out.push_back({ViolationKind::Disconnected, std::nullopt, "graph is not connected"});
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < require_min_degree) {
      out.push_back({ViolationKind::DegreeBelowFloor, v,
                     "vertex '" + g.vertex_name(v) + "' has degree " + std::to_string(g.degree(v)) +
                         " < " + std::to_string(require_min_degree)});
    }
  }
  for (const Edge& e : g.edges()) {
    if (!(e.length > 0.0)) {
      out.push_back({ViolationKind::NonPositiveLength, std::nullopt,
                     "edge '" + e.name + "' has non-positive length"});
    }
  }
  return out;
}

}  // namespace ribbon

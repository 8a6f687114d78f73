#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

// A dart is one half of an undirected edge. Edge i owns darts 2i (tail -> head)
// and 2i+1 (head -> tail), so the edge involution is a single xor.
using Dart = std::uint32_t;
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

constexpr Dart partner(Dart d) noexcept { return d ^ 1u; }
constexpr EdgeId edge_of(Dart d) noexcept { return d >> 1; }
constexpr Dart forward_dart(EdgeId e) noexcept { return 2 * e; }
constexpr Dart backward_dart(EdgeId e) noexcept { return 2 * e + 1; }

struct Edge {
  std::string name;
  VertexId tail = 0;
  VertexId head = 0;
  double length = 1.0;
};

// Finite metric multigraph (loops and parallel edges allowed) stored as darts.
// Construction checks indices and length positivity only; connectivity and
// degree floors are reported by validate() and enforced by parse_graph().
class MetricGraph {
 public:
  MetricGraph() = default;
  MetricGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t dart_count() const noexcept { return 2 * edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  double length(EdgeId e) const { return edges_.at(e).length; }
  bool is_loop(EdgeId e) const { return edges_.at(e).tail == edges_.at(e).head; }

  VertexId vertex_of(Dart d) const {
    const Edge& e = edges_.at(edge_of(d));
    return (d & 1u) ? e.head : e.tail;
  }

  // Darts leaving v in ascending id order.
  std::span<const Dart> darts_at(VertexId v) const { return incident_.at(v); }
  std::size_t degree(VertexId v) const { return incident_.at(v).size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  // "<edge>+" for the forward dart, "<edge>-" for the backward one.
  std::string dart_name(Dart d) const;
  std::optional<Dart> find_dart(std::string_view name) const;

  double total_length() const;

  friend bool operator==(const MetricGraph& a, const MetricGraph& b);

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> incident_;
};

bool operator==(const Edge& a, const Edge& b);

// Builds a graph from named endpoints; vertices are numbered by first mention.
struct NamedEdge {
  std::string name;
  std::string tail;
  std::string head;
  double length = 1.0;
};
MetricGraph graph_from_edges(std::span<const NamedEdge> edges);

std::size_t betti(const MetricGraph& g);
long euler_char(const MetricGraph& g);
bool is_connected(const MetricGraph& g);
bool is_cycle(const MetricGraph& g);

// Number of edges on a shortest cycle; nullopt for a forest.
std::optional<std::size_t> girth(const MetricGraph& g);

// Suppresses every degree-2 vertex, summing the two incident lengths. The merged
// edge keeps the name and position of the lower-numbered edge.
MetricGraph smooth(const MetricGraph& g);

enum class ViolationKind { Disconnected, DegreeBelowFloor, NonPositiveLength, Empty };

struct Violation {
  ViolationKind kind;
  std::optional<VertexId> vertex;
  std::string message;
};

std::vector<Violation> validate(const MetricGraph& g, std::size_t require_min_degree);

// Edge-list text format: `edge <name> <u> <v> <length>` per line, `#` comments.
MetricGraph parse_graph(std::string_view text);
std::string format_graph(const MetricGraph& g);

// FNV-1a over the canonical text form, rendered as "fnv1a64:<16 hex digits>".
std::string graph_hash(const MetricGraph& g);

}  // namespace ribbon

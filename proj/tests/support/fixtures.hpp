#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon::testing {

inline MetricGraph from_lines(std::initializer_list<NamedEdge> edges) {
  std::vector<NamedEdge> v(edges);
  return graph_from_edges(v);
}

// Three parallel edges a, b, c between u and v.
inline MetricGraph theta(double a = 1.0, double b = 1.0, double c = 1.0) {
  return from_lines({{"a", "u", "v", a}, {"b", "u", "v", b}, {"c", "u", "v", c}});
}

// Two loops at one vertex.
inline MetricGraph bouquet2() { return from_lines({{"a", "u", "u", 1.0}, {"b", "u", "u", 1.0}}); }

inline MetricGraph complete(int n) {
  std::vector<NamedEdge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back({"e" + std::to_string(i) + std::to_string(j), "v" + std::to_string(i), "v" + std::to_string(j), 1.0});
    }
  }
  return graph_from_edges(edges);
}

inline MetricGraph k4() { return complete(4); }
inline MetricGraph k5() { return complete(5); }

inline MetricGraph triangle() { return from_lines({{"a", "x", "y", 1.0}, {"b", "y", "z", 1.0}, {"c", "z", "x", 1.0}}); }

// Replaces edge e by a path through `pieces.size() - 1` new vertices with the
// given lengths, which must sum to the old length for smoothing to recover it.
inline MetricGraph subdivide(const MetricGraph& g, EdgeId e, const std::vector<double>& pieces) {
  std::vector<NamedEdge> edges;
  // Fresh names are numbered past the current counts so repeated calls never collide.
  std::size_t fresh_vertex = g.vertex_count();
  std::size_t fresh_edge = g.edge_count();
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& edge = g.edge(i);
    const std::string tail = g.vertex_name(edge.tail);
    const std::string head = g.vertex_name(edge.head);
    if (i != e) {
      edges.push_back({edge.name, tail, head, edge.length});
      continue;
    }
    std::string prev = tail;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      std::string next = (k + 1 == pieces.size()) ? head : "s" + std::to_string(fresh_vertex++);
      edges.push_back({k == 0 ? edge.name : edge.name + "p" + std::to_string(fresh_edge++), prev, next, pieces[k]});
      prev = next;
    }
  }
  return graph_from_edges(edges);
}

// Random connected multigraph with every degree in {3, 4} and at most
// `max_edges` edges, from a configuration-model pairing of half-edges.
inline MetricGraph random_graph(std::uint64_t seed, std::size_t max_edges = 12) {
  std::mt19937_64 rng(seed);
  for (;;) {
    std::uniform_int_distribution<int> vertex_count(2, 8);
    const int n = vertex_count(rng);
    std::vector<int> degree(n);
    int total = 0;
    for (int& d : degree) {
      d = std::bernoulli_distribution(0.3)(rng) ? 4 : 3;
      total += d;
    }
    if (total % 2 != 0) {
      degree[0] = degree[0] == 3 ? 4 : 3;
      total += degree[0] == 4 ? 1 : -1;
    }
    if (static_cast<std::size_t>(total / 2) > max_edges) continue;
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), degree[v], v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<NamedEdge> edges;
    std::uniform_real_distribution<double> length(0.5, 3.0);
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
      edges.push_back({"e" + std::to_string(k / 2), "v" + std::to_string(stubs[k]), "v" + std::to_string(stubs[k + 1]),
                       length(rng)});
    }
    MetricGraph g = graph_from_edges(edges);
    if (g.vertex_count() != static_cast<std::size_t>(n) || !is_connected(g)) continue;
    return g;
  }
}

}  // namespace ribbon::testing

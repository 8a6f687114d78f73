#pragma once

// Reference implementations used only by tests. They share no code with the
// library beyond the graph container, and favour obviousness over speed.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ribbon/graph.hpp"
#include "ribbon/rotation.hpp"

namespace ribbon::oracle {

using Perm = std::vector<std::size_t>;

inline Perm compose(const Perm& outer, const Perm& inner) {
  Perm p(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) p[i] = outer[inner[i]];
  return p;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

inline std::size_t cycle_count(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

// Faces of the fat graph as cycles of sigma_1 . sigma_0^{-1}, built from the
// rotation's cycle lists only.
inline std::size_t face_count(const MetricGraph& g, const RotationSystem& r) {
  Perm sigma0(g.dart_count()), sigma1(g.dart_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto c = r.cycle(v);
    for (std::size_t i = 0; i < c.size(); ++i) sigma0[c[i]] = c[(i + 1) % c.size()];
  }
  for (std::size_t d = 0; d < g.dart_count(); ++d) sigma1[d] = (d % 2 == 0) ? d + 1 : d - 1;
  return cycle_count(compose(sigma1, inverse(sigma0)));
}

// Union-find over vertices.
struct Components {
  std::vector<std::size_t> parent;
  explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Spanning trees as edge masks, by brute force over all (|V|-1)-subsets.
inline std::vector<std::uint32_t> spanning_tree_masks(const MetricGraph& g) {
  std::vector<std::uint32_t> out;
  const std::size_t m = g.edge_count();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 != g.vertex_count()) continue;
    Components c(g.vertex_count());
    bool acyclic = true;
    for (EdgeId e = 0; e < m && acyclic; ++e) {
      if (mask & (1u << e)) acyclic = c.join(g.edge(e).tail, g.edge(e).head);
    }
    if (acyclic) out.push_back(mask);
  }
  return out;
}

// Odd-edge components of the complement of the tree mask.
inline std::size_t odd_cotree_components(const MetricGraph& g, std::uint32_t tree) {
  Components c(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!(tree & (1u << e))) c.join(g.edge(e).tail, g.edge(e).head);
  }
  std::vector<std::size_t> edges_in(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!(tree & (1u << e))) ++edges_in[c.find(g.edge(e).tail)];
  }
  std::size_t odd = 0;
  for (std::size_t n : edges_in) odd += n % 2;
  return odd;
}

inline std::size_t zeta(const MetricGraph& g) {
  std::size_t best = g.edge_count() + 1;
  for (std::uint32_t t : spanning_tree_masks(g)) best = std::min(best, odd_cotree_components(g, t));
  return best;
}

// Kirchhoff: determinant of the reduced Laplacian (loops ignored, parallel
// edges counted with multiplicity).
inline double matrix_tree_count(const MetricGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1.0;
  std::vector<std::vector<double>> lap(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) {
    if (e.tail == e.head) continue;
    lap[e.tail][e.tail] += 1;
    lap[e.head][e.head] += 1;
    lap[e.tail][e.head] -= 1;
    lap[e.head][e.tail] -= 1;
  }
  const std::size_t k = n - 1;
  double det = 1.0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < k; ++row) {
      if (std::abs(lap[row][col]) > std::abs(lap[pivot][col])) pivot = row;
    }
    if (lap[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(lap[pivot], lap[col]);
      det = -det;
    }
    det *= lap[col][col];
    for (std::size_t row = col + 1; row < k; ++row) {
      const double factor = lap[row][col] / lap[col][col];
      for (std::size_t j = col; j < k; ++j) lap[row][j] -= factor * lap[col][j];
    }
  }
  return det;
}

// Shortest cycle by brute force: smallest edge subset in which every vertex
// has even degree (loops count 2) and the used edges are connected.
inline std::size_t girth(const MetricGraph& g) {
  std::size_t best = 0;
  const std::size_t m = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (best != 0 && size >= best) continue;
    std::vector<int> deg(g.vertex_count(), 0);
    Components c(g.vertex_count());
    for (EdgeId e = 0; e < m; ++e) {
      if (!(mask & (1u << e))) continue;
      deg[g.edge(e).tail]++;
      deg[g.edge(e).head]++;
      c.join(g.edge(e).tail, g.edge(e).head);
    }
    bool ok = true;
    std::size_t root = g.vertex_count();
    for (VertexId v = 0; v < g.vertex_count() && ok; ++v) {
      if (deg[v] == 0) continue;
      if (deg[v] != 2) ok = false;
      if (root == g.vertex_count()) root = c.find(v);
      else if (c.find(v) != root) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace ribbon::oracle

#include "ribbon/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Whether the chosen edges plus edges[from..] can still connect every vertex.
bool can_span(const MetricGraph& g, const std::vector<EdgeId>& chosen, EdgeId from) {
  DisjointSets sets(g.vertex_count());
  std::size_t components = g.vertex_count();
  for (EdgeId e : chosen) {
    if (sets.unite(g.edge(e).tail, g.edge(e).head)) --components;
  }
  for (EdgeId e = from; e < g.edge_count() && components > 1; ++e) {
    if (sets.unite(g.edge(e).tail, g.edge(e).head)) --components;
  }
  return components == 1;
}

class TreeSearch {
 public:
  TreeSearch(const MetricGraph& g, std::uint64_t cap, const std::function<void(const SpanningTree&)>& visit)
      : g_(g), cap_(cap), visit_(visit) {}

  void run() {
    if (g_.vertex_count() == 0) return;
    if (!can_span(g_, {}, 0)) return;
    std::vector<std::uint32_t> component(g_.vertex_count());
    std::iota(component.begin(), component.end(), 0u);
    recurse(0, component);
  }

 private:
  void recurse(EdgeId e, std::vector<std::uint32_t>& component) {
    if (tree_.edges.size() + 1 == g_.vertex_count()) {
      if (++produced_ > cap_) {
        throw Error(ErrorKind::CapExceeded,
                    "spanning-tree enumeration exceeded cap " + std::to_string(cap_));
      }
      visit_(tree_);
      return;
    }
    if (e >= g_.edge_count()) return;
    const Edge& edge = g_.edge(e);
    std::uint32_t a = component[edge.tail];
    std::uint32_t b = component[edge.head];
    if (a != b) {
      std::vector<std::uint32_t> saved = component;
      for (auto& c : component) {
        if (c == b) c = a;
      }
      tree_.edges.push_back(e);
      recurse(e + 1, component);
      tree_.edges.pop_back();
      component = std::move(saved);
    }
    if (can_span(g_, tree_.edges, e + 1)) recurse(e + 1, component);
  }

  const MetricGraph& g_;
  std::uint64_t cap_;
  const std::function<void(const SpanningTree&)>& visit_;
  SpanningTree tree_;
  std::uint64_t produced_ = 0;
};

}  // namespace

void for_each_spanning_tree(const MetricGraph& g, std::uint64_t cap,
                            const std::function<void(const SpanningTree&)>& visit) {
  TreeSearch(g, cap, visit).run();
}

std::vector<SpanningTree> spanning_trees(const MetricGraph& g, std::uint64_t cap) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, cap, [&](const SpanningTree& t) { out.push_back(t); });
  return out;
}

std::size_t xi(const MetricGraph& g, const SpanningTree& t) {
  std::vector<bool> in_tree(g.edge_count(), false);
  for (EdgeId e : t.edges) in_tree.at(e) = true;
  DisjointSets sets(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_tree[e]) sets.unite(g.edge(e).tail, g.edge(e).head);
  }
  std::vector<std::size_t> edges_in(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_tree[e]) ++edges_in[sets.find(g.edge(e).tail)];
  }
  return static_cast<std::size_t>(
      std::count_if(edges_in.begin(), edges_in.end(), [](std::size_t n) { return n % 2 == 1; }));
}

std::size_t betti_deficiency(const MetricGraph& g, std::uint64_t cap) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_spanning_tree(g, cap, [&](const SpanningTree& t) { best = std::min(best, xi(g, t)); });
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw Error(ErrorKind::Validation, "graph has no spanning tree");
  }
  return best;
}

std::size_t max_genus(const MetricGraph& g, std::uint64_t cap) {
  std::size_t beta = betti(g);
  std::size_t zeta = betti_deficiency(g, cap);
  if (zeta > beta || (beta - zeta) % 2 != 0) {
    throw Error(ErrorKind::InvariantViolation, "Betti deficiency parity violated");
  }
  return (beta - zeta) / 2;
}

QuotientRemainder qr_split(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Validation, "qr_split requires n >= 1");
  return {n / 3, n % 3};
}

std::size_t standard_capped_genus(std::size_t genus, std::size_t boundaries) {
  auto [q, r] = qr_split(boundaries);
  return genus + 2 * q + r;
}

std::size_t capped_genus_for_boundaries(const MetricGraph& g, std::size_t boundaries) {
  return standard_capped_genus(fat_genus_from_boundaries(g, boundaries), boundaries);
}

std::size_t essential_genus(const MetricGraph& g, std::uint64_t cap) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 3) {
      throw Error(ErrorKind::Validation, "essential genus needs min degree 3; smooth the graph first");
    }
  }
  std::size_t zeta = betti_deficiency(g, cap);
  std::size_t beta = betti(g);
  auto [q, r] = qr_split(zeta + 1);
  return (beta - zeta) / 2 + 2 * q + r;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t k = std::gcd(num, den);
  if (k > 1) {
    num /= k;
    den /= k;
  }
  return {num, den};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational ge_max_bound(const MetricGraph& g) {
  auto t = girth(g);
  if (!t) throw Error(ErrorKind::Validation, "girth bound undefined for a tree");
  auto beta = static_cast<std::int64_t>(betti(g));
  auto edges = static_cast<std::int64_t>(g.edge_count());
  auto girth_edges = static_cast<std::int64_t>(*t);
  return Rational::make((beta + 1) * girth_edges + 2 * edges, 2 * girth_edges);
}

std::size_t ge_max_exact(const MetricGraph& g, const EnumerationOptions& options) {
  BoundaryCensus census = boundary_census(g, options);
  std::size_t best = 0;
  for (auto [b, count] : census.histogram) best = std::max(best, capped_genus_for_boundaries(g, b));
  return best;
}

InvariantReport analyze(const MetricGraph& g, const EnumerationOptions& options) {
  InvariantReport report;
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.beta = betti(g);
  report.euler = euler_char(g);
  report.girth = girth(g);
  report.zeta = betti_deficiency(g, options.max_trees);
  if (report.zeta > report.beta || (report.beta - report.zeta) % 2 != 0) {
    throw Error(ErrorKind::InvariantViolation, "zeta and beta differ in parity");
  }
  report.max_genus = (report.beta - report.zeta) / 2;
  auto [q, r] = qr_split(report.zeta + 1);
  report.q = q;
  report.r = r;
  report.essential_genus = essential_genus(g, options.max_trees);
  report.ge_max_bound = ge_max_bound(g);
  try {
    BoundaryCensus census = boundary_census(g, options);
    std::size_t lo = std::numeric_limits<std::size_t>::max();
    std::size_t hi = 0;
    for (auto [b, count] : census.histogram) {
      std::size_t capped = capped_genus_for_boundaries(g, b);
      lo = std::min(lo, capped);
      hi = std::max(hi, capped);
    }
    report.min_boundaries = census.min_boundaries;
    report.max_boundaries = census.max_boundaries;
    report.essential_genus_enumerated = lo;
    report.ge_max_exact = hi;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }
  return report;
}

}  // namespace ribbon

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"
#include "ribbon/rotation.hpp"

namespace ribbon {

inline constexpr std::uint64_t kDefaultTreeCap = 1'000'000;

struct SpanningTree {
  std::vector<EdgeId> edges;  // ascending
};

// Visits every spanning tree exactly once. Throws Error(CapExceeded) as soon as
// more than `cap` trees have been produced.
void for_each_spanning_tree(const MetricGraph& g, std::uint64_t cap,
                            const std::function<void(const SpanningTree&)>& visit);
std::vector<SpanningTree> spanning_trees(const MetricGraph& g, std::uint64_t cap = kDefaultTreeCap);

// Odd-size components of the co-tree: components of the subgraph formed by the
// edges outside T, counted when they contain an odd number of edges.
std::size_t xi(const MetricGraph& g, const SpanningTree& t);

// zeta(G): minimum of xi over all spanning trees.
std::size_t betti_deficiency(const MetricGraph& g, std::uint64_t cap = kDefaultTreeCap);

// Xuong: (beta - zeta) / 2.
std::size_t max_genus(const MetricGraph& g, std::uint64_t cap = kDefaultTreeCap);

struct QuotientRemainder {
  std::size_t q = 0;
  std::size_t r = 0;
  friend bool operator==(const QuotientRemainder&, const QuotientRemainder&) = default;
};

// n = 3q + r with 0 <= r < 3; n >= 1.
QuotientRemainder qr_split(std::size_t n);

// Closed genus after capping a genus-g surface with b boundaries by q pairs of
// pants and r one-holed tori: g + 2q + r.
std::size_t standard_capped_genus(std::size_t genus, std::size_t boundaries);

// Capped genus of the fat surface of a rotation system with b boundary walks.
std::size_t capped_genus_for_boundaries(const MetricGraph& g, std::size_t boundaries);

// (beta - zeta)/2 + 2q + r with zeta + 1 = 3q + r. Requires min degree >= 3.
std::size_t essential_genus(const MetricGraph& g, std::uint64_t cap = kDefaultTreeCap);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Girth upper bound (beta + 1 + 2|E|/T) / 2 on the maximal genus of a minimal embedding.
Rational ge_max_bound(const MetricGraph& g);

// Maximum over all rotation systems of the standard capped genus.
std::size_t ge_max_exact(const MetricGraph& g, const EnumerationOptions& options = {});

struct InvariantReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t beta = 0;
  std::size_t zeta = 0;
  std::optional<std::size_t> girth;
  long euler = 0;
  std::size_t max_genus = 0;
  std::size_t essential_genus = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  Rational ge_max_bound;
  std::optional<std::size_t> ge_max_exact;
  // Present when rotation enumeration ran: min and max boundary counts and the
  // enumerated minimum of the capped genus, which must equal essential_genus.
  std::optional<std::size_t> min_boundaries;
  std::optional<std::size_t> max_boundaries;
  std::optional<std::size_t> essential_genus_enumerated;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// Expects a smoothed graph (min degree >= 3). Rotation enumeration is attempted
// and silently skipped on CapExceeded; a cap hit on spanning trees propagates.
InvariantReport analyze(const MetricGraph& g, const EnumerationOptions& options = {});

}  // namespace ribbon

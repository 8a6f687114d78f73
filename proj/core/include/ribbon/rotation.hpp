#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

inline constexpr std::uint64_t kDefaultRotationCap = 1'000'000;

// A cyclic order of the darts around every vertex (a fat graph structure).
// Each cycle is stored starting from its smallest dart.
class RotationSystem {
 public:
  RotationSystem() = default;
  // Throws Error(Validation) unless the cycles partition the darts by vertex.
  RotationSystem(const MetricGraph& g, std::vector<std::vector<Dart>> cycles);

  std::size_t vertex_count() const noexcept { return cycles_.size(); }
  std::span<const Dart> cycle(VertexId v) const { return cycles_.at(v); }

  Dart next(Dart d) const { return next_.at(d); }      // sigma_0
  Dart previous(Dart d) const { return prev_.at(d); }  // sigma_0 inverse

  // Same rotation with the cycle at v replaced; validated against v's darts.
  RotationSystem with_cycle(VertexId v, std::vector<Dart> cycle) const;

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) { return a.cycles_ == b.cycles_; }

 private:
  friend class RotationEnumerator;
  void rebuild_links(VertexId v);

  std::vector<std::vector<Dart>> cycles_;
  std::vector<Dart> next_;
  std::vector<Dart> prev_;
};

// Rotates a cyclic sequence so that it starts at its minimum element.
std::vector<Dart> canonical_cycle(std::vector<Dart> cycle);

// Cyclic equality of two dart sequences.
bool same_cycle(std::span<const Dart> a, std::span<const Dart> b);

// One orbit of the face permutation phi = sigma_1 . sigma_0^{-1}.
struct BoundaryWalk {
  std::vector<Dart> darts;
};

// Walks are listed in order of their smallest dart; each starts at that dart.
std::vector<BoundaryWalk> boundary_walks(const MetricGraph& g, const RotationSystem& r);
std::size_t boundary_count(const MetricGraph& g, const RotationSystem& r);

// Genus of the thickened surface, from 2 - 2g - b = chi(G).
std::size_t fat_genus(const MetricGraph& g, const RotationSystem& r);
std::size_t fat_genus_from_boundaries(const MetricGraph& g, std::size_t boundaries);

// Number of distinct boundary walks passing through each vertex.
std::vector<std::size_t> vertex_boundary_incidence(const MetricGraph& g, const RotationSystem& r);

// Seed 0 is the file order (ascending dart ids); other seeds shuffle every vertex.
RotationSystem default_rotation(const MetricGraph& g, std::uint64_t seed);

// Text form: `rot <vertex> <dart> <dart> ...` per vertex.
std::string format_rotation(const MetricGraph& g, const RotationSystem& r);
RotationSystem parse_rotation(const MetricGraph& g, std::string_view text);
std::string format_cycle(const MetricGraph& g, std::span<const Dart> cycle);

// Exhaustive enumeration of rotation systems as a mixed-radix counter. The
// smallest dart at every vertex is pinned first and the remaining darts run
// through all permutations in lexicographic order; vertex 0 is the fastest digit.
class RotationEnumerator {
 public:
  // Throws Error(CapExceeded) when prod (deg(v) - 1)! exceeds cap.
  explicit RotationEnumerator(const MetricGraph& g, std::uint64_t cap = kDefaultRotationCap);

  std::uint64_t size() const noexcept { return size_; }
  RotationSystem at(std::uint64_t index) const;

  // Visits indices [begin, end) in order. The reference is only valid during the call.
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<void(std::uint64_t, const RotationSystem&)>& visit) const;
  void for_each(const std::function<void(std::uint64_t, const RotationSystem&)>& visit) const {
    for_each(0, size_, visit);
  }

  // Number of rotation systems, or nullopt if it overflows 64 bits.
  static std::optional<std::uint64_t> count(const MetricGraph& g);

 private:
  const MetricGraph* graph_;
  std::uint64_t size_ = 1;
  std::vector<std::uint64_t> radix_;
};

// Histogram of boundary counts over every rotation system.
struct BoundaryCensus {
  std::map<std::size_t, std::uint64_t> histogram;
  std::uint64_t total = 0;
  std::size_t min_boundaries = 0;
  std::size_t max_boundaries = 0;
  std::uint64_t argmin = 0;  // lowest enumeration index attaining the minimum
  std::uint64_t argmax = 0;
};

struct EnumerationOptions {
  std::uint64_t max_rotations = kDefaultRotationCap;
  std::uint64_t max_trees = 1'000'000;
  unsigned threads = 1;
};

// Splits the index space into contiguous chunks, one per thread; the merge is
// order independent so results do not depend on the thread count.
BoundaryCensus boundary_census(const MetricGraph& g, const EnumerationOptions& options = {});

// 0 means: read RIBBON_EMBED_THREADS, else 1.
unsigned resolve_threads(unsigned requested);

}  // namespace ribbon

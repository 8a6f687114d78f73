#include "ribbon/rotation.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::vector<Dart> canonical_cycle(std::vector<Dart> cycle) {
  if (cycle.empty()) return cycle;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

bool same_cycle(std::span<const Dart> a, std::span<const Dart> b) {
  if (a.size() != b.size()) return false;
  return canonical_cycle({a.begin(), a.end()}) == canonical_cycle({b.begin(), b.end()});
}

RotationSystem::RotationSystem(const MetricGraph& g, std::vector<std::vector<Dart>> cycles)
    : cycles_(std::move(cycles)), next_(g.dart_count()), prev_(g.dart_count()) {
  if (cycles_.size() != g.vertex_count()) {
    throw Error(ErrorKind::Validation, "rotation has " + std::to_string(cycles_.size()) + " cycles for " +
                                           std::to_string(g.vertex_count()) + " vertices");
  }
  std::vector<bool> seen(g.dart_count(), false);
  for (VertexId v = 0; v < cycles_.size(); ++v) {
    for (Dart d : cycles_[v]) {
      if (d >= g.dart_count()) throw Error(ErrorKind::Validation, "rotation references unknown dart");
      if (seen[d]) throw Error(ErrorKind::Validation, "dart " + g.dart_name(d) + " appears twice in rotation");
      if (g.vertex_of(d) != v) {
        throw Error(ErrorKind::Validation,
                    "dart " + g.dart_name(d) + " placed at vertex '" + g.vertex_name(v) + "'");
      }
      seen[d] = true;
    }
    if (cycles_[v].size() != g.degree(v)) {
      throw Error(ErrorKind::Validation, "rotation at vertex '" + g.vertex_name(v) + "' is missing darts");
    }
    cycles_[v] = canonical_cycle(std::move(cycles_[v]));
    rebuild_links(v);
  }
}

void RotationSystem::rebuild_links(VertexId v) {
  const auto& c = cycles_[v];
  for (std::size_t i = 0; i < c.size(); ++i) {
    Dart d = c[i];
    Dart n = c[(i + 1) % c.size()];
    next_[d] = n;
    prev_[n] = d;
  }
}

RotationSystem RotationSystem::with_cycle(VertexId v, std::vector<Dart> cycle) const {
  std::vector<Dart> a(cycles_.at(v));
  std::vector<Dart> b(cycle);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error(ErrorKind::Validation, "replacement cycle does not match the darts at the vertex");
  RotationSystem out(*this);
  out.cycles_[v] = canonical_cycle(std::move(cycle));
  out.rebuild_links(v);
  return out;
}

std::vector<BoundaryWalk> boundary_walks(const MetricGraph& g, const RotationSystem& r) {
  std::vector<BoundaryWalk> walks;
  std::vector<bool> visited(g.dart_count(), false);
  for (Dart start = 0; start < g.dart_count(); ++start) {
    if (visited[start]) continue;
    BoundaryWalk walk;
    Dart d = start;
    do {
      visited[d] = true;
      walk.darts.push_back(d);
      d = partner(r.previous(d));
    } while (d != start);
    walks.push_back(std::move(walk));
  }
  return walks;
}

std::size_t boundary_count(const MetricGraph& g, const RotationSystem& r) {
  std::size_t count = 0;
  std::vector<char> visited(g.dart_count(), 0);
  for (Dart start = 0; start < g.dart_count(); ++start) {
    if (visited[start]) continue;
    ++count;
    Dart d = start;
    do {
      visited[d] = 1;
      d = partner(r.previous(d));
    } while (d != start);
  }
  return count;
}

std::size_t fat_genus_from_boundaries(const MetricGraph& g, std::size_t boundaries) {
  long twice = 2 - euler_char(g) - static_cast<long>(boundaries);
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorKind::InvariantViolation,
                "boundary count " + std::to_string(boundaries) + " is incompatible with chi(G) = " +
                    std::to_string(euler_char(g)));
  }
  return static_cast<std::size_t>(twice / 2);
}

std::size_t fat_genus(const MetricGraph& g, const RotationSystem& r) {
  return fat_genus_from_boundaries(g, boundary_count(g, r));
}

std::vector<std::size_t> vertex_boundary_incidence(const MetricGraph& g, const RotationSystem& r) {
  std::vector<std::size_t> incidence(g.vertex_count(), 0);
  std::vector<std::size_t> last_walk(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  auto walks = boundary_walks(g, r);
  for (std::size_t w = 0; w < walks.size(); ++w) {
    for (Dart d : walks[w].darts) {
      VertexId v = g.vertex_of(d);
      if (last_walk[v] != w) {
        last_walk[v] = w;
        ++incidence[v];
      }
    }
  }
  return incidence;
}

RotationSystem default_rotation(const MetricGraph& g, std::uint64_t seed) {
  std::vector<std::vector<Dart>> cycles(g.vertex_count());
  std::mt19937_64 rng(seed);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto darts = g.darts_at(v);
    cycles[v].assign(darts.begin(), darts.end());
    if (seed != 0) std::shuffle(cycles[v].begin(), cycles[v].end(), rng);
  }
  return RotationSystem(g, std::move(cycles));
}

std::string format_cycle(const MetricGraph& g, std::span<const Dart> cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += ',';
    out += g.dart_name(cycle[i]);
  }
  return out;
}

std::string format_rotation(const MetricGraph& g, const RotationSystem& r) {
  std::ostringstream out;
  for (VertexId v = 0; v < r.vertex_count(); ++v) {
    out << "rot " << g.vertex_name(v);
    for (Dart d : r.cycle(v)) out << ' ' << g.dart_name(d);
    out << '\n';
  }
  return out.str();
}

RotationSystem parse_rotation(const MetricGraph& g, std::string_view text) {
  std::vector<std::vector<Dart>> cycles(g.vertex_count());
  std::vector<bool> given(g.vertex_count(), false);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] != "rot" || tokens.size() < 2) throw ParseError(line_no, "expected 'rot <vertex> <darts...>'");
    auto v = g.find_vertex(tokens[1]);
    if (!v) throw ParseError(line_no, "unknown vertex '" + std::string(tokens[1]) + "'");
    if (given[*v]) throw ParseError(line_no, "vertex '" + std::string(tokens[1]) + "' listed twice");
    given[*v] = true;
    for (std::size_t k = 2; k < tokens.size(); ++k) {
      auto d = g.find_dart(tokens[k]);
      if (!d) throw ParseError(line_no, "unknown dart '" + std::string(tokens[k]) + "'");
      cycles[*v].push_back(*d);
    }
  }
  return RotationSystem(g, std::move(cycles));
}

std::optional<std::uint64_t> RotationEnumerator::count(const MetricGraph& g) {
  std::uint64_t total = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t k = g.degree(v);
    for (std::uint64_t f = 2; f + 1 <= k; ++f) {
      if (total > std::numeric_limits<std::uint64_t>::max() / f) return std::nullopt;
      total *= f;
    }
  }
  return total;
}

RotationEnumerator::RotationEnumerator(const MetricGraph& g, std::uint64_t cap) : graph_(&g) {
  auto total = count(g);
  if (!total || *total > cap) {
    throw Error(ErrorKind::CapExceeded,
                "rotation enumeration needs " + (total ? std::to_string(*total) : std::string("> 2^64")) +
                    " systems, cap is " + std::to_string(cap));
  }
  size_ = *total;
  radix_.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    radix_.push_back(g.degree(v) == 0 ? 1 : factorial(g.degree(v) - 1));
  }
}

RotationSystem RotationEnumerator::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("rotation index out of range");
  const MetricGraph& g = *graph_;
  std::vector<std::vector<Dart>> cycles(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t digit = index % radix_[v];
    index /= radix_[v];
    auto darts = g.darts_at(v);
    if (darts.empty()) continue;
    std::vector<Dart> pool(darts.begin() + 1, darts.end());
    cycles[v].push_back(darts.front());
    // Lehmer decode of a lexicographic permutation rank.
    for (std::size_t remaining = pool.size(); remaining > 0; --remaining) {
      std::uint64_t f = factorial(remaining - 1);
      std::size_t pick = static_cast<std::size_t>(digit / f);
      digit %= f;
      cycles[v].push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
  }
  return RotationSystem(g, std::move(cycles));
}

void RotationEnumerator::for_each(std::uint64_t begin, std::uint64_t end,
                                  const std::function<void(std::uint64_t, const RotationSystem&)>& visit) const {
  end = std::min(end, size_);
  if (begin >= end) return;
  RotationSystem current = at(begin);
  for (std::uint64_t index = begin;;) {
    visit(index, current);
    if (++index == end) break;
    for (VertexId v = 0; v < current.cycles_.size(); ++v) {
      auto& cycle = current.cycles_[v];
      bool carried = cycle.size() < 2 || !std::next_permutation(cycle.begin() + 1, cycle.end());
      current.rebuild_links(v);
      if (!carried) break;
    }
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RIBBON_EMBED_THREADS")) {
    char* tail = nullptr;
    unsigned long n = std::strtoul(env, &tail, 10);
    if (tail != env && *tail == '\0' && n > 0 && n <= 1024) return static_cast<unsigned>(n);
  }
  return 1;
}

BoundaryCensus boundary_census(const MetricGraph& g, const EnumerationOptions& options) {
  RotationEnumerator enumerator(g, options.max_rotations);
  const std::uint64_t n = enumerator.size();
  const unsigned threads =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(options.threads), n)));

  auto run = [&](std::uint64_t begin, std::uint64_t end, BoundaryCensus& out) {
    out.min_boundaries = std::numeric_limits<std::size_t>::max();
    out.max_boundaries = 0;
    enumerator.for_each(begin, end, [&](std::uint64_t index, const RotationSystem& r) {
      std::size_t b = boundary_count(g, r);
      ++out.histogram[b];
      ++out.total;
      if (b < out.min_boundaries) {
        out.min_boundaries = b;
        out.argmin = index;
      }
      if (b > out.max_boundaries || out.total == 1) {
        out.max_boundaries = b;
        out.argmax = index;
      }
    });
  };

  std::vector<BoundaryCensus> parts(threads);
  if (threads == 1) {
    run(0, n, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t begin = std::min(n, t * chunk);
      std::uint64_t end = std::min(n, begin + chunk);
      pool.emplace_back(run, begin, end, std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
  }

  BoundaryCensus total;
  bool first = true;
  for (const auto& part : parts) {
    if (part.total == 0) continue;
    for (auto [b, c] : part.histogram) total.histogram[b] += c;
    total.total += part.total;
    // Chunks are visited in index order, so strict comparisons keep the lowest index.
    if (first || part.min_boundaries < total.min_boundaries) {
      total.min_boundaries = part.min_boundaries;
      total.argmin = part.argmin;
    }
    if (first || part.max_boundaries > total.max_boundaries) {
      total.max_boundaries = part.max_boundaries;
      total.argmax = part.argmax;
    }
    first = false;
  }
  return total;
}

}  // namespace ribbon

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ribbon/schema.hpp"

namespace ribbon {

namespace {

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); }

class Checker {
 public:
  explicit Checker(const SurfaceSchema& s) : s_(s) {}

  std::vector<Diagnostic> run() {
    index_blocks();
    check_blocks();
    check_gluings();
    check_connected();
    check_bookkeeping();
    check_construction();
    check_minimality();
    check_rotation_order();
    return std::move(out_);
  }

 private:
  void error(std::string code, std::string message) {
    out_.push_back({Severity::Error, std::move(code), std::move(message)});
  }
  void note(std::string code, std::string message) {
    out_.push_back({Severity::Note, std::move(code), std::move(message)});
  }

  void index_blocks() {
    for (std::size_t i = 0; i < s_.blocks.size(); ++i) {
      const Block& b = s_.blocks[i];
      if (!block_index_.emplace(b.id, i).second) error("duplicate_id", "block id '" + b.id + "' is used twice");
      for (std::size_t j = 0; j < b.boundaries.size(); ++j) {
        if (!boundary_index_.emplace(BoundaryKey{b.id, b.boundaries[j].label}, std::make_pair(i, j)).second) {
          error("duplicate_id", "boundary '" + b.boundaries[j].label + "' repeated on block '" + b.id + "'");
        }
      }
    }
  }

  void expect_unit(const Block& b, const BlockBoundary& bd) {
    if (bd.length.is_symbolic() || !close(*bd.length.value, 1.0)) {
      error("block_shape", "boundary " + b.id + "/" + bd.label + " must have length 1");
    }
  }

  void check_blocks() {
    const MetricGraph& g = s_.graph;
    for (const Block& b : s_.blocks) {
      switch (b.kind) {
        case BlockKind::VertexSphere: {
          if (b.genus != 0) error("block_shape", b.id + ": vertex sphere must have genus 0");
          if (!b.vertex || *b.vertex >= g.vertex_count()) {
            error("block_shape", b.id + ": vertex sphere without a valid vertex");
            break;
          }
          const std::size_t deg = g.degree(*b.vertex);
          if (b.boundaries.size() != deg) {
            error("block_shape", b.id + ": " + std::to_string(b.boundaries.size()) + " cuffs for degree " +
                                     std::to_string(deg));
          }
          for (const auto& bd : b.boundaries) expect_unit(b, bd);
          if (b.foot && deg >= 3 && !close(*b.foot, foot_length(deg))) {
            error("scale", b.id + ": foot length disagrees with the degree-" + std::to_string(deg) + " value");
          }
          break;
        }
        case BlockKind::EdgePants: {
          if (b.genus != 0) error("block_shape", b.id + ": edge pants must have genus 0");
          if (!b.edge || *b.edge >= g.edge_count() || !b.waist) {
            error("block_shape", b.id + ": edge pants without a valid edge and waist");
            break;
          }
          if (b.boundaries.size() != 3 || b.boundaries[0].label != "tail" || b.boundaries[1].label != "head" ||
              b.boundaries[2].label != "waist") {
            error("block_shape", b.id + ": edge pants cuffs must be (tail, head, waist)");
            break;
          }
          expect_unit(b, b.boundaries[0]);
          expect_unit(b, b.boundaries[1]);
          const auto& w = b.boundaries[2].length;
          if (w.is_symbolic() || !close(*w.value, 2.0 * *b.waist)) {
            error("length_mismatch", b.id + ": waist cuff must have length 2x");
          }
          check_edge_scale(b);
          break;
        }
        case BlockKind::RibbonSurface: check_ribbon(b); break;
        case BlockKind::CapPants:
          if (b.genus != 0 || b.boundaries.size() != 3) error("block_shape", b.id + ": cap pants must be (0, 3)");
          break;
        case BlockKind::CapTorus:
          if (b.genus != 1 || b.boundaries.size() != 1) error("block_shape", b.id + ": cap torus must be (1, 1)");
          break;
        case BlockKind::CapSurface:
          if (b.boundaries.size() != 1 && b.boundaries.size() != 3) {
            error("block_shape", b.id + ": cap surface must have 1 or 3 boundaries");
          }
          break;
      }
    }
  }

  void check_edge_scale(const Block& b) {
    const MetricGraph& g = s_.graph;
    const EdgeId e = *b.edge;
    const double t = s_.scale.t;
    const double expected_clearance = edge_clearance(g, e);
    if (b.clearance && !close(*b.clearance, expected_clearance)) {
      error("scale", b.id + ": clearance disagrees with the endpoint foot lengths");
    }
    const double available = t * g.length(e) - expected_clearance;
    if (available + 1e-9 * std::max(1.0, available) < min_waist_distance() + s_.scale.margin) {
      error("scale", b.id + ": rescaled length leaves less than f_min + margin for the pants");
      return;
    }
    if (!(*b.waist > 0.0) || !close(waist_distance(*b.waist), available)) {
      error("scale", b.id + ": f(waist) differs from t*d(e) - l(e)");
    }
  }

  void check_ribbon(const Block& b) {
    const MetricGraph& g = s_.graph;
    if (!s_.rotation) {
      error("walk_mismatch", b.id + ": ribbon surface without a rotation system");
      return;
    }
    auto walks = boundary_walks(g, *s_.rotation);
    if (walks.size() != b.boundaries.size() || walks.size() != b.walks.size()) {
      error("walk_mismatch", b.id + ": " + std::to_string(b.boundaries.size()) + " boundaries but the rotation has " +
                                 std::to_string(walks.size()) + " boundary walks");
      return;
    }
    for (std::size_t i = 0; i < walks.size(); ++i) {
      const std::string label = "w" + std::to_string(i);
      if (b.boundaries[i].label != label || !b.boundaries[i].length.is_symbolic() ||
          b.boundaries[i].length.symbol != label) {
        error("walk_mismatch", b.id + ": boundary " + std::to_string(i) + " must be " + label + " with length sym:" +
                                   label);
      }
      if (walks[i].darts != b.walks[i]) {
        error("walk_mismatch", b.id + ": walk " + label + " differs from the rotation's boundary walk");
      }
    }
    if (b.euler_characteristic() != euler_char(g)) {
      error("chi_bookkeeping", b.id + ": chi = " + std::to_string(b.euler_characteristic()) + " but chi(G) = " +
                                   std::to_string(euler_char(g)));
    }
  }

  void check_gluings() {
    std::set<BoundaryKey> used;
    for (const Gluing& gl : s_.gluings) {
      const BoundaryLength* lengths[2] = {nullptr, nullptr};
      int k = 0;
      bool ok = true;
      for (const BoundaryRef* ref : {&gl.a, &gl.b}) {
        auto it = boundary_index_.find({ref->block, ref->label});
        if (it == boundary_index_.end()) {
          error("unknown_boundary", "gluing names missing boundary " + ref->block + "/" + ref->label);
          ok = false;
        } else {
          lengths[k] = &s_.blocks[it->second.first].boundaries[it->second.second].length;
          if (!used.insert({ref->block, ref->label}).second) {
            error("double_gluing", "boundary " + ref->block + "/" + ref->label + " is glued more than once");
          }
        }
        ++k;
      }
      if (gl.a == gl.b) error("double_gluing", "boundary " + gl.a.block + "/" + gl.a.label + " glued to itself");
      if (gl.twist != 0.0) error("twist", "gluing " + describe(gl) + " has non-zero twist");
      if (!ok) continue;
      const BoundaryLength& la = *lengths[0];
      const BoundaryLength& lb = *lengths[1];
      bool match = la.is_symbolic() == lb.is_symbolic() &&
                   (la.is_symbolic() ? la.symbol == lb.symbol : close(*la.value, *lb.value));
      if (!match) error("length_mismatch", "gluing " + describe(gl) + " joins boundaries of different length");
    }
    for (const auto& [key, where] : boundary_index_) {
      if (!used.contains(key)) free_.push_back(key);
    }
  }

  std::string describe(const Gluing& gl) const {
    return gl.a.block + "/" + gl.a.label + " ~ " + gl.b.block + "/" + gl.b.label;
  }

  void check_connected() {
    if (s_.blocks.empty()) {
      error("empty", "schema has no blocks");
      return;
    }
    std::vector<std::size_t> parent(s_.blocks.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Gluing& gl : s_.gluings) {
      auto a = block_index_.find(gl.a.block);
      auto b = block_index_.find(gl.b.block);
      if (a != block_index_.end() && b != block_index_.end()) parent[find(a->second)] = find(b->second);
    }
    std::size_t roots = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) roots += find(i) == i;
    if (roots != 1) error("disconnected", "blocks form " + std::to_string(roots) + " separate surfaces");
  }

  void check_bookkeeping() {
    long chi = 0;
    for (const Block& b : s_.blocks) chi += b.euler_characteristic();
    const std::size_t free_count = free_.size();
    if (free_count != s_.summary.boundary_count) {
      std::ostringstream msg;
      msg << free_count << " unglued boundaries but summary declares " << s_.summary.boundary_count;
      if (!free_.empty()) msg << " (first: " << free_.front().block << "/" << free_.front().label << ")";
      error(free_count > s_.summary.boundary_count ? "dangling_boundary" : "boundary_count", msg.str());
    }
    const long declared = 2 - 2 * static_cast<long>(s_.summary.genus) - static_cast<long>(s_.summary.boundary_count);
    if (chi != declared) {
      error("chi_bookkeeping", "sum of block chi is " + std::to_string(chi) + " but genus " +
                                   std::to_string(s_.summary.genus) + " with " +
                                   std::to_string(s_.summary.boundary_count) + " boundaries needs " +
                                   std::to_string(declared));
    }
  }

  void check_construction() {
    const MetricGraph& g = s_.graph;
    const auto count = [&](BlockKind k) {
      return std::count_if(s_.blocks.begin(), s_.blocks.end(), [&](const Block& b) { return b.kind == k; });
    };
    switch (s_.summary.construction) {
      case Construction::Naive: {
        if (static_cast<std::size_t>(count(BlockKind::VertexSphere)) != g.vertex_count() ||
            static_cast<std::size_t>(count(BlockKind::EdgePants)) != g.edge_count()) {
          error("coverage", "naive schema needs one sphere per vertex and one pants per edge");
        }
        long degree_excess = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) degree_excess += static_cast<long>(g.degree(v)) - 2;
        const long lhs = 2 * static_cast<long>(s_.summary.genus) - 2;
        const long rhs = degree_excess + 2 * static_cast<long>(g.edge_count());
        if (lhs != rhs) {
          error("naive_identity", "2g - 2 = " + std::to_string(lhs) + " but sum(deg - 2) + 2|E| = " +
                                      std::to_string(rhs));
        }
        break;
      }
      case Construction::Sigma:
      case Construction::SigmaTarget:
        if (count(BlockKind::RibbonSurface) != 1) error("coverage", "sigma schema needs exactly one ribbon surface");
        if (s_.summary.construction == Construction::SigmaTarget &&
            (!s_.summary.target_genus || *s_.summary.target_genus != s_.summary.genus)) {
          error("target_genus", "target genus does not match the summary genus");
        }
        break;
    }
  }

  void check_minimality() {
    const bool closed = s_.summary.boundary_count == 0;
    if (s_.summary.construction == Construction::Naive || !closed) {
      if (s_.summary.minimal) error("minimality", "only closed sigma schemas can be minimal");
      return;
    }
    bool all_pants_like = true;
    for (const Block& b : s_.blocks) {
      bool cap = b.kind == BlockKind::CapPants || b.kind == BlockKind::CapTorus || b.kind == BlockKind::CapSurface;
      if (cap && b.euler_characteristic() != -1) {
        all_pants_like = false;
        note("non_minimal", b.id + " has chi = " + std::to_string(b.euler_characteristic()) + " (genus " +
                                std::to_string(b.genus) + ", " + std::to_string(b.boundaries.size()) +
                                " boundaries); minimal embeddings need chi = -1");
      }
    }
    if (s_.summary.minimal != all_pants_like) {
      error("minimality", std::string("minimal flag is ") + (s_.summary.minimal ? "true" : "false") +
                              " but the caps say otherwise");
    }
  }

  void check_rotation_order() {
    if (!s_.rotation) return;
    const MetricGraph& g = s_.graph;
    const RotationSystem& r = *s_.rotation;
    std::map<VertexId, std::string> sphere_of;
    for (const Block& b : s_.blocks) {
      if (b.kind != BlockKind::VertexSphere || !b.vertex || *b.vertex >= g.vertex_count()) continue;
      sphere_of[*b.vertex] = b.id;
      std::vector<Dart> order;
      bool named = true;
      for (const auto& bd : b.boundaries) {
        auto d = g.find_dart(bd.label);
        if (!d) {
          named = false;
          break;
        }
        order.push_back(*d);
      }
      auto cycle = r.cycle(*b.vertex);
      if (!named || !same_cycle(order, cycle)) {
        error("rotation_order", b.id + ": cuff order does not follow the rotation at '" +
                                    g.vertex_name(*b.vertex) + "'");
      }
    }
    for (const Block& b : s_.blocks) {
      if (b.kind != BlockKind::EdgePants || !b.edge || *b.edge >= g.edge_count()) continue;
      const EdgeId e = *b.edge;
      const BoundaryRef tail_expected{sphere_of.count(g.edge(e).tail) ? sphere_of[g.edge(e).tail] : "",
                                      g.dart_name(forward_dart(e))};
      const BoundaryRef head_expected{sphere_of.count(g.edge(e).head) ? sphere_of[g.edge(e).head] : "",
                                      g.dart_name(backward_dart(e))};
      if (partner_of({b.id, "tail"}) != tail_expected || partner_of({b.id, "head"}) != head_expected) {
        error("edge_attachment", b.id + ": unit cuffs are not glued to the spheres of the edge's endpoints");
      }
    }
  }

  BoundaryRef partner_of(const BoundaryRef& ref) const {
    for (const Gluing& gl : s_.gluings) {
      if (gl.a == ref) return gl.b;
      if (gl.b == ref) return gl.a;
    }
    return {};
  }

  struct BoundaryKey {
    std::string block;
    std::string label;
    auto operator<=>(const BoundaryKey&) const = default;
  };

  const SurfaceSchema& s_;
  std::vector<Diagnostic> out_;
  std::map<std::string, std::size_t> block_index_;
  std::map<BoundaryKey, std::pair<std::size_t, std::size_t>> boundary_index_;
  std::vector<BoundaryKey> free_;
};

}  // namespace

std::vector<Diagnostic> verify_schema(const SurfaceSchema& schema) { return Checker(schema).run(); }

bool is_clean(const std::vector<Diagnostic>& diagnostics) {
  return std::none_of(diagnostics.begin(), diagnostics.end(),
                      [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

}  // namespace ribbon

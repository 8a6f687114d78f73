#include <algorithm>
#include <set>

#include "ribbon/error.hpp"
#include "ribbon/schema.hpp"

namespace ribbon {

const char* to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::VertexSphere: return "vertex_sphere";
    case BlockKind::EdgePants: return "edge_pants";
    case BlockKind::RibbonSurface: return "ribbon_surface";
    case BlockKind::CapPants: return "cap_pants";
    case BlockKind::CapTorus: return "cap_torus";
    case BlockKind::CapSurface: return "cap_surface";
  }
  return "unknown";
}

std::optional<BlockKind> block_kind_from_string(std::string_view name) {
  for (auto kind : {BlockKind::VertexSphere, BlockKind::EdgePants, BlockKind::RibbonSurface, BlockKind::CapPants,
                    BlockKind::CapTorus, BlockKind::CapSurface}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

const char* to_string(Construction c) {
  switch (c) {
    case Construction::Naive: return "naive";
    case Construction::Sigma: return "sigma";
    case Construction::SigmaTarget: return "sigma_target";
  }
  return "unknown";
}

const Block* SurfaceSchema::find_block(std::string_view id) const {
  for (const Block& b : blocks) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

namespace {

void require_embeddable(const MetricGraph& g) {
  if (is_cycle(g)) throw Error(ErrorKind::CycleGraph, "graph is a single cycle");
  for (const Violation& v : validate(g, 3)) throw Error(ErrorKind::Validation, v.message);
}

std::string sphere_id(const MetricGraph& g, VertexId v) { return "S." + g.vertex_name(v); }
std::string pants_id(const MetricGraph& g, EdgeId e) { return "P." + g.edge(e).name; }

// Boundaries not named by any gluing, in block order then boundary order.
std::vector<std::pair<std::size_t, std::size_t>> free_boundaries(const SurfaceSchema& s) {
  std::set<std::pair<std::string, std::string>> glued;
  for (const Gluing& gl : s.gluings) {
    glued.emplace(gl.a.block, gl.a.label);
    glued.emplace(gl.b.block, gl.b.label);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    for (std::size_t j = 0; j < s.blocks[i].boundaries.size(); ++j) {
      if (!glued.contains({s.blocks[i].id, s.blocks[i].boundaries[j].label})) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

SurfaceSchema naive_embedding(const MetricGraph& g, double margin) {
  return naive_embedding(g, default_rotation(g, 0), margin);
}

SurfaceSchema naive_embedding(const MetricGraph& g, const RotationSystem& r, double margin) {
  require_embeddable(g);
  SurfaceSchema s;
  s.graph = g;
  s.rotation = r;
  s.scale = choose_scale(g, margin);

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Block sphere;
    sphere.id = sphere_id(g, v);
    sphere.kind = BlockKind::VertexSphere;
    sphere.vertex = v;
    sphere.foot = s.scale.foot[v];
    for (Dart d : s.rotation->cycle(v)) sphere.boundaries.push_back({g.dart_name(d), BoundaryLength::numeric(1.0)});
    s.blocks.push_back(std::move(sphere));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double x = s.scale.waist[e];
    Block pants;
    pants.id = pants_id(g, e);
    pants.kind = BlockKind::EdgePants;
    pants.edge = e;
    pants.waist = x;
    pants.clearance = s.scale.clearance[e];
    pants.boundaries = {{"tail", BoundaryLength::numeric(1.0)},
                        {"head", BoundaryLength::numeric(1.0)},
                        {"waist", BoundaryLength::numeric(2.0 * x)}};
    s.blocks.push_back(std::move(pants));
    s.gluings.push_back({{sphere_id(g, g.edge(e).tail), g.dart_name(forward_dart(e))}, {pants_id(g, e), "tail"}});
    s.gluings.push_back({{sphere_id(g, g.edge(e).head), g.dart_name(backward_dart(e))}, {pants_id(g, e), "head"}});
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Block torus;
    torus.id = "T." + g.edge(e).name;
    torus.kind = BlockKind::CapTorus;
    torus.genus = 1;
    torus.boundaries = {{"cuff", BoundaryLength::numeric(2.0 * s.scale.waist[e])}};
    s.gluings.push_back({{pants_id(g, e), "waist"}, {torus.id, "cuff"}});
    s.blocks.push_back(std::move(torus));
  }
  s.summary.genus = g.edge_count() + betti(g);
  s.summary.boundary_count = 0;
  s.summary.minimal = false;
  s.summary.construction = Construction::Naive;
  return s;
}

SurfaceSchema assemble_sigma_surface(const MetricGraph& g, const RotationSystem& r, double margin) {
  require_embeddable(g);
  SurfaceSchema s;
  s.graph = g;
  s.rotation = r;
  s.scale = choose_scale(g, margin);

  Block ribbon;
  ribbon.id = "R";
  ribbon.kind = BlockKind::RibbonSurface;
  auto walks = boundary_walks(g, r);
  ribbon.genus = fat_genus_from_boundaries(g, walks.size());
  for (std::size_t i = 0; i < walks.size(); ++i) {
    std::string label = "w" + std::to_string(i);
    ribbon.boundaries.push_back({label, BoundaryLength::symbolic(label)});
    ribbon.walks.push_back(std::move(walks[i].darts));
  }
  s.summary.genus = ribbon.genus;
  s.summary.boundary_count = ribbon.boundaries.size();
  s.summary.minimal = false;
  s.summary.construction = Construction::Sigma;
  s.blocks.push_back(std::move(ribbon));
  return s;
}

SurfaceSchema cap_standard(const SurfaceSchema& bordered) {
  auto open = free_boundaries(bordered);
  if (open.empty()) throw Error(ErrorKind::Validation, "schema is already closed");
  SurfaceSchema s = bordered;
  const std::size_t b = open.size();
  const std::size_t q = b / 3;
  const std::size_t r = b % 3;

  auto ref = [&](std::size_t k) {
    const Block& block = bordered.blocks[open[k].first];
    return std::make_pair(BoundaryRef{block.id, block.boundaries[open[k].second].label},
                          block.boundaries[open[k].second].length);
  };
  std::size_t next = 0;
  for (std::size_t i = 0; i < q; ++i) {
    Block pants;
    pants.id = "Y" + std::to_string(i);
    pants.kind = BlockKind::CapPants;
    for (std::size_t c = 0; c < 3; ++c, ++next) {
      auto [target, length] = ref(next);
      std::string label = "c" + std::to_string(c);
      pants.boundaries.push_back({label, length});
      s.gluings.push_back({target, {pants.id, label}});
    }
    s.blocks.push_back(std::move(pants));
  }
  for (std::size_t i = 0; i < r; ++i, ++next) {
    Block torus;
    torus.id = "T" + std::to_string(i);
    torus.kind = BlockKind::CapTorus;
    torus.genus = 1;
    auto [target, length] = ref(next);
    torus.boundaries.push_back({"c0", length});
    s.gluings.push_back({target, {torus.id, "c0"}});
    s.blocks.push_back(std::move(torus));
  }
  s.summary.genus = bordered.summary.genus + 2 * q + r;
  s.summary.boundary_count = 0;
  s.summary.minimal = true;
  return s;
}

SurfaceSchema cap_target_genus(const SurfaceSchema& bordered, std::size_t target_genus) {
  const std::size_t b = free_boundaries(bordered).size();
  SurfaceSchema s = cap_standard(bordered);
  const std::size_t base = s.summary.genus;
  if (target_genus < base) {
    throw Error(ErrorKind::InfeasibleTarget, "target genus " + std::to_string(target_genus) +
                                                 " is below the minimal capped genus " + std::to_string(base));
  }
  const std::size_t extra = target_genus - base;
  s.summary.construction = Construction::SigmaTarget;
  s.summary.target_genus = target_genus;
  if (extra == 0) return s;

  // b divisible by 3: a Y-piece becomes F_{extra,3}; otherwise a torus becomes F_{extra+1,1}.
  const BlockKind replaced = (b % 3 == 0) ? BlockKind::CapPants : BlockKind::CapTorus;
  auto it = std::find_if(s.blocks.begin(), s.blocks.end(), [&](const Block& blk) { return blk.kind == replaced; });
  if (it == s.blocks.end()) {
    throw Error(ErrorKind::InvariantViolation, std::string("standard capping produced no ") + to_string(replaced));
  }
  const std::string old_id = it->id;
  it->id = "F0";
  it->kind = BlockKind::CapSurface;
  it->genus = (replaced == BlockKind::CapPants) ? extra : extra + 1;
  for (Gluing& gl : s.gluings) {
    if (gl.a.block == old_id) gl.a.block = it->id;
    if (gl.b.block == old_id) gl.b.block = it->id;
  }
  s.summary.genus = target_genus;
  s.summary.minimal = false;
  return s;
}

}  // namespace ribbon

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"
#include "ribbon/hyperbolic.hpp"
#include "ribbon/rotation.hpp"

namespace ribbon {

enum class BlockKind {
  VertexSphere,   // S(v): sphere with deg(v) unit cuffs
  EdgePants,      // P_x: cuffs (1, 1, 2x)
  RibbonSurface,  // bordered surface carrying the graph as a spine, one boundary per walk
  CapPants,       // Y-piece closing three boundaries
  CapTorus,       // one-holed torus
  CapSurface,     // genus-g' surface replacing a pants or torus cap
};

const char* to_string(BlockKind kind);
std::optional<BlockKind> block_kind_from_string(std::string_view name);

// Either a length in the hyperbolic metric or a reference to a boundary walk
// whose geodesic length is not computed.
struct BoundaryLength {
  std::optional<double> value;
  std::string symbol;

  static BoundaryLength numeric(double v) { return {v, {}}; }
  static BoundaryLength symbolic(std::string s) { return {std::nullopt, std::move(s)}; }
  bool is_symbolic() const { return !value.has_value(); }
};

struct BlockBoundary {
  std::string label;
  BoundaryLength length;
};

struct Block {
  std::string id;
  BlockKind kind = BlockKind::VertexSphere;
  std::size_t genus = 0;
  std::vector<BlockBoundary> boundaries;

  // vertex_sphere
  std::optional<VertexId> vertex;
  std::optional<double> foot;
  // edge_pants
  std::optional<EdgeId> edge;
  std::optional<double> waist;
  std::optional<double> clearance;
  // ribbon_surface: walk i bounds boundary i
  std::vector<std::vector<Dart>> walks;

  long euler_characteristic() const {
    return 2 - 2 * static_cast<long>(genus) - static_cast<long>(boundaries.size());
  }
};

struct BoundaryRef {
  std::string block;
  std::string label;
  friend bool operator==(const BoundaryRef&, const BoundaryRef&) = default;
};

struct Gluing {
  BoundaryRef a;
  BoundaryRef b;
  double twist = 0.0;
};

enum class Construction { Naive, Sigma, SigmaTarget };
const char* to_string(Construction c);

struct SchemaSummary {
  std::size_t genus = 0;
  std::size_t boundary_count = 0;
  bool minimal = false;
  Construction construction = Construction::Naive;
  std::optional<std::size_t> target_genus;
};

// A closed or bordered surface assembled from blocks and gluings, together with
// the (smoothed) graph it carries and the rescaling that makes it geometric.
struct SurfaceSchema {
  MetricGraph graph;
  std::optional<RotationSystem> rotation;
  ScaleParams scale;
  std::vector<Block> blocks;
  std::vector<Gluing> gluings;
  SchemaSummary summary;

  const Block* find_block(std::string_view id) const;
};

// Genus |E| + beta(G): one sphere per vertex, one pants per edge glued along
// its unit cuffs (sphere cuffs in file order), one torus cap per free waist.
SurfaceSchema naive_embedding(const MetricGraph& g, double margin = kDefaultMargin);
// Same, with sphere cuffs ordered by `r`; the genus does not depend on it.
SurfaceSchema naive_embedding(const MetricGraph& g, const RotationSystem& r, double margin = kDefaultMargin);

// Bordered surface realising the rotation: genus and boundary count satisfy
// 2 - 2g - b = chi(G) with b the number of boundary walks, each boundary
// labelled w<i> with symbolic length sym:w<i>.
SurfaceSchema assemble_sigma_surface(const MetricGraph& g, const RotationSystem& r, double margin = kDefaultMargin);

// Closes a bordered schema with q pants caps (three boundaries each, in label
// order) followed by r torus caps, b = 3q + r.
SurfaceSchema cap_standard(const SurfaceSchema& bordered);

// Standard capping, then one cap is replaced so that the closed genus equals
// `target_genus`. Throws Error(InfeasibleTarget) below the standard genus.
SurfaceSchema cap_target_genus(const SurfaceSchema& bordered, std::size_t target_genus);

enum class Severity { Note, Error };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
};

std::vector<Diagnostic> verify_schema(const SurfaceSchema& schema);
bool is_clean(const std::vector<Diagnostic>& diagnostics);

}  // namespace ribbon

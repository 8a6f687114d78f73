#include "ribbon/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ribbon {

namespace {

const double kCosh2Half = std::cosh(0.5) * std::cosh(0.5);
const double kSinh2Half = std::sinh(0.5) * std::sinh(0.5);

}  // namespace

double waist_distance(double x) {
  if (!(x > 0.0)) throw std::domain_error("waist_distance: x must be positive");
  return std::acosh((kCosh2Half + std::cosh(x)) / kSinh2Half);
}

double min_waist_distance() {
  static const double value = std::acosh((kCosh2Half + 1.0) / kSinh2Half);
  return value;
}

double waist_from_distance(double distance) {
  const double fmin = min_waist_distance();
  if (!(distance > fmin)) {
    throw std::domain_error("waist_from_distance: distance must exceed f_min");
  }
  // cosh x - 1 = sinh^2(1/2) (cosh L - cosh f_min), written as a product of sinh
  // terms so that L close to f_min keeps full relative precision.
  const double u = kSinh2Half * 2.0 * std::sinh(0.5 * (distance + fmin)) * std::sinh(0.5 * (distance - fmin));
  return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

double foot_length(std::size_t degree) {
  if (degree < 3) throw std::domain_error("foot_length: degree must be at least 3");
  const double coth_quarter = 1.0 / std::tanh(0.25);
  const double coth_angle = 1.0 / std::tanh(std::numbers::pi / static_cast<double>(degree));
  return std::asinh(coth_quarter * coth_angle);
}

double edge_clearance(const MetricGraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  return foot_length(g.degree(edge.tail)) + foot_length(g.degree(edge.head));
}

ScaleParams choose_scale(const MetricGraph& g, double margin) {
  if (!(margin > 0.0)) throw std::domain_error("choose_scale: margin must be positive");
  ScaleParams p;
  p.margin = margin;
  p.f_min = min_waist_distance();
  p.foot.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) p.foot[v] = foot_length(g.degree(v));
  p.clearance.resize(g.edge_count());
  double t = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    p.clearance[e] = p.foot[edge.tail] + p.foot[edge.head];
    t = std::max(t, (p.clearance[e] + p.f_min + margin) / edge.length);
  }
  p.t = t;
  p.waist.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    // t d(e) - l(e) >= f_min + margin up to rounding; the max() keeps the binding edge in range.
    double available = std::max(t * g.length(e) - p.clearance[e], p.f_min + margin);
    p.waist[e] = waist_from_distance(available);
  }
  return p;
}

}  // namespace ribbon

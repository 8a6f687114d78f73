#pragma once

#include <cstddef>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

// Pants P_x with boundary lengths (1, 1, 2x): distance between the two unit cuffs,
//   f(x) = acosh((cosh^2(1/2) + cosh x) / sinh^2(1/2)).
// Continuous and strictly increasing on (0, inf). Throws std::domain_error for x <= 0.
double waist_distance(double x);

// inf f = f(0+) = acosh((cosh^2(1/2) + 1) / sinh^2(1/2)) ~ 2.8136582.
double min_waist_distance();

// Inverse of waist_distance on (min_waist_distance(), inf).
double waist_from_distance(double distance);

// Length of the orthogeodesic from the centre of the deg-holed sphere S(v) to a
// cuff: asinh(coth(1/4) coth(pi/deg)). Requires deg >= 3.
double foot_length(std::size_t degree);

// Sum of the foot lengths at the two ends of e (twice the foot for a loop).
double edge_clearance(const MetricGraph& g, EdgeId e);

inline constexpr double kDefaultMargin = 0.1;

struct ScaleParams {
  double t = 1.0;
  double margin = kDefaultMargin;
  double f_min = 0.0;
  std::vector<double> foot;       // per vertex
  std::vector<double> clearance;  // per edge
  std::vector<double> waist;      // per edge: f(waist) = t d(e) - clearance(e)
};

// Smallest t with t d(e) >= clearance(e) + f_min + margin on every edge.
ScaleParams choose_scale(const MetricGraph& g, double margin = kDefaultMargin);

}  // namespace ribbon

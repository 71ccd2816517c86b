#pragma once

#include <string>

#include "disciso/planar_map.hpp"

namespace disciso {

struct RenderResult {
  std::string svg;
  int crossings = 0;  // straight-line segment crossings found by the scan
};

// Straight-line drawing: boundary on a regular n-gon, interior vertices at
// the average of their neighbors (pure fan when V = n), faces tinted by
// stripping depth when tint_layers is set.  Deterministic for fixed input.
RenderResult render_svg(const DiscTriangulation& t, bool tint_layers = true,
                        int canvas = 720);

}  // namespace disciso

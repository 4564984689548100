#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spiralkit/covering_geometry.hpp"

namespace spiralkit::cli {

struct StyledCurve {
  PolyLine curve;
  std::string color;
  std::string label;
  bool dashed = false;
};

struct Scene {
  std::vector<StyledCurve> curves;    // define the viewport
  std::vector<StyledCurve> overlays;  // drawn but clipped to the viewport (spirals)
  std::optional<Disk> disk;
};

/// Fixed 1024x1024 canvas, square viewport over the curve and disk bounding
/// boxes with a 5% margin. Output depends only on the scene.
std::string render_svg(const Scene& scene);

/// Two columns re,im with 12 significant digits.
std::string polyline_csv(const PolyLine& poly);

std::string format_number(double value);

}  // namespace spiralkit::cli

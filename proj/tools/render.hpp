#pragma once

// Schematic SVG rendering of the configuration: triangle, circumcircle,
// Brocard circle, axis g, the eleven points, the basic Apollonius circles
// and the symmedians. Output bytes are deterministic for fixed input.

#include <set>
#include <string>

#include "pedal/geometry.hpp"

namespace pedal::app {

enum class Layer {
  Triangle,
  Circumcircle,
  BrocardCircle,
  Axis,
  InteriorPoints,
  ExteriorPoints,
  Apollonius,
  Symmedians,
};

/// Parses a comma-free single token ("triangle", "brocard-circle", ...);
/// throws InvalidInput on unknown names.
Layer parse_layer(const std::string& name);

std::set<Layer> all_layers();

std::string render_svg(const Triangle& tri, const std::set<Layer>& layers,
                       const ToleranceConfig& tol = {});

}  // namespace pedal::app

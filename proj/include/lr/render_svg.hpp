#pragma once

#include "lr/honeycomb.hpp"
#include "lr/honeycomb_flow.hpp"

#include <string>

namespace lr {

// Deterministic SVG 1.1 drawing of a honeycomb under the fixed embedding
// p(x, y) = x*(0,1) + y*(-sqrt(3)/2, -1/2), flipped to SVG's y-down axis.
// Multiplicity shows as parallel offset strokes; rays are clipped just past
// the outermost vertex.  With a flow, every unit's route is drawn on top,
// colored by its label (mu ribbons in a common dark stroke).
std::string render_svg(const Honeycomb& h, const HoneycombFlow* flow = nullptr);

inline std::string render_svg(const HoneycombFlow& fl) {
  return render_svg(fl.carrier, &fl);
}

}  // namespace lr

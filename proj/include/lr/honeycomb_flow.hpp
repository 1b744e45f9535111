#pragma once

#include "lr/honeycomb.hpp"
#include "lr/summation.hpp"

#include <array>
#include <map>
#include <vector>

namespace lr {

// One straight stretch of a unit's journey, in travel order: mu pieces run
// downward (t is y, decreasing), nu and lambda pieces run rightward (t is x,
// increasing).  Ray ends use the +-infinity sentinels.
struct RoutePiece {
  EdgeClass cls = EdgeClass::Mu;
  Int c = 0;
  Int t_from = 0, t_to = 0;
  auto operator<=>(const RoutePiece&) const = default;
};

// A moving part of the flow: the mu ribbon of one row, or content boxes of
// one label bound for one row.  Overlay flows split content one box per unit
// and remember the grid cell so a trace can address them; mu ribbons keep a
// bulk amount.
struct FlowUnit {
  bool is_mu = false;
  int row = 0;    // mu: its row; content: the row its boxes land in
  Int label = 0;  // content label; 0 for mu ribbons
  Int amount = 0;
  int cell_r = 0, cell_c = 0;  // content units of an overlay flow; else 0
  std::vector<RoutePiece> route;
};

struct HoneycombFlow {
  Honeycomb carrier;
  std::vector<FlowUnit> units;
};

// Canonical flow of one filling on its own honeycomb: each row ribbon enters
// on its mu ray and leaves on its lambda ray; each content label climbs its
// nu spine and diverts onto row paths at the junctions.
HoneycombFlow honeycomb_flow(const LRFilling& f);

// The two canonical flows side by side on the overlay honeycomb, with rows
// and labels renamed by the merge; the starting point for trace replay.
HoneycombFlow overlay_flow(const LRFilling& f1, const LRFilling& f2);

// Loads per atomic piece of the carrier, keyed by content label, or -row for
// mu ribbons.  Throws std::invalid_argument if a route leaves the carrier.
std::map<Atom, std::map<Int, Int>> atom_loads(const HoneycombFlow& fl);

// Every atomic piece must carry a total equal to its line constant times its
// multiplicity, and every route must stay on the carrier and be a connected
// monotone staircase.
ValidationReport check_honeycomb_flow(const HoneycombFlow& fl);

// Same drawing (as in honeycombs_equal) and identical per-atom label loads.
bool honeycomb_flows_equal(const HoneycombFlow& a, const HoneycombFlow& b);

// A transverse crossing of two unit routes away from their piece ends, with
// one route running lambda: against a nu run it marks a word-type defect
// (Type1), against a mu run a switching/column defect (Type2).  Results are
// ordered top to bottom, east to west in the drawing plane and deduplicated
// per location and kind.
struct Crossing {
  enum Kind { Type1 = 1, Type2 = 2 };
  Kind kind = Type1;
  HoneyPoint at;
  std::array<Int, 2> labels{0, 0};  // lambda-side first; -row for mu ribbons
  auto operator<=>(const Crossing&) const = default;
};
std::vector<Crossing> detect_noncanonical(const HoneycombFlow& fl);

// Applies a summation trace to an overlay flow.  Each swapped cell pair
// exchanges route tails at a crossing of the two units' routes; mu switches
// trade the two row ribbons and reroute the displaced boxes.  Replaying the
// full trace of sum_fillings turns the overlay flow into the canonical flow
// of the sum.
HoneycombFlow replay_trace_on_flow(const HoneycombFlow& fl,
                                   const StepTrace& trace);

}  // namespace lr

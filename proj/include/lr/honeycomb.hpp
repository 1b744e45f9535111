#pragma once

#include "lr/dual_flow.hpp"

#include <limits>
#include <map>

namespace lr {

// Sentinels for unbounded ray ends; never used in arithmetic.
constexpr Int kPosInf = std::numeric_limits<Int>::max() / 4;
constexpr Int kNegInf = -kPosInf;

// A point of the plane x + y = z, stored as (x, y).
struct HoneyPoint {
  Int x = 0, y = 0;
  Int z() const { return x + y; }
  auto operator<=>(const HoneyPoint&) const = default;
};

// Straight piece of a honeycomb.  Segment lines come in three families:
// mu {x = c}, nu {y = c}, lambda {x + y = c}; the constant c is the capacity.
// Rays keep only their origin; the outward direction is fixed per class:
// mu towards +y, nu towards -x, lambda towards (+1,-1).
struct HoneySegment {
  EdgeClass cls = EdgeClass::Mu;
  HoneyPoint a, b;   // rays use only a
  bool is_ray = false;
  Int mult = 1;
  Int line_constant() const;
};

struct Honeycomb {
  std::vector<HoneyPoint> vertices;   // one per dual-graph face, multiplicity kept
  std::vector<HoneySegment> segments; // positive-length pieces and rays only
};

// Coordinates of a dual face: (mu-class capacity, nu-class capacity) of its
// incident edges.
HoneyPoint face_point(const LRFilling& f, const FaceRef& face);

Honeycomb honeycomb_from_filling(const LRFilling& f);

// Sorted boundary-ray constants per class; throws if they fail to form
// partitions.
HiveType honeycomb_type(const Honeycomb& h);

// Plain multiset union; no interaction between the two diagrams.
Honeycomb overlay(const Honeycomb& h1, const Honeycomb& h2);

// Maximal piece of one line in the subdivided arrangement.  The parameter t
// is y on mu lines and x on nu and lambda lines; lo/hi may be +-infinity.
struct Atom {
  EdgeClass cls = EdgeClass::Mu;
  Int c = 0;
  Int lo = 0, hi = 0;
  auto operator<=>(const Atom&) const = default;
};

// Canonical subdivision of the drawing: each line is cut exactly where its
// coverage multiplicity changes or where a piece of another family meets it.
// The result depends only on the union of the pieces (with multiplicity),
// not on how segments were split when the honeycomb was assembled.
std::map<Atom, Int> atomize(const Honeycomb& h);

bool honeycombs_equal(const Honeycomb& h1, const Honeycomb& h2);

std::string to_string(const Atom& a);

}  // namespace lr

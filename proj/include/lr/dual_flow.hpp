#pragma once

#include "lr/hive.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lr {

// Direction class of a dual-graph edge, by the hive edge it crosses:
// Mu crosses a left-leaning edge, Nu a horizontal edge, Lambda a right-leaning
// edge.
enum class EdgeClass { Mu, Nu, Lambda };
std::string to_string(EdgeClass c);

// Faces of the hive graph = vertices of the dual graph.
//   Up(p,q)   = triangle {(p-1,q), (p,q), (p,q+1)},   1 <= p <= r, 0 <= q <= p-1
//   Down(p,q) = triangle {(p-1,q), (p-1,q+1), (p,q+1)}, 1 <= p <= r, 0 <= q <= p-2
struct FaceRef {
  bool up = true;
  int p = 0, q = 0;
  auto operator<=>(const FaceRef&) const = default;
  std::string name() const;  // "U(p,q)" / "D(p,q)"
};

// Every edge is incident to exactly one upward face; (p, q) names it.
// Directed along the flow:
//   Mu(p,q):     Down(p,q-1) -> Up(p,q)   (left stub when q = 0)
//   Nu(p,q):     Down(p+1,q) -> Up(p,q)   (bottom stub when p = r)
//   Lambda(p,q): Up(p,q) -> Down(p,q)     (right stub when q = p-1)
struct EdgeKey {
  EdgeClass cls = EdgeClass::Mu;
  int p = 0, q = 0;
  auto operator<=>(const EdgeKey&) const = default;
  std::string name() const;  // "mu(p,q)" etc.
};

struct DualEdge {
  EdgeKey key;
  Int capacity = 0;
  std::optional<FaceRef> from, to;  // absent endpoint = boundary stub
  std::string endpoint_a() const;   // face name or stub name
  std::string endpoint_b() const;
};

struct WeightedDualGraph {
  int r = 0;
  Hive hive;
  std::vector<DualEdge> edges;  // p ascending, q ascending, class mu/nu/lambda

  Int capacity(const EdgeKey& k) const;
  const DualEdge& edge(const EdgeKey& k) const;
  std::vector<FaceRef> faces() const;  // all r^2 faces, up before down per (p,q)
};

// Capacities are the differences of the hive entries on either side of the
// crossed hive edge.  Requires a valid hive.
WeightedDualGraph build_dual_graph(const Hive& H);

// A unit of flow is owned by a strand: the mu ribbon of a row, or a content
// label.
struct Strand {
  enum Kind { MuStrand = 0, Content = 1 };
  Kind kind = MuStrand;
  int index = 0;
  auto operator<=>(const Strand&) const = default;
  std::string name() const;  // "mu3" / "c2"
};
inline Strand mu_strand(int p) { return {Strand::MuStrand, p}; }
inline Strand content(int c) { return {Strand::Content, c}; }

struct Flow {
  // Zero rows at the bottom carry no load, so the size is explicit.
  int r = 0;
  // Sparse: absent edge or absent strand means zero.
  std::map<EdgeKey, std::map<Strand, Int>> loads;

  Int amount(const EdgeKey& e, const Strand& s) const;
  Int total(const EdgeKey& e) const;
  void add(const EdgeKey& e, const Strand& s, Int amt);  // drops zero entries
};

// MuStrand(p) runs the length of row p's path carrying mu_p; Content(c) enters
// the bottom stub of spine c with nu_c, climbs the spine, and diverts k_{cp}
// onto the row-p path at the junction Down(p, c-1).  Saturates every edge.
Flow canonical_flow(const LRFilling& f);

// ok iff: all loads sit on edges of g with allowed strands (mu paths may carry
// their row's mu strand and already-diverted contents; spine edges only their
// own content), every edge is saturated, and every face conserves each strand.
ValidationReport check_flow(const WeightedDualGraph& g, const Flow& fl);

// Reads mu from the left stubs and k from the lambda stubs, verifies the flow
// is canonical for that filling (throws std::invalid_argument otherwise, with
// the violations), and cross-checks the junction diversions.
LRFilling flow_to_filling(const Flow& fl);

}  // namespace lr

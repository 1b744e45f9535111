#include "lr/dual_flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace lr {

std::string to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Mu: return "mu";
    case EdgeClass::Nu: return "nu";
    case EdgeClass::Lambda: return "lambda";
  }
  return "?";
}

std::string FaceRef::name() const {
  return std::string(up ? "U(" : "D(") + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string EdgeKey::name() const {
  return to_string(cls) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string Strand::name() const {
  return (kind == MuStrand ? "mu" : "c") + std::to_string(index);
}

namespace {

std::string stub_name(const EdgeKey& k) {
  switch (k.cls) {
    case EdgeClass::Mu: return "mu_stub(" + std::to_string(k.p) + ")";
    case EdgeClass::Nu: return "nu_stub(" + std::to_string(k.q + 1) + ")";
    case EdgeClass::Lambda: return "lambda_stub(" + std::to_string(k.p) + ")";
  }
  return "?";
}

}  // namespace

std::string DualEdge::endpoint_a() const { return from ? from->name() : stub_name(key); }
std::string DualEdge::endpoint_b() const { return to ? to->name() : stub_name(key); }

Int WeightedDualGraph::capacity(const EdgeKey& k) const { return edge(k).capacity; }

const DualEdge& WeightedDualGraph::edge(const EdgeKey& k) const {
  for (const auto& e : edges)
    if (e.key == k) return e;
  throw std::invalid_argument("no dual edge " + k.name());
}

std::vector<FaceRef> WeightedDualGraph::faces() const {
  std::vector<FaceRef> out;
  for (int p = 1; p <= r; ++p)
    for (int q = 0; q <= p - 1; ++q) {
      out.push_back({true, p, q});
      if (q <= p - 2) out.push_back({false, p, q});
    }
  return out;
}

WeightedDualGraph build_dual_graph(const Hive& H) {
  const auto rep = validate_hive(H);
  if (!rep.ok)
    throw std::invalid_argument("build_dual_graph requires a valid hive: " + rep.joined());
  WeightedDualGraph g;
  g.r = H.side();
  g.hive = H;
  auto diff = [&](Int a, Int b) { return a >= b ? a - b : b - a; };
  for (int p = 1; p <= g.r; ++p)
    for (int q = 0; q <= p - 1; ++q) {
      DualEdge mu;
      mu.key = {EdgeClass::Mu, p, q};
      mu.capacity = diff(H.H(p, q), H.H(p - 1, q));
      if (q >= 1) mu.from = FaceRef{false, p, q - 1};
      mu.to = FaceRef{true, p, q};
      g.edges.push_back(mu);

      DualEdge nu;
      nu.key = {EdgeClass::Nu, p, q};
      nu.capacity = diff(H.H(p, q + 1), H.H(p, q));
      if (p < g.r) nu.from = FaceRef{false, p + 1, q};
      nu.to = FaceRef{true, p, q};
      g.edges.push_back(nu);

      DualEdge la;
      la.key = {EdgeClass::Lambda, p, q};
      la.capacity = diff(H.H(p, q + 1), H.H(p - 1, q));
      la.from = FaceRef{true, p, q};
      if (q <= p - 2) la.to = FaceRef{false, p, q};
      g.edges.push_back(la);
    }
  return g;
}

Int Flow::amount(const EdgeKey& e, const Strand& s) const {
  auto it = loads.find(e);
  if (it == loads.end()) return 0;
  auto jt = it->second.find(s);
  return jt == it->second.end() ? 0 : jt->second;
}

Int Flow::total(const EdgeKey& e) const {
  auto it = loads.find(e);
  if (it == loads.end()) return 0;
  Int t = 0;
  for (const auto& [s, a] : it->second) t += a;
  return t;
}

void Flow::add(const EdgeKey& e, const Strand& s, Int amt) {
  if (amt == 0) return;
  Int& slot = loads[e][s];
  slot += amt;
  if (slot == 0) {
    loads[e].erase(s);
    if (loads[e].empty()) loads.erase(e);
  }
}

Flow canonical_flow(const LRFilling& f) {
  const auto rep = validate_lr(f);
  if (!rep.ok)
    throw std::invalid_argument("canonical_flow requires a valid filling: " + rep.joined());
  const int r = f.rows();
  Flow fl;
  fl.r = r;
  auto spine_amount = [&](int c, int p) {  // units of content c still on the spine at row p
    Int a = 0;
    for (int s = c; s <= p; ++s) a += f.K(c, s);
    return a;
  };
  for (int p = 1; p <= r; ++p)
    for (int q = 0; q <= p - 1; ++q) {
      const EdgeKey mu{EdgeClass::Mu, p, q};
      fl.add(mu, mu_strand(p), f.mu.part(p));
      for (int c = 1; c <= q; ++c) fl.add(mu, content(c), f.K(c, p));

      const EdgeKey nu{EdgeClass::Nu, p, q};
      fl.add(nu, content(q + 1), spine_amount(q + 1, p));

      const EdgeKey la{EdgeClass::Lambda, p, q};
      fl.add(la, mu_strand(p), f.mu.part(p));
      for (int c = 1; c <= q; ++c) fl.add(la, content(c), f.K(c, p));
      fl.add(la, content(q + 1), spine_amount(q + 1, p));
    }
  return fl;
}

ValidationReport check_flow(const WeightedDualGraph& g, const Flow& fl) {
  ValidationReport rep;
  // Every load must sit on a real edge.
  for (const auto& [key, strands] : fl.loads) {
    const bool known = std::any_of(g.edges.begin(), g.edges.end(),
                                   [&](const DualEdge& e) { return e.key == key; });
    if (!known) rep.fail("load on unknown edge " + key.name());
    for (const auto& [s, amt] : strands)
      if (amt < 0) rep.fail("negative amount of " + s.name() + " on " + key.name());
  }
  // Saturation and allowed strands.
  for (const auto& e : g.edges) {
    const Int t = fl.total(e.key);
    if (t != e.capacity)
      rep.fail("edge " + e.key.name() + ": total " + std::to_string(t) +
               " != capacity " + std::to_string(e.capacity));
    auto it = fl.loads.find(e.key);
    if (it == fl.loads.end()) continue;
    for (const auto& [s, amt] : it->second) {
      bool allowed = false;
      switch (e.key.cls) {
        case EdgeClass::Mu:
          allowed = (s.kind == Strand::MuStrand && s.index == e.key.p) ||
                    (s.kind == Strand::Content && s.index <= e.key.q);
          break;
        case EdgeClass::Nu:
          allowed = s.kind == Strand::Content && s.index == e.key.q + 1;
          break;
        case EdgeClass::Lambda:
          allowed = (s.kind == Strand::MuStrand && s.index == e.key.p) ||
                    (s.kind == Strand::Content && s.index <= e.key.q + 1);
          break;
      }
      if (!allowed)
        rep.fail("edge " + e.key.name() + ": strand " + s.name() + " not allowed here");
    }
  }
  // Per-strand conservation at every face.
  auto gather = [&](std::initializer_list<EdgeKey> keys) {
    std::map<Strand, Int> m;
    for (const auto& k : keys) {
      auto it = fl.loads.find(k);
      if (it == fl.loads.end()) continue;
      for (const auto& [s, amt] : it->second) m[s] += amt;
    }
    return m;
  };
  auto compare = [&](const FaceRef& face, const std::map<Strand, Int>& in,
                     const std::map<Strand, Int>& out) {
    std::map<Strand, Int> all = in;
    for (const auto& [s, amt] : out) all.try_emplace(s, 0);
    for (const auto& kv : all) {
      const Strand& s = kv.first;
      const Int i = in.count(s) ? in.at(s) : 0;
      const Int o = out.count(s) ? out.at(s) : 0;
      if (i != o)
        rep.fail("vertex " + face.name() + ": strand " + s.name() + " in " +
                 std::to_string(i) + " != out " + std::to_string(o));
    }
  };
  for (int p = 1; p <= g.r; ++p)
    for (int q = 0; q <= p - 1; ++q) {
      compare({true, p, q},
              gather({{EdgeClass::Mu, p, q}, {EdgeClass::Nu, p, q}}),
              gather({{EdgeClass::Lambda, p, q}}));
      if (q <= p - 2)
        compare({false, p, q},
                gather({{EdgeClass::Lambda, p, q}}),
                gather({{EdgeClass::Mu, p, q + 1}, {EdgeClass::Nu, p - 1, q}}));
    }
  return rep;
}

LRFilling flow_to_filling(const Flow& fl) {
  int r = fl.r;
  for (const auto& [key, strands] : fl.loads) r = std::max(r, key.p);
  std::vector<Int> mu(r), nu(r);
  std::vector<std::vector<Int>> k(r);
  for (int p = 1; p <= r; ++p) {
    mu[p - 1] = fl.amount({EdgeClass::Mu, p, 0}, mu_strand(p));
    k[p - 1].assign(p, 0);
    for (int c = 1; c <= p; ++c)
      k[p - 1][c - 1] = fl.amount({EdgeClass::Lambda, p, p - 1}, content(c));
  }
  for (int c = 1; c <= r; ++c)
    nu[c - 1] = fl.amount(EdgeKey{EdgeClass::Nu, r, c - 1}, content(c));
  std::vector<Int> lambda(r);
  for (int p = 1; p <= r; ++p) {
    lambda[p - 1] = mu[p - 1];
    for (int c = 1; c <= p; ++c) lambda[p - 1] += k[p - 1][c - 1];
  }
  LRFilling f(Partition(mu), Partition(nu), Partition(lambda), std::move(k));
  const auto g = build_dual_graph(hive_from_filling(f));
  const auto rep = check_flow(g, fl);
  if (!rep.ok)
    throw std::invalid_argument("flow is not canonical: " + rep.joined());
  // Junction cross-check: the amount of content c joining row p equals k_{cp}.
  for (int p = 1; p <= r; ++p)
    for (int c = 1; c < p; ++c)
      if (fl.amount({EdgeClass::Mu, p, c}, content(c)) != f.K(c, p))
        throw std::logic_error("junction (" + std::to_string(c) + "," + std::to_string(p) +
                               ") diverts a different amount than the lambda stub reports");
  return f;
}

}  // namespace lr

#include "lr/honeycomb_flow.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lr {
namespace {

// Line constants of the drawing, straight from the filling: cap_C(q, p) is
// the mu-class constant after the first q labels of row p, spine_A(c, p) the
// nu-class constant of label c's spine while rows <= p still await boxes.
Int cap_C(const LRFilling& f, int q, int p) {
  Int v = f.mu.part(p);
  for (int i = 1; i <= q; ++i) v += f.K(i, p);
  return v;
}

Int spine_A(const LRFilling& f, int c, int p) {
  Int v = 0;
  for (int s = c; s <= p; ++s) v += f.K(c, s);
  return v;
}

// Appends a piece, dropping zero length and merging a continuation of the
// same line so routes stay maximal runs.
void push_piece(std::vector<RoutePiece>& v, EdgeClass cls, Int c, Int a, Int b) {
  if (a == b) return;
  if (!v.empty() && v.back().cls == cls && v.back().c == c && v.back().t_to == a) {
    v.back().t_to = b;
    return;
  }
  v.push_back({cls, c, a, b});
}

void append_route(std::vector<RoutePiece>& v, const std::vector<RoutePiece>& r) {
  for (const RoutePiece& p : r) push_piece(v, p.cls, p.c, p.t_from, p.t_to);
}

// Row p's ribbon: down the mu ray, then lambda and mu pieces alternating
// along the row's faces, out on the lambda ray.
std::vector<RoutePiece> row_route(const LRFilling& f, int p) {
  std::vector<RoutePiece> r;
  push_piece(r, EdgeClass::Mu, cap_C(f, 0, p), kPosInf, spine_A(f, 1, p));
  for (int q = 0; q < p; ++q) {
    Int x0 = cap_C(f, q, p);
    push_piece(r, EdgeClass::Lambda, x0 + spine_A(f, q + 1, p), x0,
               q == p - 1 ? kPosInf : cap_C(f, q + 1, p));
    if (q < p - 1)
      push_piece(r, EdgeClass::Mu, cap_C(f, q + 1, p), spine_A(f, q + 1, p - 1),
                 spine_A(f, q + 2, p));
  }
  return r;
}

// Label c's boxes bound for row p: in from the far left along the spine,
// climbing row by row, then (for p > c) diverted onto row p's path, whose
// pieces it shares from column c on.
std::vector<RoutePiece> content_route(const LRFilling& f, int c, int p) {
  std::vector<RoutePiece> r;
  const int n = f.rows();
  for (int pp = n; pp >= p; --pp) {
    push_piece(r, EdgeClass::Nu, spine_A(f, c, pp),
               pp == n ? kNegInf : cap_C(f, c, pp + 1), cap_C(f, c - 1, pp));
    push_piece(r, EdgeClass::Lambda, cap_C(f, c - 1, pp) + spine_A(f, c, pp),
               cap_C(f, c - 1, pp), pp == c ? kPosInf : cap_C(f, c, pp));
  }
  for (int q = c; q < p; ++q) {
    push_piece(r, EdgeClass::Mu, cap_C(f, q, p), spine_A(f, q, p - 1),
               spine_A(f, q + 1, p));
    push_piece(r, EdgeClass::Lambda, cap_C(f, q, p) + spine_A(f, q + 1, p),
               cap_C(f, q, p), q == p - 1 ? kPosInf : cap_C(f, q + 1, p));
  }
  return r;
}

void require_valid(const LRFilling& f, const char* who) {
  ValidationReport rep = validate_lr(f);
  if (!rep.ok)
    throw std::invalid_argument(std::string(who) + ": " + rep.joined());
}

HoneyPoint point_at(const RoutePiece& p, Int t) {
  switch (p.cls) {
    case EdgeClass::Mu: return {p.c, t};
    case EdgeClass::Nu: return {t, p.c};
    default: return {t, p.c - t};
  }
}

Int param_of(const RoutePiece& p, const HoneyPoint& pt) {
  return p.cls == EdgeClass::Mu ? pt.y : pt.x;
}

bool on_line(const RoutePiece& p, const HoneyPoint& pt) {
  switch (p.cls) {
    case EdgeClass::Mu: return pt.x == p.c;
    case EdgeClass::Nu: return pt.y == p.c;
    default: return pt.z() == p.c;
  }
}

bool on_piece(const RoutePiece& p, const HoneyPoint& pt, bool strict) {
  if (!on_line(p, pt)) return false;
  Int t = param_of(p, pt);
  Int lo = std::min(p.t_from, p.t_to), hi = std::max(p.t_from, p.t_to);
  return strict ? lo < t && t < hi : lo <= t && t <= hi;
}

// Meeting point of the two support lines (distinct classes only).
HoneyPoint line_meet(const RoutePiece& a, const RoutePiece& b) {
  if (a.cls == EdgeClass::Mu && b.cls == EdgeClass::Nu) return {a.c, b.c};
  if (a.cls == EdgeClass::Nu && b.cls == EdgeClass::Mu) return {b.c, a.c};
  if (a.cls == EdgeClass::Mu && b.cls == EdgeClass::Lambda) return {a.c, b.c - a.c};
  if (a.cls == EdgeClass::Lambda && b.cls == EdgeClass::Mu) return {b.c, a.c - b.c};
  if (a.cls == EdgeClass::Nu && b.cls == EdgeClass::Lambda) return {b.c - a.c, a.c};
  return {a.c - b.c, b.c};  // lambda x nu
}

struct SplitRoute {
  std::vector<RoutePiece> head, tail;
};

SplitRoute split_route(const std::vector<RoutePiece>& r, const HoneyPoint& pt) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!on_piece(r[i], pt, false)) continue;
    SplitRoute s;
    for (std::size_t j = 0; j < i; ++j)
      push_piece(s.head, r[j].cls, r[j].c, r[j].t_from, r[j].t_to);
    Int t = param_of(r[i], pt);
    push_piece(s.head, r[i].cls, r[i].c, r[i].t_from, t);
    push_piece(s.tail, r[i].cls, r[i].c, t, r[i].t_to);
    for (std::size_t j = i + 1; j < r.size(); ++j)
      push_piece(s.tail, r[j].cls, r[j].c, r[j].t_from, r[j].t_to);
    return s;
  }
  throw std::invalid_argument("swap point lies on neither route");
}

// The point where the tails of two routes trade places: preferably a
// transverse crossing with u running pref_u and v running pref_v away from
// piece ends, otherwise the first point of v's travel that u also visits.
std::optional<HoneyPoint> choose_crossing(const std::vector<RoutePiece>& ru,
                                          const std::vector<RoutePiece>& rv,
                                          EdgeClass pref_u, EdgeClass pref_v) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const RoutePiece& pv : rv) {
      const bool fwd = pv.t_from < pv.t_to;
      std::optional<Int> best;
      std::optional<HoneyPoint> best_pt;
      auto offer = [&](Int t, const HoneyPoint& pt) {
        Int key = fwd ? t : -t;
        if (!best || key < *best) {
          best = key;
          best_pt = pt;
        }
      };
      for (const RoutePiece& pu : ru) {
        if (pu.cls == pv.cls) {
          if (pass == 0 || pu.c != pv.c) continue;
          Int lo = std::max(std::min(pu.t_from, pu.t_to), std::min(pv.t_from, pv.t_to));
          Int hi = std::min(std::max(pu.t_from, pu.t_to), std::max(pv.t_from, pv.t_to));
          if (lo > hi) continue;
          Int t = fwd ? lo : hi;
          offer(t, point_at(pv, t));
        } else {
          if (pass == 0 && (pu.cls != pref_u || pv.cls != pref_v)) continue;
          HoneyPoint pt = line_meet(pu, pv);
          if (!on_piece(pu, pt, pass == 0) || !on_piece(pv, pt, pass == 0)) continue;
          offer(param_of(pv, pt), pt);
        }
      }
      if (best_pt) return best_pt;
    }
  }
  return std::nullopt;
}

// Both routes grow monotonically along the diagonal x - y, so their shared
// locus is a union of closed diagonal intervals ("runs") with one route
// strictly above the other in every gap.
struct MeetRun {
  Int lo, hi;
  HoneyPoint plo, phi;
};

std::vector<MeetRun> meet_runs(const std::vector<RoutePiece>& ru,
                               const std::vector<RoutePiece>& rv) {
  std::vector<MeetRun> meets;
  for (const RoutePiece& pu : ru)
    for (const RoutePiece& pv : rv) {
      if (pu.cls == pv.cls) {
        if (pu.c != pv.c) continue;
        const Int lo = std::max(std::min(pu.t_from, pu.t_to),
                                std::min(pv.t_from, pv.t_to));
        const Int hi = std::min(std::max(pu.t_from, pu.t_to),
                                std::max(pv.t_from, pv.t_to));
        if (lo > hi) continue;
        const HoneyPoint a = point_at(pv, lo), b = point_at(pv, hi);
        MeetRun m{a.x - a.y, b.x - b.y, a, b};
        if (m.lo > m.hi) {
          std::swap(m.lo, m.hi);
          std::swap(m.plo, m.phi);
        }
        meets.push_back(m);
      } else {
        const HoneyPoint pt = line_meet(pu, pv);
        if (!on_piece(pu, pt, false) || !on_piece(pv, pt, false)) continue;
        meets.push_back({pt.x - pt.y, pt.x - pt.y, pt, pt});
      }
    }
  if (meets.empty()) return meets;
  std::sort(meets.begin(), meets.end(),
            [](const MeetRun& a, const MeetRun& b) { return a.lo < b.lo; });
  std::vector<MeetRun> runs;
  for (const MeetRun& m : meets) {
    if (!runs.empty() && m.lo <= runs.back().hi) {
      if (m.hi > runs.back().hi) {
        runs.back().hi = m.hi;
        runs.back().phi = m.phi;
      }
    } else {
      runs.push_back(m);
    }
  }
  return runs;
}

// Twice x + y at diagonal dd / 2; doubled so gap midpoints stay integral.
std::optional<Int> z2_on(const std::vector<RoutePiece>& r, Int dd) {
  for (const RoutePiece& pc : r) {
    const Int tlo = std::min(pc.t_from, pc.t_to);
    const Int thi = std::max(pc.t_from, pc.t_to);
    Int dlo, dhi;
    switch (pc.cls) {
      case EdgeClass::Mu: dlo = pc.c - thi; dhi = pc.c - tlo; break;
      case EdgeClass::Nu: dlo = tlo - pc.c; dhi = thi - pc.c; break;
      default: dlo = 2 * tlo - pc.c; dhi = 2 * thi - pc.c; break;
    }
    if (dd < 2 * dlo || dd > 2 * dhi) continue;
    switch (pc.cls) {
      case EdgeClass::Mu: return 4 * pc.c - dd;
      case EdgeClass::Nu: return dd + 4 * pc.c;
      default: return 2 * pc.c;
    }
  }
  return std::nullopt;
}

// The first run where the routes change sides -- their first genuine
// crossing, transverse or across a shared stretch.  Corner kisses and runs
// reaching infinity (shared entry or exit rays) keep both strands on their
// own side and do not count.  The crossing is pinned at the run's far end.
const MeetRun* first_flip(const std::vector<MeetRun>& runs,
                          const std::vector<RoutePiece>& ru,
                          const std::vector<RoutePiece>& rv) {
  // Sign of the routes' height difference just outside a run.  The routes
  // are piecewise linear and meet-free across any gap, so one sample does.
  auto rel_at = [&](Int dd) -> int {
    const std::optional<Int> a = z2_on(ru, dd), b = z2_on(rv, dd);
    if (!a || !b || *a == *b) return 0;
    return *a > *b ? 1 : -1;
  };
  for (const MeetRun& m : runs) {
    if (m.lo <= kNegInf / 2 || m.hi >= kPosInf / 2) continue;
    const int before = rel_at(2 * m.lo - 1);
    const int after = rel_at(2 * m.hi + 1);
    if (before && after && before != after) return &m;
  }
  return nullptr;
}

std::optional<HoneyPoint> first_flip_point(const std::vector<RoutePiece>& ru,
                                           const std::vector<RoutePiece>& rv) {
  const std::vector<MeetRun> runs = meet_runs(ru, rv);
  if (const MeetRun* m = first_flip(runs, ru, rv)) return m->phi;
  return std::nullopt;
}

// Where a pairwise box swap trades route tails: at the routes' first genuine
// crossing, after which each box takes over its partner's remaining journey.
// Routes that never cross trade their diverging final tails at the last
// run's far end; if instead they rejoin for the rest of the way the trade is
// a no-op there.  Identical routes have nothing to trade at all.
std::optional<HoneyPoint> choose_swap_point(const std::vector<RoutePiece>& ru,
                                            const std::vector<RoutePiece>& rv) {
  const std::vector<MeetRun> runs = meet_runs(ru, rv);
  if (runs.empty()) return std::nullopt;
  if (const MeetRun* m = first_flip(runs, ru, rv)) return m->phi;
  const MeetRun& last = runs.back();
  if (last.hi < kPosInf / 2) return last.phi;
  if (last.lo > kNegInf / 2) return last.plo;
  return std::nullopt;
}

void tail_swap(FlowUnit& u, FlowUnit& v, const HoneyPoint& pt) {
  SplitRoute su = split_route(u.route, pt);
  SplitRoute sv = split_route(v.route, pt);
  u.route = su.head;
  append_route(u.route, sv.tail);
  v.route = sv.head;
  append_route(v.route, su.tail);
}

bool route_contains(const std::vector<RoutePiece>& r, const HoneyPoint& pt) {
  for (const RoutePiece& p : r)
    if (on_piece(p, pt, false)) return true;
  return false;
}

std::vector<RoutePiece> joined(const std::vector<RoutePiece>& head,
                               const std::vector<RoutePiece>& tail) {
  std::vector<RoutePiece> r = head;
  append_route(r, tail);
  return r;
}

// x + y of the route where it crosses the diagonal x - y = d, if it does.
// x - y grows monotonically along travel, so the value is unique.
std::optional<Int> z_on(const std::vector<RoutePiece>& r, Int d) {
  for (const RoutePiece& pc : r) {
    const Int tlo = std::min(pc.t_from, pc.t_to);
    const Int thi = std::max(pc.t_from, pc.t_to);
    Int dlo, dhi;
    switch (pc.cls) {
      case EdgeClass::Mu: dlo = pc.c - thi; dhi = pc.c - tlo; break;
      case EdgeClass::Nu: dlo = tlo - pc.c; dhi = thi - pc.c; break;
      default: dlo = 2 * tlo - pc.c; dhi = 2 * thi - pc.c; break;
    }
    if (d < dlo || d > dhi) continue;
    switch (pc.cls) {
      case EdgeClass::Mu: return 2 * pc.c - d;
      case EdgeClass::Nu: return d + 2 * pc.c;
      default: return pc.c;
    }
  }
  return std::nullopt;
}

// Which of two non-crossing row paths runs further north-east: at the first
// diagonal where they differ, the one with the bigger x + y.  Entry rays
// reach every diagonal, so they compare by mu constant up front.  Piecewise
// linear in between, so checking the pieces' boundary diagonals is enough.
// Returns +1 when p is the outer path, -1 for q, 0 for identical paths.
int path_order(const std::vector<RoutePiece>& p,
               const std::vector<RoutePiece>& q) {
  if (p.empty() || q.empty()) return 0;
  if (p.front().c != q.front().c) return p.front().c > q.front().c ? 1 : -1;
  std::set<Int> ds;
  auto gather = [&](const std::vector<RoutePiece>& r) {
    for (const RoutePiece& pc : r)
      for (Int t : {pc.t_from, pc.t_to}) {
        if (t >= kPosInf / 2 || t <= kNegInf / 2) continue;
        ds.insert(pc.cls == EdgeClass::Mu   ? pc.c - t
                  : pc.cls == EdgeClass::Nu ? t - pc.c
                                            : 2 * t - pc.c);
      }
  };
  gather(p);
  gather(q);
  for (Int d : ds) {
    const std::optional<Int> zp = z_on(p, d), zq = z_on(q, d);
    if (!zp || !zq || *zp == *zq) continue;
    return *zp > *zq ? 1 : -1;
  }
  return 0;
}

// Earliest point of a's travel that b also visits, piece ends and shared-line
// overlaps included.
std::optional<HoneyPoint> first_common_point(const std::vector<RoutePiece>& a,
                                             const std::vector<RoutePiece>& b) {
  for (const RoutePiece& pa : a) {
    const bool fwd = pa.t_from < pa.t_to;
    std::optional<Int> best;
    for (const RoutePiece& pb : b) {
      std::optional<Int> t;
      if (pb.cls == pa.cls) {
        if (pb.c != pa.c) continue;
        Int lo = std::max(std::min(pa.t_from, pa.t_to), std::min(pb.t_from, pb.t_to));
        Int hi = std::min(std::max(pa.t_from, pa.t_to), std::max(pb.t_from, pb.t_to));
        if (lo > hi) continue;
        t = fwd ? lo : hi;
      } else {
        HoneyPoint pt = line_meet(pa, pb);
        if (!on_piece(pa, pt, false) || !on_piece(pb, pt, false)) continue;
        t = param_of(pa, pt);
      }
      Int key = fwd ? *t : -*t;
      if (!best || key < *best) best = key;
    }
    if (best) return point_at(pa, fwd ? *best : -*best);
  }
  return std::nullopt;
}

Int load_key(const FlowUnit& u) { return u.is_mu ? -Int(u.row) : u.label; }

[[noreturn]] void bad_trace(const std::string& msg) {
  throw std::invalid_argument("trace does not match flow: " + msg);
}

}  // namespace

HoneycombFlow honeycomb_flow(const LRFilling& f) {
  require_valid(f, "honeycomb_flow");
  HoneycombFlow fl;
  fl.carrier = honeycomb_from_filling(f);
  for (int p = 1; p <= f.rows(); ++p) {
    FlowUnit m;
    m.is_mu = true;
    m.row = p;
    m.amount = f.mu.part(p);
    m.route = row_route(f, p);
    fl.units.push_back(std::move(m));
    for (int c = 1; c <= p; ++c) {
      if (f.K(c, p) == 0) continue;
      FlowUnit u;
      u.row = p;
      u.label = c;
      u.amount = f.K(c, p);
      u.route = content_route(f, c, p);
      fl.units.push_back(std::move(u));
    }
  }
  return fl;
}

HoneycombFlow overlay_flow(const LRFilling& f1, const LRFilling& f2) {
  require_valid(f1, "overlay_flow: first filling");
  require_valid(f2, "overlay_flow: second filling");
  const std::vector<RowOrigin> order = merge_order(f1, f2);
  const LabelMap lm = relabel_contents(f1, f2);
  HoneycombFlow fl;
  fl.carrier = overlay(honeycomb_from_filling(f1), honeycomb_from_filling(f2));
  for (int r = 1; r <= int(order.size()); ++r) {
    const RowOrigin& ro = order[r - 1];
    const LRFilling& f = ro.source == 1 ? f1 : f2;
    const std::vector<int>& from = ro.source == 1 ? lm.from1 : lm.from2;
    const int p = ro.row;
    FlowUnit m;
    m.is_mu = true;
    m.row = r;
    m.amount = f.mu.part(p);
    m.route = row_route(f, p);
    fl.units.push_back(std::move(m));
    int col = int(f.mu.part(p));
    for (int c = 1; c <= p; ++c)
      for (Int i = 0; i < f.K(c, p); ++i) {
        FlowUnit u;
        u.row = r;
        u.label = from[c - 1];
        u.amount = 1;
        u.cell_r = r;
        u.cell_c = ++col;
        u.route = content_route(f, c, p);
        fl.units.push_back(std::move(u));
      }
  }
  return fl;
}

std::map<Atom, std::map<Int, Int>> atom_loads(const HoneycombFlow& fl) {
  const std::map<Atom, Int> atoms = atomize(fl.carrier);
  std::map<std::pair<int, Int>, std::vector<Atom>> lines;
  for (const auto& [a, mult] : atoms) lines[{int(a.cls), a.c}].push_back(a);

  std::map<Atom, std::map<Int, Int>> out;
  for (const auto& [a, mult] : atoms) out[a];
  for (const FlowUnit& u : fl.units) {
    if (u.amount == 0) continue;
    const Int key = load_key(u);
    for (const RoutePiece& pc : u.route) {
      Int lo = std::min(pc.t_from, pc.t_to), hi = std::max(pc.t_from, pc.t_to);
      auto it = lines.find({int(pc.cls), pc.c});
      if (it == lines.end())
        throw std::invalid_argument("flow leaves the honeycomb: no line for " +
                                    to_string(Atom{pc.cls, pc.c, lo, hi}));
      Int pos = lo;
      for (const Atom& a : it->second) {
        if (a.hi <= lo || a.lo >= hi) continue;
        if (a.lo != pos || a.hi > hi)
          throw std::invalid_argument(
              "flow piece not tiled by the honeycomb at " + to_string(a));
        out[a][key] += u.amount;
        pos = a.hi;
      }
      if (pos != hi)
        throw std::invalid_argument("flow leaves the honeycomb near " +
                                    to_string(Atom{pc.cls, pc.c, pos, hi}));
    }
  }
  return out;
}

ValidationReport check_honeycomb_flow(const HoneycombFlow& fl) {
  ValidationReport rep;
  for (std::size_t i = 0; i < fl.units.size(); ++i) {
    const FlowUnit& u = fl.units[i];
    std::string who = "unit " + std::to_string(i);
    if (u.route.empty()) {
      rep.fail(who + ": empty route");
      continue;
    }
    for (const RoutePiece& p : u.route) {
      bool down = p.cls == EdgeClass::Mu;
      if (down ? p.t_from <= p.t_to : p.t_from >= p.t_to)
        rep.fail(who + ": piece runs against travel order");
    }
    for (std::size_t j = 0; j + 1 < u.route.size(); ++j) {
      HoneyPoint end = point_at(u.route[j], u.route[j].t_to);
      HoneyPoint start = point_at(u.route[j + 1], u.route[j + 1].t_from);
      if (!(end == start)) {
        rep.fail(who + ": route breaks between pieces " + std::to_string(j) +
                 " and " + std::to_string(j + 1));
        break;
      }
    }
    const RoutePiece& first = u.route.front();
    const RoutePiece& last = u.route.back();
    bool enters = (first.cls == EdgeClass::Mu && first.t_from == kPosInf) ||
                  (first.cls == EdgeClass::Nu && first.t_from == kNegInf);
    if (!enters) rep.fail(who + ": route does not enter on a mu or nu ray");
    if (!(last.cls == EdgeClass::Lambda && last.t_to == kPosInf))
      rep.fail(who + ": route does not leave on a lambda ray");
  }
  try {
    const auto loads = atom_loads(fl);
    for (const auto& [a, mult] : atomize(fl.carrier)) {
      Int total = 0;
      for (const auto& [key, amt] : loads.at(a)) total += amt;
      if (total != a.c * mult)
        rep.fail("piece " + to_string(a) + " carries " + std::to_string(total) +
                 ", capacity " + std::to_string(a.c * mult));
    }
  } catch (const std::invalid_argument& e) {
    rep.fail(e.what());
  }
  return rep;
}

bool honeycomb_flows_equal(const HoneycombFlow& a, const HoneycombFlow& b) {
  return honeycombs_equal(a.carrier, b.carrier) && atom_loads(a) == atom_loads(b);
}

std::vector<Crossing> detect_noncanonical(const HoneycombFlow& fl) {
  // Meetings at carrier vertices are degenerate: several faces share one
  // point there, and strands headed for different faces run straight through
  // the cluster.  Any drawing makes them touch, so only meetings out on open
  // edges count as defects.
  const std::set<HoneyPoint> vertices(fl.carrier.vertices.begin(),
                                      fl.carrier.vertices.end());
  std::map<std::pair<HoneyPoint, int>, std::array<Int, 2>> found;
  for (std::size_t i = 0; i < fl.units.size(); ++i)
    for (std::size_t j = i + 1; j < fl.units.size(); ++j) {
      const FlowUnit& ui = fl.units[i];
      const FlowUnit& uj = fl.units[j];
      if (ui.amount == 0 || uj.amount == 0) continue;
      for (const RoutePiece& pi : ui.route)
        for (const RoutePiece& pj : uj.route) {
          if (pi.cls == pj.cls) continue;
          if (pi.cls != EdgeClass::Lambda && pj.cls != EdgeClass::Lambda)
            continue;  // mu and nu runs pass freely
          HoneyPoint pt = line_meet(pi, pj);
          if (!on_piece(pi, pt, true) || !on_piece(pj, pt, true)) continue;
          if (vertices.count(pt)) continue;
          const bool i_diag = pi.cls == EdgeClass::Lambda;
          const RoutePiece& other = i_diag ? pj : pi;
          Crossing::Kind kind =
              other.cls == EdgeClass::Nu ? Crossing::Type1 : Crossing::Type2;
          std::array<Int, 2> labels{load_key(i_diag ? ui : uj),
                                    load_key(i_diag ? uj : ui)};
          auto [it, fresh] = found.try_emplace({pt, int(kind)}, labels);
          if (!fresh) it->second = std::min(it->second, labels);
        }
    }
  std::vector<Crossing> out;
  for (const auto& [key, labels] : found)
    out.push_back({Crossing::Kind(key.second), key.first, labels});
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
    Int ha = 2 * a.at.x - a.at.y, hb = 2 * b.at.x - b.at.y;
    if (ha != hb) return ha > hb;      // top to bottom
    if (a.at.y != b.at.y) return a.at.y < b.at.y;  // east to west
    return std::tie(a.kind, a.labels) < std::tie(b.kind, b.labels);
  });
  return out;
}

HoneycombFlow replay_trace_on_flow(const HoneycombFlow& fl0,
                                   const StepTrace& trace) {
  HoneycombFlow fl = fl0;
  auto box_at = [&fl](int r, int c) -> FlowUnit& {
    for (FlowUnit& u : fl.units)
      if (!u.is_mu && u.cell_r == r && u.cell_c == c) return u;
    bad_trace("no box at cell (" + std::to_string(r) + "," + std::to_string(c) +
              ")");
  };
  auto ribbon_of = [&fl](int r) -> FlowUnit& {
    FlowUnit* hit = nullptr;
    for (FlowUnit& u : fl.units)
      if (u.is_mu && u.row == r) {
        if (hit) bad_trace("row " + std::to_string(r) + " ribbon is split");
        hit = &u;
      }
    if (!hit) bad_trace("no ribbon for row " + std::to_string(r));
    return *hit;
  };
  // A swap that moves boxes between two rows changes what those rows hold,
  // so the rows' paths bend differently afterwards.  Wherever the two
  // ribbons now run through each other their tails trade places, and every
  // box bound for either row rejoins its row's path at the first such point
  // its own route visits.
  auto repair_rows = [&](int ru, int rl) {
    FlowUnit& upper = ribbon_of(ru);
    FlowUnit& lower = ribbon_of(rl);
    std::vector<RoutePiece> p = upper.route, q = lower.route;
    std::vector<HoneyPoint> swaps;
    while (auto x = first_flip_point(p, q)) {
      if (!swaps.empty() &&
          x->x - x->y <= swaps.back().x - swaps.back().y)
        throw std::logic_error("row path uncrossing does not advance");
      SplitRoute sp = split_route(p, *x);
      SplitRoute sq = split_route(q, *x);
      p = joined(sp.head, sq.tail);
      q = joined(sq.head, sp.tail);
      swaps.push_back(*x);
    }
    // The outer of the two uncrossed paths belongs to the upper row.  Rows
    // with matching entry and exit rays can trade paths without a single
    // transverse crossing, so the assignment runs even when none were found.
    const bool flip = path_order(p, q) < 0;
    if (swaps.empty() && !flip) return;
    if (flip) std::swap(p, q);
    upper.route = p;
    lower.route = q;
    for (FlowUnit& un : fl.units) {
      if (un.is_mu || (un.row != ru && un.row != rl)) continue;
      const std::vector<RoutePiece>& path = un.row == ru ? p : q;
      for (const HoneyPoint& x : swaps) {
        if (!route_contains(un.route, x)) continue;
        un.route =
            joined(split_route(un.route, x).head, split_route(path, x).tail);
        break;
      }
    }
  };

  for (const TraceStep& st : trace.steps) {
    if (st.strand_a.size() != st.strand_b.size() || st.strand_a.empty())
      bad_trace("malformed strands in a " + st.kind + " step");
    if (st.kind == "mu_switch") {
      const int r_up = st.strand_a.front().first;
      const int r_dn = st.strand_b.front().first;
      if (r_dn != r_up + 1) bad_trace("mu switch rows are not adjacent");
      FlowUnit& upper = ribbon_of(r_up);
      FlowUnit& lower = ribbon_of(r_dn);
      const Int d = Int(st.strand_a.size());
      if (lower.amount != upper.amount + d)
        bad_trace("mu switch width disagrees with the ribbons");
      const std::vector<RoutePiece> lower_route = lower.route;

      auto x0 = choose_crossing(upper.route, lower_route, EdgeClass::Lambda,
                                EdgeClass::Mu);
      if (!x0) bad_trace("switched ribbons never meet");
      std::vector<FlowUnit> parts;
      {
        SplitRoute su = split_route(upper.route, *x0);
        SplitRoute sl = split_route(lower_route, *x0);
        FlowUnit part = lower;
        part.amount = upper.amount;
        part.row = r_up;
        part.route = sl.head;
        append_route(part.route, su.tail);
        parts.push_back(std::move(part));
        upper.route = su.head;
        append_route(upper.route, sl.tail);
      }
      upper.row = r_dn;
      for (const auto& [wr, wc] : st.strand_a) {
        if (wr != r_up) bad_trace("mu switch strand leaves its row");
        FlowUnit& w = box_at(wr, wc);
        auto xw = choose_crossing(w.route, lower_route, EdgeClass::Lambda,
                                  EdgeClass::Mu);
        if (!xw) bad_trace("displaced box never meets the ribbon below");
        SplitRoute sw = split_route(w.route, *xw);
        SplitRoute sl = split_route(lower_route, *xw);
        FlowUnit part = lower;
        part.amount = 1;
        part.row = r_up;
        part.route = sl.head;
        append_route(part.route, sw.tail);
        parts.push_back(std::move(part));
        w.route = sw.head;
        append_route(w.route, sl.tail);
        w.row = r_dn;
        w.cell_r = r_dn;
      }
      // The displaced boxes ride the upper path past the meeting point, so
      // the ribbon parts normally share one route and fold back together.
      std::vector<FlowUnit> folded;
      for (FlowUnit& part : parts) {
        bool merged = false;
        for (FlowUnit& g : folded)
          if (g.route == part.route) {
            g.amount += part.amount;
            merged = true;
            break;
          }
        if (!merged) folded.push_back(std::move(part));
      }
      lower = std::move(folded.front());
      for (std::size_t i = 1; i < folded.size(); ++i)
        fl.units.push_back(std::move(folded[i]));
      repair_rows(r_up, r_dn);
    } else if (st.kind == "row_bound" || st.kind == "word" ||
               st.kind == "column_strict") {
      std::vector<std::pair<int, int>> touched;
      std::vector<std::size_t> swapped;
      for (std::size_t j = 0; j < st.strand_a.size(); ++j) {
        FlowUnit& u = box_at(st.strand_a[j].first, st.strand_a[j].second);
        FlowUnit& v = box_at(st.strand_b[j].first, st.strand_b[j].second);
        if (u.label != st.labels[0] || v.label != st.labels[1])
          bad_trace("labels at the swapped cells are " +
                    std::to_string(u.label) + "," + std::to_string(v.label) +
                    ", step says " + std::to_string(st.labels[0]) + "," +
                    std::to_string(st.labels[1]));
        if (u.route != v.route) {
          auto x = choose_swap_point(u.route, v.route);
          if (!x) bad_trace("swapped strands never meet");
          tail_swap(u, v, *x);
        }
        std::swap(u.row, v.row);
        std::swap(u.cell_r, v.cell_r);
        std::swap(u.cell_c, v.cell_c);
        swapped.push_back(std::size_t(&u - fl.units.data()));
        swapped.push_back(std::size_t(&v - fl.units.data()));
        std::pair<int, int> rows{std::min(st.strand_a[j].first, st.strand_b[j].first),
                                 std::max(st.strand_a[j].first, st.strand_b[j].first)};
        if (rows.first != rows.second &&
            std::find(touched.begin(), touched.end(), rows) == touched.end())
          touched.push_back(rows);
      }
      for (const auto& [ru, rl] : touched) repair_rows(ru, rl);
      // A box's new tail came from its partner, which may itself have been
      // mid-reroute; once the row paths have settled, walk each moved box
      // back onto its destination row's path.  The box belongs on the path
      // from the corner the path bends around for it: past the row's entry
      // margin and the row's lower-labelled boxes, at the height of its
      // label's strand count up to this row.  A box whose strand no longer
      // reaches that corner rides its entry ray straight there.  When the
      // picture is mid-flight and the corner is off both routes, fall back
      // to the first point the box's route shares with the path.
      for (std::size_t ui : swapped) {
        FlowUnit& un = fl.units[ui];
        const FlowUnit& rib = ribbon_of(un.row);
        Int jx = rib.amount, jy = 0;
        for (const FlowUnit& w : fl.units) {
          if (w.is_mu) continue;
          if (w.row == un.row && w.label < un.label) jx += w.amount;
          if (w.label == un.label && w.row <= un.row) jy += w.amount;
        }
        const HoneyPoint join{jx, jy};
        if (route_contains(rib.route, join)) {
          if (route_contains(un.route, join)) {
            un.route = joined(split_route(un.route, join).head,
                              split_route(rib.route, join).tail);
            continue;
          }
          if (!un.route.empty() && un.route.front().cls == EdgeClass::Nu &&
              un.route.front().c == jy) {
            un.route = joined({{EdgeClass::Nu, jy, kNegInf, jx}},
                              split_route(rib.route, join).tail);
            continue;
          }
        }
        if (auto x = first_common_point(un.route, rib.route))
          un.route = joined(split_route(un.route, *x).head,
                            split_route(rib.route, *x).tail);
      }
    } else {
      bad_trace("unknown step kind '" + st.kind + "'");
    }
  }
  return fl;
}

}  // namespace lr

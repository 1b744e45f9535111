#include "lr/honeycomb.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lr {

namespace {

// Capacity cells, straight from the filling.
//   C(q,p) = mu_p + k_{1p} + ... + k_{qp}      (mu class, 0 <= q <= p)
//   A(c,p) = k_{cc} + k_{c,c+1} + ... + k_{cp} (nu class, content c)
//   B(c,p) = A(c,p-1)
Int cell_C(const LRFilling& f, int q, int p) {
  Int v = f.mu.part(p);
  for (int i = 1; i <= q; ++i) v += f.K(i, p);
  return v;
}

Int cell_A(const LRFilling& f, int c, int p) {
  Int v = 0;
  for (int s = c; s <= p; ++s) v += f.K(c, s);
  return v;
}

}  // namespace

Int HoneySegment::line_constant() const {
  switch (cls) {
    case EdgeClass::Mu: return a.x;
    case EdgeClass::Nu: return a.y;
    case EdgeClass::Lambda: return a.z();
  }
  throw std::logic_error("bad segment class");
}

HoneyPoint face_point(const LRFilling& f, const FaceRef& face) {
  const int r = f.rows();
  const int p = face.p, q = face.q;
  if (face.up) {
    if (p < 1 || p > r || q < 0 || q > p - 1)
      throw std::invalid_argument("face " + face.name() + " out of range");
    return {cell_C(f, q, p), cell_A(f, q + 1, p)};
  }
  if (p < 1 || p > r || q < 0 || q > p - 2)
    throw std::invalid_argument("face " + face.name() + " out of range");
  return {cell_C(f, q + 1, p), cell_A(f, q + 1, p - 1)};
}

Honeycomb honeycomb_from_filling(const LRFilling& f) {
  if (auto rep = validate_lr(f); !rep.ok)
    throw std::invalid_argument("invalid filling: " + rep.joined());

  const int r = f.rows();
  Honeycomb h;
  auto up = [](int p, int q) { return FaceRef{true, p, q}; };
  auto down = [](int p, int q) { return FaceRef{false, p, q}; };

  for (int p = 1; p <= r; ++p) {
    for (int q = 0; q <= p - 1; ++q) {
      h.vertices.push_back(face_point(f, up(p, q)));
      if (q <= p - 2) h.vertices.push_back(face_point(f, down(p, q)));
    }
  }

  auto ray = [&](EdgeClass cls, HoneyPoint at) {
    h.segments.push_back({cls, at, at, true, 1});
  };
  auto piece = [&](EdgeClass cls, HoneyPoint from, HoneyPoint to) {
    if (from == to) return;  // degenerate: the two faces coincide
    h.segments.push_back({cls, from, to, false, 1});
  };

  for (int p = 1; p <= r; ++p) {
    for (int q = 0; q <= p - 1; ++q) {
      const HoneyPoint u = face_point(f, up(p, q));
      if (q == 0)
        ray(EdgeClass::Mu, u);
      else
        piece(EdgeClass::Mu, face_point(f, down(p, q - 1)), u);
      if (p == r)
        ray(EdgeClass::Nu, u);
      else
        piece(EdgeClass::Nu, face_point(f, down(p + 1, q)), u);
      if (q == p - 1)
        ray(EdgeClass::Lambda, u);
      else
        piece(EdgeClass::Lambda, u, face_point(f, down(p, q)));
    }
  }
  return h;
}

HiveType honeycomb_type(const Honeycomb& h) {
  std::vector<Int> mu, nu, la;
  for (const auto& s : h.segments) {
    if (!s.is_ray) continue;
    for (Int m = 0; m < s.mult; ++m) {
      switch (s.cls) {
        case EdgeClass::Mu: mu.push_back(s.line_constant()); break;
        case EdgeClass::Nu: nu.push_back(s.line_constant()); break;
        case EdgeClass::Lambda: la.push_back(s.line_constant()); break;
      }
    }
  }
  auto desc = [](std::vector<Int>& v) {
    std::sort(v.begin(), v.end(), std::greater<Int>());
  };
  desc(mu), desc(nu), desc(la);
  return {Partition(mu), Partition(nu), Partition(la)};
}

Honeycomb overlay(const Honeycomb& h1, const Honeycomb& h2) {
  Honeycomb h = h1;
  h.vertices.insert(h.vertices.end(), h2.vertices.begin(), h2.vertices.end());
  h.segments.insert(h.segments.end(), h2.segments.begin(), h2.segments.end());
  return h;
}

namespace {

struct LineKey {
  EdgeClass cls = EdgeClass::Mu;
  Int c = 0;
  auto operator<=>(const LineKey&) const = default;
};

struct Interval {
  Int lo = 0, hi = 0;  // closed; kNegInf/kPosInf for ray ends
  Int mult = 1;
};

// Parameter of a point on a line of the given class: y on mu lines, x on nu
// and lambda lines.
Int param_of(EdgeClass cls, HoneyPoint p) {
  return cls == EdgeClass::Mu ? p.y : p.x;
}

// The unique intersection point of two non-parallel lines.
HoneyPoint cross_lines(const LineKey& l1, const LineKey& l2) {
  if (l1.cls == l2.cls) throw std::logic_error("parallel line classes");
  if (l1.cls > l2.cls) return cross_lines(l2, l1);
  if (l1.cls == EdgeClass::Mu && l2.cls == EdgeClass::Nu)
    return {l1.c, l2.c};
  if (l1.cls == EdgeClass::Mu && l2.cls == EdgeClass::Lambda)
    return {l1.c, l2.c - l1.c};
  return {l2.c - l1.c, l1.c};  // nu x lambda
}

Interval interval_of(const HoneySegment& s) {
  if (s.is_ray) {
    switch (s.cls) {
      case EdgeClass::Mu: return {s.a.y, kPosInf, s.mult};      // outward +y
      case EdgeClass::Nu: return {kNegInf, s.a.x, s.mult};      // outward -x
      case EdgeClass::Lambda: return {s.a.x, kPosInf, s.mult};  // outward (+1,-1)
    }
    throw std::logic_error("bad segment class");
  }
  Int ta = param_of(s.cls, s.a), tb = param_of(s.cls, s.b);
  return {std::min(ta, tb), std::max(ta, tb), s.mult};
}

}  // namespace

std::map<Atom, Int> atomize(const Honeycomb& h) {
  std::map<LineKey, std::vector<Interval>> lines;
  for (const auto& s : h.segments) {
    if (!s.is_ray && s.a == s.b) continue;
    if (s.mult == 0) continue;
    if (s.mult < 0) throw std::invalid_argument("negative segment multiplicity");
    lines[{s.cls, s.line_constant()}].push_back(interval_of(s));
  }

  std::map<Atom, Int> atoms;
  for (const auto& [line, ivs] : lines) {
    // Points where another family meets this line (crossing or touching).
    std::set<Int> contacts;
    for (const auto& [other, oivs] : lines) {
      if (other.cls == line.cls) continue;
      const HoneyPoint p = cross_lines(line, other);
      const Int t_other = param_of(other.cls, p);
      for (const auto& iv : oivs)
        if (iv.lo <= t_other && t_other <= iv.hi) {
          contacts.insert(param_of(line.cls, p));
          break;
        }
    }

    std::set<Int> cuts = contacts;
    for (const auto& iv : ivs) {
      if (iv.lo != kNegInf) cuts.insert(iv.lo);
      if (iv.hi != kPosInf) cuts.insert(iv.hi);
    }

    std::vector<Int> bounds{kNegInf};
    bounds.insert(bounds.end(), cuts.begin(), cuts.end());
    bounds.push_back(kPosInf);

    // Coverage of each open gap, then merge across cuts that neither change
    // the coverage nor meet another family.
    std::vector<Atom> gaps;
    std::vector<Int> cover;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
      if (bounds[i] == bounds[i + 1]) continue;
      Int m = 0;
      for (const auto& iv : ivs)
        if (iv.lo <= bounds[i] && bounds[i + 1] <= iv.hi) m += iv.mult;
      gaps.push_back({line.cls, line.c, bounds[i], bounds[i + 1]});
      cover.push_back(m);
    }
    for (size_t i = 0; i < gaps.size(); ++i) {
      size_t j = i;
      while (j + 1 < gaps.size() && cover[j + 1] == cover[i] &&
             !contacts.count(gaps[j].hi))
        ++j;
      if (cover[i] > 0)
        atoms[{line.cls, line.c, gaps[i].lo, gaps[j].hi}] += cover[i];
      i = j;
    }
  }
  return atoms;
}

bool honeycombs_equal(const Honeycomb& h1, const Honeycomb& h2) {
  return atomize(h1) == atomize(h2);
}

std::string to_string(const Atom& a) {
  auto end = [](Int t) -> std::string {
    if (t == kNegInf) return "-inf";
    if (t == kPosInf) return "+inf";
    return std::to_string(t);
  };
  std::ostringstream os;
  os << to_string(a.cls) << '(' << a.c << ")[" << end(a.lo) << ',' << end(a.hi)
     << ']';
  return os.str();
}

}  // namespace lr

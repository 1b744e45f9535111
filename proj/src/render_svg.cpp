#include "lr/render_svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace lr {

namespace {

constexpr double kRoot3Half = 0.8660254037844386;
constexpr double kScale = 40.0;
constexpr double kMargin = 30.0;

struct XY {
  double x = 0, y = 0;
};

// Plane point -> unscaled SVG point: p(x,y) = x*(0,1) + y*(-r3/2,-1/2),
// then the vertical axis is flipped because SVG y grows downward.
XY embed(double x, double y) {
  return {-kRoot3Half * y * kScale, -(x - 0.5 * y) * kScale};
}

std::string num(double v) {
  if (v > -0.005 && v < 0.005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Stroke {
  XY a, b;
};

struct Poly {
  std::vector<XY> pts;
  std::string color;
  double dx = 0, dy = 0;
};

const std::array<const char*, 10> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#17becf", "#bcbd22", "#66c2a5"};

}  // namespace

std::string render_svg(const Honeycomb& h, const HoneycombFlow* flow) {
  // Clip bound: one unit beyond everything drawn, so every ray visibly
  // leaves the cluster of vertices.
  Int lo = 0, hi = 0;
  auto see = [&](const HoneyPoint& p) {
    lo = std::min({lo, p.x, p.y});
    hi = std::max({hi, p.x, p.y});
  };
  for (const HoneyPoint& v : h.vertices) see(v);
  for (const HoneySegment& s : h.segments) {
    see(s.a);
    if (!s.is_ray) see(s.b);
  }
  lo -= 1;
  hi += 1;
  auto clip = [&](Int t) -> double {
    if (t >= kPosInf / 2) return double(hi);
    if (t <= kNegInf / 2) return double(lo);
    return double(t);
  };
  auto at = [&](EdgeClass cls, Int c, Int t) -> XY {
    double tc = clip(t);
    switch (cls) {
      case EdgeClass::Mu: return embed(double(c), tc);
      case EdgeClass::Nu: return embed(tc, double(c));
      default: return embed(tc, double(c) - tc);
    }
  };

  std::vector<Stroke> carrier;
  for (const HoneySegment& s : h.segments) {
    XY a = embed(double(s.a.x), double(s.a.y));
    XY b;
    if (!s.is_ray) {
      b = embed(double(s.b.x), double(s.b.y));
    } else {
      switch (s.cls) {  // outward: mu +y, nu -x, lambda (+1,-1)
        case EdgeClass::Mu: b = embed(double(s.a.x), double(hi)); break;
        case EdgeClass::Nu: b = embed(double(lo), double(s.a.y)); break;
        default: b = embed(double(hi), double(s.a.z() - hi)); break;
      }
    }
    // Multiplicity fans out into parallel strokes around the true line.
    double vx = b.x - a.x, vy = b.y - a.y;
    double len = std::max(1e-9, std::sqrt(vx * vx + vy * vy));
    double px = -vy / len, py = vx / len;
    for (Int m = 0; m < s.mult; ++m) {
      double off = (double(m) - double(s.mult - 1) / 2.0) * 3.0;
      carrier.push_back(
          {{a.x + px * off, a.y + py * off}, {b.x + px * off, b.y + py * off}});
    }
  }

  std::vector<XY> dots;
  for (const HoneyPoint& v : h.vertices)
    dots.push_back(embed(double(v.x), double(v.y)));

  std::vector<Poly> strands;
  if (flow) {
    int idx = 0;
    for (const FlowUnit& u : flow->units) {
      Poly pl;
      pl.color =
          u.is_mu ? "#333333" : kPalette[std::size_t(((u.label - 1) % 10 + 10) % 10)];
      pl.dx = double((idx * 7) % 13 - 6) * 0.35;
      pl.dy = double((idx * 5) % 11 - 5) * 0.35;
      for (const RoutePiece& p : u.route) {
        XY a = at(p.cls, p.c, p.t_from);
        XY b = at(p.cls, p.c, p.t_to);
        if (pl.pts.empty()) pl.pts.push_back(a);
        pl.pts.push_back(b);
      }
      if (!pl.pts.empty()) strands.push_back(std::move(pl));
      ++idx;
    }
  }

  double minx = 0, miny = 0, maxx = 0, maxy = 0;
  bool first = true;
  auto grow = [&](const XY& p) {
    if (first) {
      minx = maxx = p.x;
      miny = maxy = p.y;
      first = false;
    } else {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  };
  for (const Stroke& s : carrier) {
    grow(s.a);
    grow(s.b);
  }
  for (const XY& d : dots) grow(d);
  for (const Poly& pl : strands)
    for (const XY& p : pl.pts) grow(p);
  if (first) minx = miny = maxx = maxy = 0;

  const double tx = kMargin - minx, ty = kMargin - miny;
  const long w = long(maxx - minx + 2 * kMargin + 1);
  const long hgt = long(maxy - miny + 2 * kMargin + 1);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(w) + "\" height=\"" + std::to_string(hgt) +
         "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(hgt) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g stroke=\"#888888\" stroke-width=\"1\" stroke-linecap=\"round\">\n";
  for (const Stroke& s : carrier)
    out += "<line x1=\"" + num(s.a.x + tx) + "\" y1=\"" + num(s.a.y + ty) +
           "\" x2=\"" + num(s.b.x + tx) + "\" y2=\"" + num(s.b.y + ty) +
           "\"/>\n";
  out += "</g>\n";
  for (const Poly& pl : strands) {
    out += "<polyline fill=\"none\" stroke=\"" + pl.color +
           "\" stroke-width=\"1.6\" stroke-opacity=\"0.9\" points=\"";
    for (std::size_t i = 0; i < pl.pts.size(); ++i) {
      if (i) out += " ";
      out += num(pl.pts[i].x + tx + pl.dx) + "," + num(pl.pts[i].y + ty + pl.dy);
    }
    out += "\"/>\n";
  }
  out += "<g fill=\"#444444\">\n";
  for (const XY& d : dots)
    out += "<circle cx=\"" + num(d.x + tx) + "\" cy=\"" + num(d.y + ty) +
           "\" r=\"2.2\"/>\n";
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace lr

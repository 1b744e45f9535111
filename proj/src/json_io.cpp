#include "lr/json_io.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lr {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument("bad JSON document: " + msg);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<Int>();
}

std::vector<Int> int_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(as_int(e, what));
  return out;
}

std::vector<std::vector<Int>> int_rows(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<Int>> out;
  out.reserve(j.size());
  for (const json& row : j) out.push_back(int_array(row, what));
  return out;
}

HoneyPoint point(const json& j, const char* what) {
  std::vector<Int> v = int_array(j, what);
  if (v.size() != 2) bad(std::string(what) + " must be [x,y]");
  return {v[0], v[1]};
}

json point_json(const HoneyPoint& p) { return json::array({p.x, p.y}); }

EdgeClass class_from(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "mu") return EdgeClass::Mu;
    if (s == "nu") return EdgeClass::Nu;
    if (s == "lambda") return EdgeClass::Lambda;
  }
  bad("\"class\" must be \"mu\", \"nu\" or \"lambda\"");
}

std::vector<std::pair<int, int>> cell_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of [r,c]");
  std::vector<std::pair<int, int>> out;
  for (const json& e : j) {
    std::vector<Int> v = int_array(e, what);
    if (v.size() != 2) bad(std::string(what) + " entries must be [r,c]");
    out.emplace_back(int(v[0]), int(v[1]));
  }
  return out;
}

}  // namespace

json filling_to_json(const LRFilling& f) {
  return json{{"mu", f.mu.parts},
              {"nu", f.nu.parts},
              {"lambda", f.lambda.parts},
              {"k", f.k}};
}

LRFilling filling_from_json(const json& j) {
  return LRFilling(Partition(int_array(field(j, "mu"), "\"mu\"")),
                   Partition(int_array(field(j, "nu"), "\"nu\"")),
                   Partition(int_array(field(j, "lambda"), "\"lambda\"")),
                   int_rows(field(j, "k"), "\"k\""));
}

json hive_to_json(const Hive& hv) { return json{{"h", hv.h}}; }

Hive hive_from_json(const json& j) {
  return Hive(int_rows(field(j, "h"), "\"h\""));
}

json honeycomb_to_json(const Honeycomb& h) {
  json verts = json::array();
  for (const HoneyPoint& v : h.vertices) verts.push_back(point_json(v));
  json segs = json::array();
  for (const HoneySegment& s : h.segments) {
    json e;
    if (s.is_ray) e["ray"] = point_json(s.a);
    else {
      e["a"] = point_json(s.a);
      e["b"] = point_json(s.b);
    }
    e["class"] = to_string(s.cls);
    e["mult"] = s.mult;
    segs.push_back(std::move(e));
  }
  return json{{"vertices", std::move(verts)}, {"segments", std::move(segs)}};
}

Honeycomb honeycomb_from_json(const json& j) {
  Honeycomb h;
  const json& verts = field(j, "vertices");
  if (!verts.is_array()) bad("\"vertices\" must be an array");
  for (const json& v : verts) h.vertices.push_back(point(v, "vertex"));
  const json& segs = field(j, "segments");
  if (!segs.is_array()) bad("\"segments\" must be an array");
  for (const json& e : segs) {
    if (!e.is_object()) bad("segment entries must be objects");
    HoneySegment s;
    s.cls = class_from(field(e, "class"));
    s.mult = as_int(field(e, "mult"), "\"mult\"");
    if (s.mult <= 0) bad("\"mult\" must be positive");
    if (e.contains("ray")) {
      s.is_ray = true;
      s.a = point(e.at("ray"), "\"ray\"");
    } else {
      s.a = point(field(e, "a"), "\"a\"");
      s.b = point(field(e, "b"), "\"b\"");
      if (s.a == s.b) bad("segment endpoints coincide");
    }
    h.segments.push_back(s);
  }
  return h;
}

json flow_to_json(const WeightedDualGraph& g, const Flow& fl) {
  json out = json::array();
  for (const DualEdge& e : g.edges) {
    json loads = json::object();
    auto it = fl.loads.find(e.key);
    if (it != fl.loads.end())
      for (const auto& [strand, amt] : it->second) loads[strand.name()] = amt;
    out.push_back(json{{"face_a", e.endpoint_a()},
                       {"face_b", e.endpoint_b()},
                       {"class", to_string(e.key.cls)},
                       {"capacity", e.capacity},
                       {"loads", std::move(loads)}});
  }
  return out;
}

json trace_to_json(const StepTrace& t) {
  json out = json::array();
  for (const TraceStep& st : t.steps) {
    json a = json::array(), b = json::array();
    for (const auto& [r, c] : st.strand_a) a.push_back(json::array({r, c}));
    for (const auto& [r, c] : st.strand_b) b.push_back(json::array({r, c}));
    out.push_back(json{{"kind", st.kind},
                       {"strand_a", std::move(a)},
                       {"strand_b", std::move(b)},
                       {"labels", json::array({st.labels[0], st.labels[1]})}});
  }
  return out;
}

StepTrace trace_from_json(const json& j) {
  if (!j.is_array()) bad("trace must be an array of steps");
  StepTrace t;
  for (const json& e : j) {
    TraceStep st;
    const json& kind = field(e, "kind");
    if (!kind.is_string()) bad("\"kind\" must be a string");
    st.kind = kind.get<std::string>();
    st.strand_a = cell_list(field(e, "strand_a"), "\"strand_a\"");
    st.strand_b = cell_list(field(e, "strand_b"), "\"strand_b\"");
    std::vector<Int> lab = int_array(field(e, "labels"), "\"labels\"");
    if (lab.size() != 2) bad("\"labels\" must be [small, big]");
    st.labels = {lab[0], lab[1]};
    t.steps.push_back(std::move(st));
  }
  return t;
}

}  // namespace lr

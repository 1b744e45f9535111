#include "doctest.h"
#include "lr/json_io.hpp"

#include <stdexcept>

using namespace lr;
using nlohmann::json;

namespace {

Partition P(std::vector<Int> v) { return Partition(std::move(v)); }

LRFilling small_filling() {
  return LRFilling(P({2, 1}), P({2, 1}), P({3, 3}), {{1}, {1, 1}});
}

LRFilling size5_filling() {
  return LRFilling(P({10, 9, 5, 3, 1}), P({12, 11, 7, 6, 1}),
                   P({18, 16, 12, 11, 8}),
                   {{8}, {0, 7}, {2, 1, 4}, {1, 2, 2, 3}, {1, 1, 1, 3, 1}});
}

bool same(const LRFilling& a, const LRFilling& b) {
  return a.mu == b.mu && a.nu == b.nu && a.lambda == b.lambda && a.k == b.k;
}

}  // namespace

TEST_CASE("filling json round trip and schema") {
  const LRFilling f = small_filling();
  const json j = filling_to_json(f);
  CHECK(j.at("mu") == json::array({2, 1}));
  CHECK(j.at("nu") == json::array({2, 1}));
  CHECK(j.at("lambda") == json::array({3, 3}));
  CHECK(j.at("k").size() == 2);
  CHECK(j.at("k")[0] == json::array({1}));
  CHECK(j.at("k")[1] == json::array({1, 1}));  // row 2 holds k_12, k_22
  CHECK(same(filling_from_json(j), f));
  CHECK(same(filling_from_json(filling_to_json(size5_filling())),
             size5_filling()));
  CHECK(filling_to_json(f).dump() == filling_to_json(f).dump());
}

TEST_CASE("malformed filling documents are rejected") {
  const json good = filling_to_json(small_filling());
  json j = good;
  j.erase("nu");
  CHECK_THROWS_AS(filling_from_json(j), std::invalid_argument);
  j = good;
  j["mu"] = json::array({1, 2});  // increasing: not a partition
  CHECK_THROWS_AS(filling_from_json(j), std::invalid_argument);
  j = good;
  j["k"][0] = json::array({1, 1});  // row 1 must have one entry
  CHECK_THROWS_AS(filling_from_json(j), std::invalid_argument);
  j = good;
  j["lambda"][0] = "three";
  CHECK_THROWS_AS(filling_from_json(j), std::invalid_argument);
  CHECK_THROWS_AS(filling_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("hive json round trip") {
  const Hive hv = hive_from_filling(small_filling());
  const json j = hive_to_json(hv);
  CHECK(j.at("h")[0] == json::array({0}));
  CHECK(hive_from_json(j) == hv);
  json bad = j;
  bad["h"].erase(1);  // shape breaks: row p needs p+1 entries
  CHECK_THROWS_AS(hive_from_json(bad), std::invalid_argument);
  bad = j;
  bad["h"][0][0] = 1;  // shape is fine; validation catches the apex
  CHECK_FALSE(validate_hive(hive_from_json(bad)).ok);
}

TEST_CASE("honeycomb json round trip keeps the drawing and the rays") {
  const Honeycomb h = honeycomb_from_filling(size5_filling());
  const json j = honeycomb_to_json(h);
  const Honeycomb back = honeycomb_from_json(j);
  CHECK(back.vertices == h.vertices);
  CHECK(back.segments.size() == h.segments.size());
  CHECK(honeycombs_equal(back, h));
  bool saw_ray = false, saw_finite = false;
  for (const json& e : j.at("segments")) {
    if (e.contains("ray")) {
      saw_ray = true;
      CHECK(!e.contains("a"));
      CHECK(!e.contains("b"));
    } else {
      saw_finite = true;
      CHECK(e.contains("a"));
      CHECK(e.contains("b"));
    }
    CHECK(e.at("mult").get<Int>() >= 1);
  }
  CHECK(saw_ray);
  CHECK(saw_finite);
}

TEST_CASE("malformed honeycomb documents are rejected") {
  json j = honeycomb_to_json(honeycomb_from_filling(small_filling()));
  json bad = j;
  bad["segments"][0]["class"] = "sigma";
  CHECK_THROWS_AS(honeycomb_from_json(bad), std::invalid_argument);
  bad = j;
  bad["vertices"][0] = json::array({1, 2, 3});
  CHECK_THROWS_AS(honeycomb_from_json(bad), std::invalid_argument);
  bad = j;
  bad["segments"][0]["mult"] = 0;
  CHECK_THROWS_AS(honeycomb_from_json(bad), std::invalid_argument);
}

TEST_CASE("flow json lists every dual edge saturated") {
  const LRFilling f = small_filling();
  const WeightedDualGraph g = build_dual_graph(hive_from_filling(f));
  const Flow fl = canonical_flow(f);
  const json j = flow_to_json(g, fl);
  REQUIRE(j.size() == g.edges.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    CHECK(e.at("class") == to_string(g.edges[i].key.cls));
    CHECK(e.at("capacity").get<Int>() == g.edges[i].capacity);
    Int total = 0;
    for (const auto& [name, amt] : e.at("loads").items()) {
      CHECK((name[0] == 'm' || name[0] == 'c'));
      total += amt.get<Int>();
    }
    CHECK(total == g.edges[i].capacity);
  }
  // The row-1 entry edge carries exactly the mu ribbon.
  CHECK(j[0].at("face_a") == "mu_stub(1)");
  CHECK(j[0].at("loads").contains("mu1"));
}

TEST_CASE("trace json round trip") {
  const SumResult res =
      sum_fillings(LRFilling(P({2}), P({1}), P({3}), {{1}}),
                   LRFilling(P({1}), P({3}), P({4}), {{3}}));
  REQUIRE(!res.trace.steps.empty());
  const json j = trace_to_json(res.trace);
  for (const json& st : j) {
    CHECK(st.contains("kind"));
    CHECK(st.at("strand_a").is_array());
    CHECK(st.at("labels").size() == 2);
  }
  const StepTrace back = trace_from_json(j);
  CHECK(trace_to_json(back) == j);
  json bad = j;
  bad[0]["labels"] = json::array({1});
  CHECK_THROWS_AS(trace_from_json(bad), std::invalid_argument);
}

#include "doctest.h"
#include "lr/json_io.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace lr;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

Partition P(std::vector<Int> v) { return Partition(std::move(v)); }

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "lrsum_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& data) {
  std::ofstream out(p, std::ios::binary);
  out << data;
}

fs::path write_filling(const std::string& name, const LRFilling& f) {
  const fs::path p = work_dir() / name;
  spit(p, filling_to_json(f).dump(2) + "\n");
  return p;
}

struct RunResult {
  int code = -1;
  std::string out, err;
};

RunResult run(const std::string& args) {
  static int seq = 0;
  const fs::path o = work_dir() / ("stdout" + std::to_string(seq));
  const fs::path e = work_dir() / ("stderr" + std::to_string(seq));
  ++seq;
  const std::string cmd = std::string(LRSUM_BIN) + " " + args + " > " +
                          o.string() + " 2> " + e.string();
  const int st = std::system(cmd.c_str());
  RunResult r;
  if (st != -1 && WIFEXITED(st)) r.code = WEXITSTATUS(st);
  r.out = slurp(o);
  r.err = slurp(e);
  return r;
}

LRFilling example_a() {
  return enumerate_fillings(P({10, 6, 1}), P({13, 7, 1}), P({17, 12, 9}))[0];
}
LRFilling example_b() {
  return enumerate_fillings(P({9, 4}), P({12, 6}), P({18, 13}))[0];
}

}  // namespace

TEST_CASE("count agrees across both oracles") {
  const RunResult r = run("count --mu 2,1 --nu 2,1 --lambda 3,3 --oracle both");
  CHECK(r.code == 0);
  CHECK(r.out == "1 1\n");
  CHECK(run("count --mu 3,2,1 --nu 3,2,1 --lambda 4,4,2,2").out == "2\n");
  CHECK(run("count --mu 3,2,1 --nu 3,2,1 --lambda 4,4,2,2 --oracle hive").out ==
        "2\n");
}

TEST_CASE("validate accepts the size-5 example and rejects junk") {
  const LRFilling good(P({10, 9, 5, 3, 1}), P({12, 11, 7, 6, 1}),
                       P({18, 16, 12, 11, 8}),
                       {{8}, {0, 7}, {2, 1, 4}, {1, 2, 2, 3}, {1, 1, 1, 3, 1}});
  const fs::path p = write_filling("size5.json", good);
  CHECK(run("validate " + p.string()).code == 0);

  json broken = filling_to_json(good);
  broken["k"][1][1] = 99;
  const fs::path q = work_dir() / "broken.json";
  spit(q, broken.dump());
  const RunResult r = run("validate " + q.string());
  CHECK(r.code == 1);
  CHECK(!r.out.empty());  // the report names the violated conditions

  const fs::path m = work_dir() / "malformed.json";
  spit(m, "{oops");
  const RunResult bad = run("validate " + m.string());
  CHECK(bad.code == 1);
  CHECK(!bad.err.empty());

  CHECK(run("validate " + (work_dir() / "missing.json").string()).code == 1);
  CHECK(run("frobnicate").code != 0);
}

TEST_CASE("sum emits the merged type, a replayable trace and stable bytes") {
  const fs::path a = write_filling("ex_a.json", example_a());
  const fs::path b = write_filling("ex_b.json", example_b());
  const fs::path tr = work_dir() / "trace.json";
  const fs::path svg = work_dir() / "overlay.svg";
  const std::string cmd = "sum " + a.string() + " " + b.string() +
                          " --trace " + tr.string() + " --svg " + svg.string();
  const RunResult r = run(cmd);
  REQUIRE(r.code == 0);
  CHECK(r.err.find("(10,9,6,4,1) (13,12,7,6,1) (18,17,13,12,9)") !=
        std::string::npos);

  const SumResult res = sum_fillings(example_a(), example_b());
  const LRFilling printed = filling_from_json(json::parse(r.out));
  CHECK(printed.k == res.sum.k);
  CHECK(printed.mu == res.sum.mu);

  CHECK(trace_to_json(trace_from_json(json::parse(slurp(tr)))) ==
        trace_to_json(res.trace));
  CHECK(slurp(svg).rfind("<?xml", 0) == 0);

  // Same inputs, same bytes everywhere.
  const fs::path svg2 = work_dir() / "overlay2.svg";
  const RunResult r2 = run("sum " + a.string() + " " + b.string() + " --svg " +
                           svg2.string());
  CHECK(r2.out == r.out);
  CHECK(slurp(svg2) == slurp(svg));

  CHECK(run("overlay-check " + a.string() + " " + b.string()).code == 0);
}

TEST_CASE("every emitted document is read back verbatim") {
  const fs::path a = write_filling("rt.json", example_b());
  const RunResult hv = run("to-hive " + a.string());
  REQUIRE(hv.code == 0);
  const fs::path hvp = work_dir() / "rt_hive.json";
  spit(hvp, hv.out);
  const RunResult back = run("from-hive " + hvp.string());
  REQUIRE(back.code == 0);
  CHECK(back.out == slurp(a));

  const RunResult hc = run("honeycomb " + a.string());
  REQUIRE(hc.code == 0);
  const fs::path hcp = work_dir() / "rt_honeycomb.json";
  spit(hcp, hc.out);
  const RunResult again = run("honeycomb " + hcp.string());
  REQUIRE(again.code == 0);
  CHECK(again.out == hc.out);

  const fs::path dir = work_dir() / "enum_out";
  const RunResult en =
      run("enumerate --mu 2,1 --nu 2,1 --lambda 3,2,1 --out " + dir.string());
  REQUIRE(en.code == 0);
  const std::size_t n = std::stoul(en.out);
  std::size_t files = 0;
  for (const auto& f : fs::directory_iterator(dir)) {
    CHECK(run("validate " + f.path().string()).code == 0);
    ++files;
  }
  CHECK(files == n);
  CHECK(fs::exists(dir / "filling_0000.json"));
}

TEST_CASE("flow subcommand prints the saturated edge list") {
  const fs::path a = write_filling("flow_in.json", example_b());
  const RunResult r = run("flow " + a.string());
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(!j.empty());
  for (const json& e : j) {
    Int total = 0;
    for (const auto& kv : e.at("loads").items()) total += kv.value().get<Int>();
    CHECK(total == e.at("capacity").get<Int>());
  }
}

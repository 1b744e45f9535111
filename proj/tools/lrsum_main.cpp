#include "CLI11.hpp"
#include "lr/honeycomb_flow.hpp"
#include "lr/json_io.hpp"
#include "lr/render_svg.hpp"
#include "lr/summation.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

using namespace lr;
using nlohmann::json;

namespace {

// Exit codes: 0 success/valid, 1 invalid input, 2 oracle disagreement or
// overlay-check failure, 3 internal invariant failure.  CLI11 keeps its own
// (nonzero) codes for malformed command lines.
constexpr int kOk = 0, kBadInput = 1, kDisagree = 2, kInternal = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << data;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

LRFilling read_filling(const std::string& path) {
  const LRFilling f = filling_from_json(read_json_file(path));
  const ValidationReport rep = validate_lr(f);
  if (!rep.ok)
    throw std::invalid_argument(path + " is not a valid filling:\n" +
                                rep.joined());
  return f;
}

std::string type_line(const LRFilling& f) {
  return to_string(f.mu) + " " + to_string(f.nu) + " " + to_string(f.lambda);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Richardson fillings: validation, counting, hive "
               "conversion, summation and honeycomb drawings"};
  app.require_subcommand(1);

  std::string in_a, in_b, out_dir, trace_path, svg_path;
  std::string mu_s, nu_s, la_s, oracle = "filling";
  bool as_hive = false;

  auto* validate = app.add_subcommand("validate", "check a filling document");
  validate->add_option("file", in_a, "filling JSON (or hive with --hive)")
      ->required();
  validate->add_flag("--hive", as_hive, "treat the input as a hive");

  auto* count = app.add_subcommand("count", "count fillings of a type");
  count->add_option("--mu", mu_s, "inner shape, e.g. 2,1")->required();
  count->add_option("--nu", nu_s, "content")->required();
  count->add_option("--lambda", la_s, "outer shape")->required();
  count->add_option("--oracle", oracle, "filling, hive or both")
      ->check(CLI::IsMember({"filling", "hive", "both"}));

  auto* enumerate = app.add_subcommand("enumerate", "write every filling of a type");
  enumerate->add_option("--mu", mu_s, "inner shape")->required();
  enumerate->add_option("--nu", nu_s, "content")->required();
  enumerate->add_option("--lambda", la_s, "outer shape")->required();
  enumerate->add_option("--out", out_dir, "output directory")->required();

  auto* to_hive = app.add_subcommand("to-hive", "filling JSON to hive JSON");
  to_hive->add_option("file", in_a, "filling JSON")->required();

  auto* from_hive = app.add_subcommand("from-hive", "hive JSON to filling JSON");
  from_hive->add_option("file", in_a, "hive JSON")->required();

  auto* sum = app.add_subcommand("sum", "sum two fillings");
  sum->add_option("a", in_a, "first filling JSON")->required();
  sum->add_option("b", in_b, "second filling JSON")->required();
  sum->add_option("--trace", trace_path, "write the step trace here");
  sum->add_option("--svg", svg_path,
                  "draw the overlay with the corrected flow here");

  auto* flow = app.add_subcommand("flow", "canonical flow of a filling");
  flow->add_option("file", in_a, "filling JSON")->required();

  auto* honeycomb = app.add_subcommand("honeycomb", "honeycomb of a filling");
  honeycomb->add_option("file", in_a, "filling or honeycomb JSON")->required();
  honeycomb->add_option("--svg", svg_path, "write the drawing here");

  auto* overlay_check =
      app.add_subcommand("overlay-check", "sum vs. overlay cross-check");
  overlay_check->add_option("a", in_a, "first filling JSON")->required();
  overlay_check->add_option("b", in_b, "second filling JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const json j = read_json_file(in_a);
      const ValidationReport rep =
          as_hive ? validate_hive(hive_from_json(j))
                  : validate_lr(filling_from_json(j));
      if (rep.ok) {
        std::cout << "valid\n";
        return kOk;
      }
      std::cout << rep.joined() << "\n";
      return kBadInput;
    }

    if (*count || *enumerate) {
      const Partition mu = parse_partition(mu_s);
      const Partition nu = parse_partition(nu_s);
      const Partition lambda = parse_partition(la_s);
      if (*count) {
        if (oracle == "filling") {
          std::cout << count_fillings(mu, nu, lambda) << "\n";
        } else if (oracle == "hive") {
          std::cout << count_hives(mu, nu, lambda) << "\n";
        } else {
          const Int a = count_fillings(mu, nu, lambda);
          const Int b = count_hives(mu, nu, lambda);
          std::cout << a << " " << b << "\n";
          if (a != b) {
            std::cerr << "oracle disagreement\n";
            return kDisagree;
          }
        }
        return kOk;
      }
      const std::vector<LRFilling> all = enumerate_fillings(mu, nu, lambda);
      std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < all.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "filling_%04zu.json", i);
        write_file((std::filesystem::path(out_dir) / name).string(),
                   dump(filling_to_json(all[i])));
      }
      std::cout << all.size() << "\n";
      return kOk;
    }

    if (*to_hive) {
      std::cout << dump(hive_to_json(hive_from_filling(read_filling(in_a))));
      return kOk;
    }

    if (*from_hive) {
      const Hive hv = hive_from_json(read_json_file(in_a));
      const ValidationReport rep = validate_hive(hv);
      if (!rep.ok)
        throw std::invalid_argument(in_a + " is not a valid hive:\n" +
                                    rep.joined());
      std::cout << dump(filling_to_json(filling_from_hive(hv)));
      return kOk;
    }

    if (*sum) {
      const LRFilling f1 = read_filling(in_a);
      const LRFilling f2 = read_filling(in_b);
      const SumResult res = sum_fillings(f1, f2);
      std::cerr << type_line(res.sum) << "\n";
      std::cout << dump(filling_to_json(res.sum));
      if (!trace_path.empty())
        write_file(trace_path, dump(trace_to_json(res.trace)));
      if (!svg_path.empty()) {
        const HoneycombFlow corrected =
            replay_trace_on_flow(overlay_flow(f1, f2), res.trace);
        write_file(svg_path, render_svg(corrected));
      }
      return kOk;
    }

    if (*flow) {
      const LRFilling f = read_filling(in_a);
      std::cout << dump(flow_to_json(build_dual_graph(hive_from_filling(f)),
                                     canonical_flow(f)));
      return kOk;
    }

    if (*honeycomb) {
      const json j = read_json_file(in_a);
      const Honeycomb h = j.contains("segments")
                              ? honeycomb_from_json(j)
                              : honeycomb_from_filling(read_filling(in_a));
      std::cout << dump(honeycomb_to_json(h));
      if (!svg_path.empty()) write_file(svg_path, render_svg(h));
      return kOk;
    }

    if (*overlay_check) {
      const LRFilling f1 = read_filling(in_a);
      const LRFilling f2 = read_filling(in_b);
      const SumResult res = sum_fillings(f1, f2);
      const bool drawings_match = honeycombs_equal(
          honeycomb_from_filling(res.sum),
          overlay(honeycomb_from_filling(f1), honeycomb_from_filling(f2)));
      const HoneycombFlow corrected =
          replay_trace_on_flow(overlay_flow(f1, f2), res.trace);
      const bool flow_canonical =
          check_honeycomb_flow(corrected).ok &&
          honeycomb_flows_equal(corrected, honeycomb_flow(res.sum));
      if (drawings_match && flow_canonical) {
        std::cout << "sum " << type_line(res.sum)
                  << ": overlay matches, corrected flow is canonical\n";
        return kOk;
      }
      if (!drawings_match)
        std::cerr << "overlay differs from the summed honeycomb\n";
      if (!flow_canonical) std::cerr << "corrected flow is not canonical\n";
      return kDisagree;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "onematch/audit.hpp"
#include "onematch/generators.hpp"
#include "onematch/json_io.hpp"
#include "onematch/matching.hpp"
#include "onematch/structure.hpp"
#include "onematch/transform.hpp"

using namespace onematch;

namespace {

// exit codes: 0 = all checks pass, 1 = a check failed, 2 = invalid input
constexpr int kPass = 0, kCheckFailed = 1, kBadInput = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

// drawing files carry rotations; anything else is treated as a plain graph
bool is_drawing_json(const json& j) { return j.contains("rotations"); }

struct GraphInput {
  Graph g;
  bool from_drawing = false;
  Drawing d;                // only when from_drawing
  std::vector<int> ids;     // graph index -> drawing id
};

GraphInput read_graph_input(const std::string& path) {
  auto j = read_json_file(path);
  GraphInput in;
  if (is_drawing_json(j)) {
    in.d = drawing_from_json(j);
    std::tie(in.g, in.ids) = in.d.to_graph();
    in.from_drawing = true;
  } else {
    in.g = graph_from_json(j);
  }
  return in;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_gen(int n, std::uint64_t seed, double p, double q,
            const std::string& fixed) {
  Drawing d;
  json meta;
  if (!fixed.empty()) {
    d = fixed_instance(fixed);
    meta = {{"generator", "fixed"}, {"name", fixed}};
  } else {
    GenConfig cfg{n, seed, p, q};
    d = generate(cfg);
    meta = {{"generator", "random-1planar"},
            {"n", n},
            {"seed", seed},
            {"crossing_fraction", p},
            {"deletion_fraction", q}};
  }
  auto j = drawing_to_json(d);
  j["meta"] = meta;
  emit(j);
  std::cerr << "generated " << d.vertex_count() << " vertices, "
            << d.edge_count() << " edges, " << d.crossing_count()
            << " crossings\n";
  return kPass;
}

int cmd_validate(const std::string& file) {
  auto d = drawing_from_json(read_json_file(file));
  auto rep = d.validate(false);
  json j{{"ok", rep.ok()}, {"violations", rep.violations}};
  j["vertices"] = d.vertex_count();
  j["edges"] = d.edge_count();
  j["crossings"] = d.crossing_count();
  emit(j);
  return rep.ok() ? kPass : kCheckFailed;
}

int cmd_match(const std::string& file, int k) {
  auto in = read_graph_input(file);
  auto m = eliminate_bounded_augmenting_paths(
      in.g, Matching::from_edges(in.g.n(), {}), k);
  json j{{"matching", matching_to_json(m)},
         {"stats",
          {{"n", in.g.n()},
           {"m", in.g.m()},
           {"k", k},
           {"size", m.size()},
           {"free", static_cast<int>(free_vertices(in.g, m).size())}}}};
  emit(j);
  return kPass;
}

int cmd_audit(const std::string& file, int k, const std::string& matching_file,
              const std::string& dump_dir) {
  auto j = read_json_file(file);
  if (!is_drawing_json(j))
    throw std::invalid_argument("audit needs a drawing, not a plain graph");
  auto d = drawing_from_json(j);
  auto [g, ids] = d.to_graph();
  Matching m;
  if (!matching_file.empty())
    m = matching_from_json(read_json_file(matching_file), g.n());
  else
    m = eliminate_bounded_augmenting_paths(g, Matching::from_edges(g.n(), {}), k);

  auto rep = audit_instance(d, m, k);
  auto out = audit_report_to_json(rep);
  out["matching"] = matching_to_json(m);

  if (!dump_dir.empty() && k == 9 && rep.ok()) {
    auto flowers = find_stem_blossoms(g, m, find_cycle_flowers(g, m));
    auto dec = alternating_levels(g, m, flowers);
    auto labeled = build_H(d, ids, g, m, flowers, dec);
    auto st = run_pipeline(labeled,
                           matching_in_drawing_ids(dec, ids, labeled.T_H));
    std::filesystem::create_directories(dump_dir);
    auto dump = [&](const char* name, const Drawing& stage) {
      std::ofstream f(std::filesystem::path(dump_dir) / name);
      f << drawing_to_json(stage).dump(2) << "\n";
    };
    dump("hplus.json", st.Hplus);
    dump("i.json", st.I);
    dump("j.json", st.J);
    dump("jminus.json", st.Jminus);
    std::cerr << "pipeline stages written to " << dump_dir << "\n";
  }
  emit(out);
  return rep.ok() ? kPass : kCheckFailed;
}

int cmd_oracle(const std::string& file) {
  auto in = read_graph_input(file);
  auto m = brute_force_maximum_matching(in.g);
  emit(json{{"matching", matching_to_json(m)}, {"size", m.size()}});
  return kPass;
}

int cmd_bound(int n, int delta, int k) {
  auto b = theorem_bound(n, delta, k);
  emit(json{{"n", n}, {"delta", delta}, {"k", k},
            {"num", b.num}, {"den", b.den}});
  std::cerr << "minimum matching size: " << b.num;
  if (b.den != 1) std::cerr << "/" << b.den;
  std::cerr << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-planar matching bound toolkit"};
  app.require_subcommand(1);

  int n = 16, delta = 3, k = 9;
  std::uint64_t seed = 0;
  double p = 0.0, q = 0.0;
  std::string file, matching_file, dump_dir, fixed;

  auto* gen = app.add_subcommand("gen", "generate a seeded 1-planar drawing");
  gen->add_option("--n", n, "vertex count")->check(CLI::Range(4, 1 << 20));
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--crossings", p, "crossing fraction")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--sparsify", q, "deletion fraction")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--fixed", fixed, "named instance instead of random");

  auto* validate = app.add_subcommand("validate", "check a drawing file");
  validate->add_option("file", file)->required();

  auto* match = app.add_subcommand("match", "eliminate short augmenting paths");
  match->add_option("--k", k, "maximum augmenting path length");
  match->add_option("file", file)->required();

  auto* audit = app.add_subcommand("audit", "run the full inequality audit");
  audit->add_option("--k", k, "audit variant (3 or 9)");
  audit->add_option("--matching", matching_file, "matching JSON to audit");
  audit->add_option("--dump-stages", dump_dir, "directory for pipeline stages");
  audit->add_option("file", file)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force maximum matching");
  oracle->add_option("file", file)->required();

  auto* bound = app.add_subcommand("bound", "matching-size lower bound");
  bound->add_option("--n", n)->required();
  bound->add_option("--delta", delta)->required();
  bound->add_option("--k", k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kBadInput;
  }

  if (const char* env_seed = std::getenv("ONEMATCH_SEED"))
    seed = std::strtoull(env_seed, nullptr, 10);

  try {
    if (*gen) return cmd_gen(n, seed, p, q, fixed);
    if (*validate) return cmd_validate(file);
    if (*match) return cmd_match(file, k);
    if (*audit) return cmd_audit(file, k, matching_file, dump_dir);
    if (*oracle) return cmd_oracle(file);
    if (*bound) return cmd_bound(n, delta, k);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kBadInput;
}

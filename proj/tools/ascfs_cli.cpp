#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ascfs/analytic.hpp"
#include "ascfs/classify.hpp"
#include "ascfs/errors.hpp"
#include "ascfs/experiments.hpp"
#include "ascfs/graph.hpp"
#include "ascfs/squares.hpp"

namespace {

enum ExitStatus : int {
  kOk = 0,
  kPropertyFalse = 1,
  kUsage = 2,
  kResource = 3,
};

ascfs::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  return ascfs::read_graph(in);
}

nlohmann::json vertex_list(const ascfs::VertexSet& s) {
  auto arr = nlohmann::json::array();
  for (std::uint32_t v : s.members()) arr.push_back(v);
  return arr;
}

std::string joined(const ascfs::VertexSet& s) {
  std::string out;
  for (std::uint32_t v : s.members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out.empty() ? "(none)" : out;
}

struct GenArgs {
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<double> alpha;
  std::string rule = "as";
  std::uint64_t seed = 0;
  std::string out_path;
  std::uint64_t mem_cap = ascfs::kDefaultAdjacencyCap;
};

int cmd_gen(const GenArgs& args) {
  if (args.p.has_value() == args.alpha.has_value())
    throw std::invalid_argument("give exactly one of --p or --alpha");
  double p = 0.0;
  if (args.p) {
    p = *args.p;
  } else {
    p = ascfs::resolve_density(ascfs::density_rule_from_token(args.rule),
                               *args.alpha, args.n);
  }
  std::cerr << "resolved p = " << p << '\n';
  ascfs::Graph g = ascfs::generate_gnp({args.n, p, args.seed}, args.mem_cap);
  if (args.out_path.empty()) {
    ascfs::write_graph(g, std::cout);
  } else {
    std::ofstream out(args.out_path);
    if (!out) throw std::invalid_argument("cannot open \"" + args.out_path + "\"");
    ascfs::write_graph(g, out);
  }
  return kOk;
}

int report_as(const ascfs::Graph& g, bool as_json) {
  const ascfs::AsResult r = ascfs::is_as(g);
  if (as_json) {
    nlohmann::json j{{"schema_version", 1},
                     {"property", "as"},
                     {"n", g.order()},
                     {"m", g.edge_count()},
                     {"holds", r.verdict},
                     {"blocks_examined", r.blocks_examined}};
    if (r.witness) {
      j["witness"] = {{"ends", {r.witness->w, r.witness->w_prime}},
                      {"core", vertex_list(r.witness->core)}};
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "augmented suspension: " << (r.verdict ? "yes" : "no") << '\n'
              << "blocks examined: " << r.blocks_examined << '\n';
    if (r.witness)
      std::cout << "witness ends: " << r.witness->w << ' ' << r.witness->w_prime
                << '\n'
                << "witness core: " << joined(r.witness->core) << '\n';
  }
  return r.verdict ? kOk : kPropertyFalse;
}

int report_cfs(const ascfs::Graph& g, bool as_json) {
  ascfs::CfsResult r = ascfs::is_cfs(g);
  ascfs::ensure_cfs_witness(g, r);
  std::string reason;
  if (!r.verdict) {
    bool any_square = !ascfs::for_each_square(
        g, [](const ascfs::Square&) { return false; });
    reason = any_square
                 ? "no square-graph component supports every vertex outside "
                   "the clique factor"
                 : "no induced 4-cycles outside clique factor";
  }
  if (as_json) {
    nlohmann::json j{{"schema_version", 1},
                     {"property", "cfs"},
                     {"n", g.order()},
                     {"m", g.edge_count()},
                     {"holds", r.verdict},
                     {"clique_factor", vertex_list(r.clique_factor)}};
    if (r.verdict) {
      j["witness"] = {{"component", *r.witness_component},
                      {"support", vertex_list(*r.witness_support)}};
    } else {
      j["reason"] = reason;
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "constructed from squares: " << (r.verdict ? "yes" : "no") << '\n'
              << "clique factor: " << joined(r.clique_factor) << '\n';
    if (r.verdict)
      std::cout << "witness component: " << *r.witness_component << '\n'
                << "witness support: " << joined(*r.witness_support) << '\n';
    else
      std::cout << "reason: " << reason << '\n';
  }
  return r.verdict ? kOk : kPropertyFalse;
}

int report_join(const ascfs::Graph& g, bool as_json) {
  const ascfs::JoinResult r = ascfs::is_nontrivial_join(g);
  if (as_json) {
    nlohmann::json j{{"schema_version", 1},
                     {"property", "join"},
                     {"n", g.order()},
                     {"m", g.edge_count()},
                     {"holds", r.present}};
    if (r.parts) {
      j["parts"] = {{"a", vertex_list(r.parts->first)},
                    {"b", vertex_list(r.parts->second)}};
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "nontrivial join: " << (r.present ? "yes" : "no") << '\n';
    if (r.parts)
      std::cout << "part a: " << joined(r.parts->first) << '\n'
                << "part b: " << joined(r.parts->second) << '\n';
  }
  return r.present ? kOk : kPropertyFalse;
}

int report_coxeter(const ascfs::Graph& g, bool as_json) {
  const ascfs::Classification c = ascfs::classify(g);
  if (as_json) {
    nlohmann::json j{{"schema_version", 1},
                     {"property", "coxeter"},
                     {"n", g.order()},
                     {"m", g.edge_count()},
                     {"label", ascfs::to_string(c.label)},
                     {"as", c.as.verdict},
                     {"cfs", c.cfs.verdict},
                     {"join", c.join.present}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "label: " << ascfs::to_string(c.label) << '\n'
              << "augmented suspension: " << (c.as.verdict ? "yes" : "no") << '\n'
              << "constructed from squares: " << (c.cfs.verdict ? "yes" : "no")
              << '\n'
              << "nontrivial join: " << (c.join.present ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& path, const std::string& property, bool as_json) {
  ascfs::Graph g = load_graph(path);
  if (property == "as") return report_as(g, as_json);
  if (property == "cfs") return report_cfs(g, as_json);
  if (property == "join") return report_join(g, as_json);
  if (property == "coxeter") return report_coxeter(g, as_json);
  throw std::invalid_argument("unknown property \"" + property + "\"");
}

struct SweepArgs {
  std::string config_path;
  std::string property = "as";
  std::string rule = "as";
  std::vector<std::size_t> n_values;
  std::vector<double> alpha_values;
  std::vector<std::size_t> n_range;      // start stop step
  std::vector<double> alpha_range;       // start stop step
  std::size_t trials = 400;
  std::uint64_t seed = 0;
  bool metric_support_fraction = false;
  bool metric_blocks_examined = false;
  std::string out_path;
};

ascfs::SweepConfig sweep_config_from(const SweepArgs& args) {
  if (!args.config_path.empty()) {
    if (!args.n_values.empty() || !args.alpha_values.empty() ||
        !args.n_range.empty() || !args.alpha_range.empty())
      throw std::invalid_argument("--config excludes inline grid flags");
    std::ifstream in(args.config_path);
    if (!in) throw std::invalid_argument("cannot open \"" + args.config_path + "\"");
    std::ostringstream text;
    text << in.rdbuf();
    return ascfs::parse_sweep_config(text.str());
  }
  ascfs::SweepConfig config;
  config.property = ascfs::property_from_token(args.property);
  config.density_rule = ascfs::density_rule_from_token(args.rule);
  config.n_values = args.n_values;
  if (!args.n_range.empty()) {
    if (args.n_range.size() != 3 || args.n_range[2] == 0 ||
        args.n_range[0] > args.n_range[1])
      throw std::invalid_argument("--n-range wants START STOP STEP");
    for (std::size_t n = args.n_range[0]; n <= args.n_range[1];
         n += args.n_range[2])
      config.n_values.push_back(n);
  }
  config.alpha_values = args.alpha_values;
  if (!args.alpha_range.empty()) {
    if (args.alpha_range.size() != 3 || !(args.alpha_range[2] > 0.0) ||
        args.alpha_range[0] > args.alpha_range[1])
      throw std::invalid_argument("--alpha-range wants START STOP STEP");
    for (std::size_t k = 0;; ++k) {
      const double a = args.alpha_range[0] + args.alpha_range[2] * k;
      if (a > args.alpha_range[1] + args.alpha_range[2] * 1e-9) break;
      config.alpha_values.push_back(a);
    }
  }
  config.trials_per_cell = args.trials;
  config.base_seed = args.seed;
  config.metrics.support_fraction = args.metric_support_fraction;
  config.metrics.blocks_examined = args.metric_blocks_examined;
  return config;
}

int cmd_sweep(const SweepArgs& args) {
  const ascfs::SweepConfig config = sweep_config_from(args);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) throw std::invalid_argument("cannot open \"" + args.out_path + "\"");
    out = &file;
  }
  *out << ascfs::kCsvHeader << '\n';
  try {
    ascfs::run_sweep(config, [&](const ascfs::SweepRecord& rec) {
      ascfs::write_csv_row(*out, rec);
      out->flush();
    });
  } catch (const ascfs::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n'
              << "partial results were written for completed cells\n";
    return kResource;
  }
  return kOk;
}

int cmd_thresholds(std::size_t n) {
  const std::pair<const char*, ascfs::ThresholdKind> rows[] = {
      {"connectivity", ascfs::ThresholdKind::kConnectivity},
      {"as", ascfs::ThresholdKind::kAs},
      {"cfs-upper", ascfs::ThresholdKind::kCfsUpper},
      {"cfs-lower", ascfs::ThresholdKind::kCfsLower},
      {"cfs-conjectured", ascfs::ThresholdKind::kCfsConjectured},
  };
  for (const auto& [name, kind] : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-16s %.6g", name,
                  ascfs::threshold(kind, n));
    std::cout << buf << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random graph workbench: suspension and squares properties"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a seeded G(n, p) graph");
  gen->add_option("--n", gen_args.n, "vertex count")->required();
  double p_opt = 0.0, alpha_opt = 0.0;
  auto* p_flag = gen->add_option("--p", p_opt, "edge probability");
  auto* alpha_flag = gen->add_option("--alpha", alpha_opt, "density multiplier");
  gen->add_option("--rule", gen_args.rule,
                  "density rule: as | inv-sqrt | log-over-n | absolute");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--out", gen_args.out_path, "output file (stdout if absent)");
  gen->add_option("--mem-cap", gen_args.mem_cap, "adjacency memory cap in bytes");

  std::string check_path, check_property;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "decide a property of a graph file");
  check->add_option("--in", check_path, "graph file")->required();
  check->add_option("--property", check_property, "as | cfs | join | coxeter")
      ->required();
  check->add_flag("--json", check_json, "emit a single-line JSON report");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "run a Monte Carlo grid, emit CSV");
  sweep->add_option("--config", sweep_args.config_path, "JSON sweep config");
  sweep->add_option("--property", sweep_args.property, "as | cfs | connected");
  sweep->add_option("--rule", sweep_args.rule,
                    "density rule: as | inv-sqrt | log-over-n | absolute");
  sweep->add_option("--n", sweep_args.n_values, "grid n values");
  sweep->add_option("--alpha", sweep_args.alpha_values, "grid alpha values");
  sweep->add_option("--n-range", sweep_args.n_range,
                    "inclusive n range START STOP STEP");
  sweep->add_option("--alpha-range", sweep_args.alpha_range,
                    "inclusive alpha range START STOP STEP");
  sweep->add_option("--trials", sweep_args.trials, "trials per cell");
  sweep->add_option("--seed", sweep_args.seed, "base seed");
  sweep->add_flag("--metric-support-fraction", sweep_args.metric_support_fraction,
                  "record mean largest support fraction");
  sweep->add_flag("--metric-blocks-examined", sweep_args.metric_blocks_examined,
                  "record mean blocks examined");
  sweep->add_option("--out", sweep_args.out_path, "CSV file (stdout if absent)");

  std::size_t thresholds_n = 0;
  auto* thresholds =
      app.add_subcommand("thresholds", "print density benchmarks for one n");
  thresholds->add_option("--n", thresholds_n, "vertex count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      if (p_flag->count()) gen_args.p = p_opt;
      if (alpha_flag->count()) gen_args.alpha = alpha_opt;
      return cmd_gen(gen_args);
    }
    if (check->parsed()) return cmd_check(check_path, check_property, check_json);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
    if (thresholds->parsed()) return cmd_thresholds(thresholds_n);
  } catch (const ascfs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ascfs::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

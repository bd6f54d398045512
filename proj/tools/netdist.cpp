// Command line front end: invariant reports, distance bounds, exact
// distances, pairwise matrices, clustering, and network generators.
//
// Exit codes: 0 success, 2 usage or parse problem, 3 enumeration guard hit.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <glob.h>
#include <json.hpp>

#include "netdist/analysis.hpp"
#include "netdist/bounds.hpp"
#include "netdist/exact.hpp"
#include "netdist/generators.hpp"
#include "netdist/invariants.hpp"
#include "netdist/io.hpp"
#include "netdist/network.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_guard = 3;

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::size_t env_guard_or(std::size_t fallback) {
  if (const char* raw = std::getenv("NETDIST_GUARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0)
      throw netdist::parameter_error("NETDIST_GUARD must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return fallback;
}

bool is_meta_sidecar(const std::string& path) {
  static const std::string tail = ".meta.json";
  return path.size() > tail.size() && path.compare(path.size() - tail.size(), tail.size(), tail) == 0;
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  glob_t results;
  const int rc = ::glob(pattern.c_str(), 0, nullptr, &results);
  std::vector<std::string> paths;
  if (rc == 0)
    for (std::size_t i = 0; i < results.gl_pathc; ++i) {
      std::string path = results.gl_pathv[i];
      // sim-hippocampus drops a .meta.json next to every network, so a plain
      // *.json pattern over its output directory would choke on sidecars
      if (is_meta_sidecar(path)) continue;
      paths.emplace_back(std::move(path));
    }
  globfree(&results);
  if (rc != 0 && rc != GLOB_NOMATCH)
    throw netdist::validation_error("cannot expand pattern " + pattern);
  return paths;
}

std::string stem_of(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

std::string real_set_text(const netdist::real_set& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += ", ";
    out += netdist::format_real(s.values[i]);
  }
  return out + "}";
}

void run_invariants(const std::string& path, double missing, bool as_json) {
  const netdist::network x = netdist::load_network_auto(path, missing);
  const auto traces = netdist::trace_set(x);
  const auto outs = netdist::out_set(x);
  const auto ins = netdist::in_set(x);
  const auto spec = netdist::spec_global(x);
  if (as_json) {
    nlohmann::json doc;
    doc["nodes"] = x.size();
    doc["diam"] = netdist::diam(x);
    doc["m_out"] = netdist::m_out(x);
    doc["m_in"] = netdist::m_in(x);
    doc["trace_set"] = traces.values;
    doc["out_set"] = outs.values;
    doc["in_set"] = ins.values;
    doc["spec_global"] = spec.values;
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::cout << "nodes: " << x.size() << '\n'
            << "diam: " << netdist::format_real(netdist::diam(x)) << '\n'
            << "m_out: " << netdist::format_real(netdist::m_out(x)) << '\n'
            << "m_in: " << netdist::format_real(netdist::m_in(x)) << '\n'
            << "trace_set: " << real_set_text(traces) << '\n'
            << "out_set: " << real_set_text(outs) << '\n'
            << "in_set: " << real_set_text(ins) << '\n'
            << "spec_global: " << real_set_text(spec) << '\n';
}

void run_bound(const std::string& method_name, const std::string& path_a,
               const std::string& path_b, double missing) {
  const auto method = netdist::bound_method_from_string(method_name);
  if (!method) {
    std::string names;
    for (netdist::bound_method m : netdist::all_bound_methods) {
      if (!names.empty()) names += ", ";
      names += std::string(netdist::to_string(m));
    }
    throw CLI::ValidationError("--method", "unknown method '" + method_name +
                                               "'; available: " + names);
  }
  const netdist::network a = netdist::load_network_auto(path_a, missing);
  const netdist::network b = netdist::load_network_auto(path_b, missing);
  std::cout << format_sig(netdist::lower_bound(a, b, *method), 12) << '\n';
}

void run_exact(const std::string& method, const std::string& path_a, const std::string& path_b,
               std::optional<std::size_t> guard_flag, double missing) {
  const netdist::network a = netdist::load_network_auto(path_a, missing);
  const netdist::network b = netdist::load_network_auto(path_b, missing);
  double value = 0.0;
  if (method == "dn") {
    const std::size_t guard =
        guard_flag ? *guard_flag : env_guard_or(netdist::default_cell_guard);
    value = netdist::dn_exact(a, b, guard);
  } else if (method == "dnhat") {
    const std::size_t guard =
        guard_flag ? *guard_flag : env_guard_or(netdist::default_bijection_guard);
    value = netdist::dnhat_exact(a, b, guard);
  } else {
    throw CLI::ValidationError("--method", "unknown method '" + method +
                                               "'; available: dn, dnhat");
  }
  std::cout << format_sig(value, 12) << '\n';
}

void run_matrix(const std::string& method_name, const std::vector<std::string>& inputs,
                const std::string& pattern, bool normalize, unsigned jobs,
                const std::string& out_path, double missing) {
  const auto method = netdist::matrix_method_from_string(method_name);
  if (!method) {
    std::string names;
    for (const std::string& n : netdist::matrix_method_names()) {
      if (!names.empty()) names += ", ";
      names += n;
    }
    throw CLI::ValidationError("--method", "unknown method '" + method_name +
                                               "'; available: " + names);
  }
  std::vector<std::string> paths = inputs;
  if (!pattern.empty()) {
    const std::vector<std::string> matched = expand_glob(pattern);
    paths.insert(paths.end(), matched.begin(), matched.end());
  }
  if (paths.size() < 2)
    throw CLI::ValidationError("inputs", "need at least two network files");
  std::vector<netdist::network> dataset;
  std::vector<std::string> labels;
  dataset.reserve(paths.size());
  for (const std::string& p : paths) {
    dataset.push_back(netdist::load_network_auto(p, missing));
    labels.push_back(stem_of(p));
  }
  const std::size_t guard = env_guard_or(netdist::default_cell_guard);
  const netdist::distance_matrix d =
      netdist::compute_distance_matrix(dataset, labels, *method, normalize, jobs, guard);
  const std::string csv = netdist::distance_matrix_to_csv(d);
  if (out_path.empty())
    std::cout << csv;
  else
    netdist::write_file_atomic(out_path, csv);
}

void run_cluster(const std::string& matrix_path, const std::string& out_path,
                 const std::string& format) {
  const netdist::distance_matrix d = netdist::load_distance_matrix(matrix_path);
  const netdist::dendrogram tree = netdist::single_linkage(d);
  std::string body;
  if (format == "json")
    body = netdist::dendrogram_to_json(tree);
  else if (format == "newick")
    body = netdist::dendrogram_to_newick(tree);
  else
    throw CLI::ValidationError("--format", "unknown format '" + format +
                                               "'; available: json, newick");
  if (out_path.empty())
    std::cout << body;
  else
    netdist::write_file_atomic(out_path, body);
}

void run_gen(const std::string& kind, double alpha, std::size_t n, double rho,
             const std::string& out_path) {
  netdist::network net = [&] {
    if (kind == "n1") return netdist::n1(alpha);
    if (kind == "circle") return netdist::circle(n);
    if (kind == "circle-rev") return netdist::circle_rev(n, rho);
    throw CLI::ValidationError("--kind", "unknown kind '" + kind +
                                             "'; available: n1, circle, circle-rev");
  }();
  if (out_path.empty())
    std::cout << netdist::network_to_json(net);
  else
    netdist::save_network(net, out_path);
}

void run_sim_hippocampus(std::size_t cells, std::size_t steps, double radius,
                         const std::string& env_name, std::uint64_t seed, std::size_t window,
                         double step_len, const std::string& out_path) {
  netdist::environment env;
  if (env_name == "square")
    env = netdist::square_environment(1.0);
  else if (env_name == "one-hole")
    env = netdist::one_hole_environment(1.0);
  else
    throw CLI::ValidationError("--env", "unknown environment '" + env_name +
                                            "'; available: square, one-hole");
  const auto trajectory = netdist::simulate_trajectory(env, steps, step_len, seed);
  const auto centers = netdist::place_fields(env, cells, radius, seed);
  const auto raster = netdist::make_spike_raster(trajectory, centers, radius);
  const netdist::network net = netdist::hippocampal_network(raster, window);
  netdist::save_network(net, out_path);

  nlohmann::json meta;
  meta["env"] = env_name;
  meta["side"] = env.side;
  if (env.hole_radius) meta["hole_radius"] = *env.hole_radius;
  meta["cells"] = cells;
  meta["steps"] = steps;
  meta["radius"] = radius;
  meta["seed"] = seed;
  meta["window"] = window;
  meta["step_len"] = step_len;
  netdist::write_file_atomic(out_path + ".meta.json", meta.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed weighted network comparison toolkit"};
  app.require_subcommand(1);

  std::string in_a, in_b, out_path, pattern;
  std::string method = "spec_local_both";
  std::string exact_method = "dn";
  std::string cluster_format = "json";
  std::string gen_kind, env_name = "square";
  std::vector<std::string> inputs;
  double missing = 0.0;
  bool as_json = false;
  bool normalize = false;
  unsigned jobs = 1;
  std::optional<std::size_t> guard_flag;
  double alpha = 0.0, rho = 1.0, radius = 0.1, step_len = 0.1;
  std::size_t gen_n = 1, cells = 200, steps = 5000, window = 5;
  std::uint64_t seed = 0;

  CLI::App* cmd_invariants = app.add_subcommand("invariants", "Report the invariants of one network");
  cmd_invariants->add_option("file", in_a, "network file (JSON, CSV, or .tsv edge list)")->required();
  cmd_invariants->add_flag("--json", as_json, "emit a JSON document");
  cmd_invariants->add_option("--missing", missing, "fill value for absent edge-list pairs");

  CLI::App* cmd_bound = app.add_subcommand("bound", "Print a lower bound on the network distance");
  cmd_bound->add_option("--method", method, "bound method (default spec_local_both)");
  cmd_bound->add_option("fileA", in_a)->required();
  cmd_bound->add_option("fileB", in_b)->required();
  cmd_bound->add_option("--missing", missing, "fill value for absent edge-list pairs");

  CLI::App* cmd_exact = app.add_subcommand("exact", "Print an exact network distance");
  cmd_exact->add_option("--method", exact_method, "dn or dnhat (default dn)");
  cmd_exact->add_option("fileA", in_a)->required();
  cmd_exact->add_option("fileB", in_b)->required();
  cmd_exact->add_option("--guard", guard_flag, "enumeration guard override");
  cmd_exact->add_option("--missing", missing, "fill value for absent edge-list pairs");

  CLI::App* cmd_matrix = app.add_subcommand("matrix", "Pairwise distance or bound matrix as CSV");
  cmd_matrix->add_option("--method", method, "pairwise method (default spec_local_both)");
  cmd_matrix->add_option("--glob", pattern, "shell pattern matching network files");
  cmd_matrix->add_option("files", inputs, "explicit network files");
  cmd_matrix->add_flag("--normalize-diam", normalize, "divide each network by its diameter first");
  cmd_matrix->add_option("--jobs", jobs, "worker threads (1 = serial)");
  cmd_matrix->add_option("-o,--output", out_path, "output CSV path (default stdout)");
  cmd_matrix->add_option("--missing", missing, "fill value for absent edge-list pairs");

  CLI::App* cmd_cluster = app.add_subcommand("cluster", "Single-linkage dendrogram from a matrix CSV");
  cmd_cluster->add_option("matrix", in_a, "distance matrix CSV")->required();
  cmd_cluster->add_option("-o,--output", out_path, "output path (default stdout)");
  cmd_cluster->add_option("--format", cluster_format, "json or newick (default json)");

  CLI::App* cmd_gen = app.add_subcommand("gen", "Generate a reference network");
  cmd_gen->add_option("--kind", gen_kind, "n1, circle, or circle-rev")->required();
  cmd_gen->add_option("--alpha", alpha, "self-weight for n1");
  cmd_gen->add_option("--n", gen_n, "node count for circles");
  cmd_gen->add_option("--rho", rho, "reversibility parameter for circle-rev (>= 1)");
  cmd_gen->add_option("-o,--output", out_path, "output path (default stdout)");

  CLI::App* cmd_sim = app.add_subcommand("sim-hippocampus",
                                         "Simulate a place-cell network from a random walk");
  cmd_sim->add_option("--cells", cells, "place cell count (default 200)");
  cmd_sim->add_option("--steps", steps, "walk steps (default 5000)");
  cmd_sim->add_option("--radius", radius, "place field radius as a fraction of the side (default 0.1)");
  cmd_sim->add_option("--env", env_name, "square or one-hole (default square)");
  cmd_sim->add_option("--seed", seed, "random seed");
  cmd_sim->add_option("--window", window, "co-firing window in steps (default 5)");
  cmd_sim->add_option("--step-len", step_len, "walk step length (default 0.1)");
  cmd_sim->add_option("-o,--output", out_path, "output network path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (app.got_subcommand(cmd_invariants)) run_invariants(in_a, missing, as_json);
    else if (app.got_subcommand(cmd_bound)) run_bound(method, in_a, in_b, missing);
    else if (app.got_subcommand(cmd_exact)) run_exact(exact_method, in_a, in_b, guard_flag, missing);
    else if (app.got_subcommand(cmd_matrix))
      run_matrix(method, inputs, pattern, normalize, jobs, out_path, missing);
    else if (app.got_subcommand(cmd_cluster)) run_cluster(in_a, out_path, cluster_format);
    else if (app.got_subcommand(cmd_gen)) run_gen(gen_kind, alpha, gen_n, rho, out_path);
    else if (app.got_subcommand(cmd_sim))
      run_sim_hippocampus(cells, steps, radius, env_name, seed, window, step_len, out_path);
  } catch (const netdist::size_error& e) {
    std::cerr << "error: " << e.what() << "\nhint: use 'bound' for sizes beyond the exact guards\n";
    return exit_guard;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}

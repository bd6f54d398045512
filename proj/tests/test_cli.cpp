// End-to-end checks of the command line tool. Each case shells out to the
// real binary (path from NETDIST_CLI, set by ctest) with scratch files under
// the system temp directory, then compares stdout, stderr, and exit codes
// against values computed through the library.

#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "netdist/analysis.hpp"
#include "netdist/bounds.hpp"
#include "netdist/generators.hpp"
#include "netdist/invariants.hpp"
#include "netdist/io.hpp"
#include "netdist/network.hpp"

namespace {

using namespace netdist;

const std::string& cli_path() {
  static const std::string path = [] {
    if (const char* env = std::getenv("NETDIST_CLI")) return std::string(env);
    for (const char* guess : {"tools/netdist", "build/tools/netdist", "../tools/netdist"})
      if (std::filesystem::exists(guess)) return std::filesystem::absolute(guess).string();
    return std::string();
  }();
  REQUIRE_MESSAGE(!path.empty(), "set NETDIST_CLI to the built netdist binary");
  return path;
}

const std::filesystem::path& work_dir() {
  static const std::filesystem::path dir = [] {
    const auto d = std::filesystem::temp_directory_path() /
                   ("netdist-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::filesystem::path scratch(const std::string& name) { return work_dir() / name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path spill(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

struct cli_result {
  int code = -1;
  std::string out, err;
};

cli_result run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const auto out = scratch("stdout-" + std::to_string(counter));
  const auto err = scratch("stderr-" + std::to_string(counter));
  ++counter;
  const std::string cmd = env_prefix + cli_path() + " " + args + " > " + out.string() + " 2> " +
                          err.string();
  const int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  REQUIRE(WIFEXITED(raw));
  return {WEXITSTATUS(raw), slurp(out), slurp(err)};
}

double parse_stdout_number(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  CHECK(used > 0);
  return v;
}

const char* pair_a_csv = "0,5,2\n3,1,4\n1,4,3\n";
const char* pair_b_csv = "3,4,2\n3,1,5\n3,3,4\n";

}  // namespace

TEST_CASE("cli invariants reads csv and json identically") {
  const auto csv = spill("inv-x.csv", pair_a_csv);
  const network x = make_network(matrix{{0, 5, 2}, {3, 1, 4}, {1, 4, 3}});
  const auto json = spill("inv-x.json", network_to_json(x));

  const cli_result from_csv = run_cli("invariants " + csv.string());
  const cli_result from_json = run_cli("invariants " + json.string());
  CHECK(from_csv.code == 0);
  CHECK(from_json.code == 0);
  CHECK(from_csv.out == from_json.out);
  CHECK(from_csv.out.find("nodes: 3") != std::string::npos);
  CHECK(from_csv.out.find("diam: 5") != std::string::npos);
  CHECK(from_csv.out.find("trace_set: {0, 1, 3}") != std::string::npos);
}

TEST_CASE("cli invariants json document carries the library values") {
  const network x = make_network(matrix{{0, 5, 2}, {3, 1, 4}, {1, 4, 3}});
  const auto path = spill("inv-doc.json", network_to_json(x));
  const cli_result r = run_cli("invariants --json " + path.string());
  CHECK(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("nodes").get<std::size_t>() == 3);
  CHECK(doc.at("diam").get<double>() == diam(x));
  CHECK(doc.at("m_out").get<double>() == m_out(x));
  CHECK(doc.at("m_in").get<double>() == m_in(x));
  CHECK(doc.at("trace_set").get<std::vector<double>>() == trace_set(x).values);
  CHECK(doc.at("out_set").get<std::vector<double>>() == out_set(x).values);
  CHECK(doc.at("in_set").get<std::vector<double>>() == in_set(x).values);
  CHECK(doc.at("spec_global").get<std::vector<double>>() == spec_global(x).values);
}

TEST_CASE("cli bound prints the requested lower bound") {
  const auto a = spill("bound-a.csv", pair_a_csv);
  const auto b = spill("bound-b.csv", pair_b_csv);

  const cli_result trace = run_cli("bound --method trace " + a.string() + " " + b.string());
  CHECK(trace.code == 0);
  CHECK(parse_stdout_number(trace.out) == doctest::Approx(0.5).epsilon(1e-12));

  // The default method is the sharpest polynomial one.
  const cli_result def = run_cli("bound " + a.string() + " " + b.string());
  CHECK(def.code == 0);
  CHECK(parse_stdout_number(def.out) == doctest::Approx(1.0).epsilon(1e-12));

  const cli_result self = run_cli("bound " + a.string() + " " + a.string());
  CHECK(self.code == 0);
  CHECK(parse_stdout_number(self.out) == 0.0);
}

TEST_CASE("cli bound rejects unknown methods and lists the real ones") {
  const auto a = spill("bound-list-a.csv", "1\n");
  const cli_result r = run_cli("bound --method nope " + a.string() + " " + a.string());
  CHECK(r.code == 2);
  CHECK(r.err.find("nope") != std::string::npos);
  CHECK(r.err.find("trace") != std::string::npos);
  CHECK(r.err.find("spec_local_both") != std::string::npos);
}

TEST_CASE("cli exact computes both distances on the fused pair") {
  const auto x = spill("exact-x.csv", "1,0,1\n0,0,0\n1,0,1\n");
  const auto y = spill("exact-y.csv", "0,0,0\n0,0,0\n0,0,1\n");

  const cli_result dn = run_cli("exact --method dn " + x.string() + " " + y.string());
  CHECK(dn.code == 0);
  CHECK(parse_stdout_number(dn.out) == 0.0);

  const cli_result dnhat = run_cli("exact --method dnhat " + x.string() + " " + y.string());
  CHECK(dnhat.code == 0);
  CHECK(parse_stdout_number(dnhat.out) == doctest::Approx(0.5).epsilon(1e-12));

  const auto p = spill("exact-p.csv", "1\n");
  const auto q = spill("exact-q.csv", "2\n");
  const cli_result points = run_cli("exact " + p.string() + " " + q.string());
  CHECK(points.code == 0);
  CHECK(parse_stdout_number(points.out) == doctest::Approx(0.5).epsilon(1e-12));

  const cli_result bad = run_cli("exact --method dx " + p.string() + " " + q.string());
  CHECK(bad.code == 2);

  // Bijection distance on mismatched sizes is a usage problem, not a guard.
  const cli_result mismatch = run_cli("exact --method dnhat " + p.string() + " " + x.string());
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find("error:") != std::string::npos);
}

TEST_CASE("cli exact honors the guard flag and environment override") {
  const auto a = spill("guard-a.csv", pair_a_csv);
  const auto b = spill("guard-b.csv", pair_b_csv);
  const std::string pair = a.string() + " " + b.string();

  const cli_result blocked = run_cli("exact --guard 5 " + pair);
  CHECK(blocked.code == 3);
  CHECK(blocked.err.find("hint") != std::string::npos);

  const cli_result env_blocked = run_cli("exact " + pair, "NETDIST_GUARD=5 ");
  CHECK(env_blocked.code == 3);

  // An explicit flag wins over the environment.
  const cli_result flag_wins = run_cli("exact --guard 9 " + pair, "NETDIST_GUARD=5 ");
  CHECK(flag_wins.code == 0);
  CHECK(parse_stdout_number(flag_wins.out) == doctest::Approx(1.5).epsilon(1e-12));

  const cli_result bad_env = run_cli("exact " + pair, "NETDIST_GUARD=soon ");
  CHECK(bad_env.code == 2);
}

TEST_CASE("cli matrix output feeds straight into cluster") {
  const auto a = spill("mx-a.csv", "1\n");
  const auto b = spill("mx-b.csv", "2\n");
  const auto c = spill("mx-c.csv", "9\n");
  const auto out = scratch("mx.csv");
  const cli_result r = run_cli("matrix --method dn " + a.string() + " " + b.string() + " " +
                               c.string() + " -o " + out.string());
  CHECK(r.code == 0);

  const distance_matrix d = load_distance_matrix(out.string());
  REQUIRE(d.labels == std::vector<std::string>{"mx-a", "mx-b", "mx-c"});
  CHECK(d.values(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d.values(0, 2) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(d.values(1, 2) == doctest::Approx(3.5).epsilon(1e-12));

  const cli_result tree = run_cli("cluster " + out.string() + " --format newick");
  CHECK(tree.code == 0);
  CHECK(tree.out.find(");\n") != std::string::npos);
  CHECK(tree.out.find("mx-a") != std::string::npos);

  const cli_result tree_json = run_cli("cluster " + out.string());
  CHECK(tree_json.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(tree_json.out);
  REQUIRE(doc.at("merges").size() == 2);
  CHECK(doc.at("merges")[0][2].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(doc.at("merges")[1][2].get<double>() == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("cli matrix normalization and method selection match the library") {
  const network small = make_network(matrix{{0, 1}, {2, 3}});
  const network doubled = make_network(matrix{{0, 2}, {4, 6}});
  const auto a = spill("norm-a.json", network_to_json(small));
  const auto b = spill("norm-b.json", network_to_json(doubled));
  const std::string pair = a.string() + " " + b.string();

  const cli_result raw = run_cli("matrix --method diam " + pair);
  CHECK(raw.code == 0);
  const distance_matrix raw_d = parse_distance_matrix_csv(raw.out);
  CHECK(raw_d.values(0, 1) == doctest::Approx(lower_bound(small, doubled, bound_method::diam))
                                  .epsilon(1e-12));

  const cli_result normed = run_cli("matrix --method diam --normalize-diam " + pair);
  CHECK(normed.code == 0);
  const distance_matrix normed_d = parse_distance_matrix_csv(normed.out);
  CHECK(normed_d.values(0, 1) == 0.0);

  const cli_result unknown = run_cli("matrix --method nope " + pair);
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("dnhat") != std::string::npos);

  const cli_result lonely = run_cli("matrix --method dn " + a.string());
  CHECK(lonely.code == 2);
}

TEST_CASE("cli matrix accepts globs and is identical across job counts") {
  const auto dir = work_dir() / "glob-nets";
  std::filesystem::create_directories(dir);
  const network nets[] = {make_network(matrix{{0, 5, 2}, {3, 1, 4}, {1, 4, 3}}),
                          make_network(matrix{{3, 4, 2}, {3, 1, 5}, {3, 3, 4}}),
                          make_network(matrix{{1, 0, 1}, {0, 0, 0}, {1, 0, 1}}),
                          make_network(matrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})};
  for (std::size_t i = 0; i < 4; ++i) {
    std::ofstream out(dir / ("gnet-" + std::to_string(i) + ".json"), std::ios::binary);
    out << network_to_json(nets[i]);
  }
  {
    // a simulator sidecar matching the pattern must not be read as a network
    std::ofstream out(dir / "gnet-0.json.meta.json", std::ios::binary);
    out << "{\"env\": \"square\"}\n";
  }
  const std::string pattern = "'" + (dir / "gnet-*.json").string() + "'";
  const auto serial = scratch("jobs-1.csv");
  const auto threaded = scratch("jobs-4.csv");

  const cli_result r1 = run_cli("matrix --method dn --glob " + pattern + " --jobs 1 -o " +
                                serial.string());
  CHECK(r1.code == 0);
  const cli_result r4 = run_cli("matrix --method dn --glob " + pattern + " --jobs 4 -o " +
                                threaded.string());
  CHECK(r4.code == 0);
  const std::string csv1 = slurp(serial);
  CHECK(!csv1.empty());
  CHECK(csv1 == slurp(threaded));

  const distance_matrix d = parse_distance_matrix_csv(csv1);
  REQUIRE(d.labels.size() == 4);
  CHECK(d.labels[0] == "gnet-0");
  CHECK(d.values(2, 3) == 0.0);  // the fused pair is at distance zero
}

TEST_CASE("cli cluster prints exact single linkage output") {
  const auto csv = spill("cl-two.csv", ",a,b\na,0,1\nb,1,0\n");
  const cli_result newick = run_cli("cluster " + csv.string() + " --format newick");
  CHECK(newick.code == 0);
  CHECK(newick.out == "(a:1,b:1);\n");

  const cli_result json = run_cli("cluster " + csv.string() + " --format json");
  CHECK(json.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(json.out);
  CHECK(doc.at("labels") == nlohmann::json({"a", "b"}));
  REQUIRE(doc.at("merges").size() == 1);
  CHECK(doc.at("merges")[0][0].get<int>() == 0);
  CHECK(doc.at("merges")[0][1].get<int>() == 1);
  CHECK(doc.at("merges")[0][2].get<double>() == 1.0);

  const cli_result bad_format = run_cli("cluster " + csv.string() + " --format dot");
  CHECK(bad_format.code == 2);

  const auto lopsided = spill("cl-bad.csv", ",a,b\na,0,1\nb,2,0\n");
  const cli_result asym = run_cli("cluster " + lopsided.string());
  CHECK(asym.code == 2);
}

TEST_CASE("cli gen reproduces the library generators byte for byte") {
  const cli_result circle6 = run_cli("gen --kind circle --n 6");
  CHECK(circle6.code == 0);
  CHECK(circle6.out == network_to_json(circle(6)));
  CHECK(run_cli("gen --kind circle --n 6").out == circle6.out);

  const cli_result point = run_cli("gen --kind n1 --alpha -4");
  CHECK(point.code == 0);
  CHECK(point.out == network_to_json(n1(-4)));

  const cli_result rev = run_cli("gen --kind circle-rev --n 8 --rho 2");
  CHECK(rev.code == 0);
  CHECK(rev.out == network_to_json(circle_rev(8, 2)));

  const cli_result bad_rho = run_cli("gen --kind circle-rev --n 8 --rho 0.5");
  CHECK(bad_rho.code == 2);

  const cli_result bad_kind = run_cli("gen --kind torus");
  CHECK(bad_kind.code == 2);
  CHECK(bad_kind.err.find("circle-rev") != std::string::npos);

  const cli_result empty = run_cli("gen --kind circle --n 0");
  CHECK(empty.code != 0);

  const auto out = scratch("gen-circle.json");
  const cli_result saved = run_cli("gen --kind circle --n 5 -o " + out.string());
  CHECK(saved.code == 0);
  CHECK(slurp(out) == network_to_json(circle(5)));
}

TEST_CASE("cli sim-hippocampus is reproducible and documents its run") {
  const auto first = scratch("sim-a.json");
  const auto second = scratch("sim-b.json");
  const std::string args = "sim-hippocampus --cells 8 --steps 300 --radius 0.25 --seed 7 "
                           "--window 5 ";
  CHECK(run_cli(args + "-o " + first.string()).code == 0);
  CHECK(run_cli(args + "-o " + second.string()).code == 0);

  const std::string net_text = slurp(first);
  CHECK(net_text == slurp(second));

  const network net = parse_network_text(net_text);
  REQUIRE(net.size() == 8);
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = 0; j < net.size(); ++j) {
      CHECK(net.w(i, j) >= 0.0);
      CHECK(net.w(i, j) <= 1.0);
    }

  const nlohmann::json meta = nlohmann::json::parse(slurp(first.string() + ".meta.json"));
  CHECK(meta.at("env") == "square");
  CHECK(meta.at("cells").get<std::size_t>() == 8);
  CHECK(meta.at("steps").get<std::size_t>() == 300);
  CHECK(meta.at("radius").get<double>() == 0.25);
  CHECK(meta.at("seed").get<std::uint64_t>() == 7);
  CHECK(meta.at("window").get<std::size_t>() == 5);
  CHECK(!meta.contains("hole_radius"));

  const auto other = scratch("sim-c.json");
  CHECK(run_cli("sim-hippocampus --cells 8 --steps 300 --radius 0.25 --seed 8 --window 5 -o " +
                other.string())
            .code == 0);
  CHECK(slurp(other) != net_text);

  const auto holed = scratch("sim-hole.json");
  CHECK(run_cli("sim-hippocampus --cells 8 --steps 300 --radius 0.25 --seed 7 --env one-hole "
                "-o " +
                holed.string())
            .code == 0);
  const nlohmann::json hole_meta = nlohmann::json::parse(slurp(holed.string() + ".meta.json"));
  CHECK(hole_meta.at("hole_radius").get<double>() ==
        *one_hole_environment(1.0).hole_radius);

  const cli_result no_output = run_cli("sim-hippocampus --cells 8 --steps 10");
  CHECK(no_output.code == 2);

  const cli_result bad_env = run_cli("sim-hippocampus --env cube -o " + other.string());
  CHECK(bad_env.code == 2);
}

TEST_CASE("cli reports malformed input and usage problems as exit two") {
  const cli_result missing = run_cli("invariants /nonexistent/net.json");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);

  const auto garbage = spill("garbage.json", "{oops");
  CHECK(run_cli("invariants " + garbage.string()).code == 2);

  const cli_result bare = run_cli("");
  CHECK(bare.code == 2);

  const cli_result help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("sim-hippocampus") != std::string::npos);
  CHECK(help.out.find("matrix") != std::string::npos);
}

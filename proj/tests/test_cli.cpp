#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ribbon;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(RIBBON_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "ribbon_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("analyze prints the invariant report") {
  Result r = run_cli({"analyze", data("theta.graph")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "beta: 2\n"));
  CHECK(contains(r.out, "zeta: 0\n"));
  CHECK(contains(r.out, "essential_genus: 2\n"));
  CHECK(contains(r.out, "ge_max_bound: 3\n"));

  Result k4 = run_cli({"analyze", data("k4.graph"), "--json"});
  CHECK(k4.code == 0);
  json j = json::parse(k4.out);
  CHECK(j.at("zeta") == 1);
  CHECK(j.at("essential_genus") == 3);
  CHECK(j.at("ge_max_bound") == "4");
  CHECK(j.at("ge_max_exact") == 3);
}

TEST_CASE("analyze reports the cycle special case") {
  Result r = run_cli({"analyze", data("triangle.graph")});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "cycle"));
}

TEST_CASE("analyze of a subdivided graph equals the smoothed report") {
  fs::path p = scratch("k4_sub.graph");
  write_file(p,
             "edge e01 v0 m 0.25\nedge e01b m v1 0.75\nedge e02 v0 v2 1\nedge e03 v0 v3 1\n"
             "edge e12 v1 v2 1\nedge e13 v1 v3 1\nedge e23 v2 v3 1\n");
  Result sub = run_cli({"analyze", p.string(), "--json"});
  Result plain = run_cli({"analyze", data("k4.graph"), "--json"});
  REQUIRE(sub.code == 0);
  json a = json::parse(sub.out), b = json::parse(plain.out);
  CHECK(a.at("smoothed_vertices") == 1);
  // The hash identifies the input file, so it differs by design.
  for (const char* key : {"smoothed_vertices", "graph_hash"}) {
    a.erase(key);
    b.erase(key);
  }
  CHECK(a == b);
}

TEST_CASE("input errors map to exit code 2") {
  fs::path bad = scratch("bad.graph");
  write_file(bad, "edge a u v 1\nedge b u v oops\n");
  Result r = run_cli({"analyze", bad.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 2"));

  fs::path pendant = scratch("pendant.graph");
  write_file(pendant, "edge a u v 1\nedge b u v 1\nedge c u v 1\nedge d v w 1\n");
  CHECK(run_cli({"analyze", pendant.string()}).code == 2);
  CHECK(run_cli({"analyze", scratch("missing.graph").string()}).code == 2);
  CHECK(run_cli({"embed", data("theta.graph"), "--target", "sideways"}).code == 2);
}

TEST_CASE("embed minimal theta") {
  fs::path out = scratch("theta_min.json");
  Result r = run_cli({"embed", data("theta.graph"), "--target", "minimal", "-o", out.string()});
  CHECK(r.code == 0);
  json j = json::parse(read_file(out));
  CHECK(j.at("summary").at("genus") == 2);
  CHECK(j.at("summary").at("minimal") == true);
  CHECK(run_cli({"verify", out.string()}).code == 0);
}

TEST_CASE("embed maximal K5") {
  fs::path out = scratch("k5_max.json");
  Result r = run_cli({"embed", data("k5.graph"), "--target", "maximal", "-o", out.string()});
  CHECK(r.code == 0);
  json j = json::parse(read_file(out));
  CHECK(j.at("summary").at("genus") == 5);
  CHECK(j.at("summary").at("minimal") == true);
}

TEST_CASE("embed a target genus") {
  fs::path out = scratch("theta_g7.json");
  Result r = run_cli({"embed", data("theta.graph"), "--target", "genus=7", "-o", out.string()});
  CHECK(r.code == 0);
  json j = json::parse(read_file(out));
  CHECK(j.at("summary").at("genus") == 7);
  CHECK(j.at("summary").at("minimal") == false);

  Result low = run_cli({"embed", data("theta.graph"), "--target", "genus=1"});
  CHECK(low.code == 4);
  CHECK(contains(low.err, "g_e = 2"));
}

TEST_CASE("embed writes a move log and is deterministic") {
  fs::path a = scratch("k4_a.json"), b = scratch("k4_b.json"), moves = scratch("k4.moves");
  CHECK(run_cli({"embed", data("k4.graph"), "--target", "minimal", "--seed", "3", "-o", a.string(), "--moves",
                 moves.string()}).code == 0);
  CHECK(run_cli({"embed", data("k4.graph"), "--target", "minimal", "--seed", "3", "-o", b.string()}).code == 0);
  CHECK(read_file(a) == read_file(b));
  const std::string log = read_file(moves);
  std::istringstream lines(log);
  for (std::string line; std::getline(lines, line);) {
    if (line.empty() || line[0] == '#') continue;
    CHECK(line.rfind("move ", 0) == 0);
  }
}

TEST_CASE("verify flags edited schemas") {
  fs::path out = scratch("theta_naive_src.json");
  REQUIRE(run_cli({"embed", data("theta.graph"), "--target", "minimal", "-o", out.string()}).code == 0);
  json j = json::parse(read_file(out));

  json dropped = j;
  dropped["gluings"].erase(dropped["gluings"].size() - 1);
  fs::path p1 = scratch("dropped.json");
  write_file(p1, dropped.dump(2));
  Result r1 = run_cli({"verify", p1.string()});
  CHECK(r1.code == 1);
  CHECK(contains(r1.out, "error"));

  json genus = j;
  genus["summary"]["genus"] = 3;
  fs::path p2 = scratch("genus.json");
  write_file(p2, genus.dump(2));
  CHECK(run_cli({"verify", p2.string()}).code == 1);

  fs::path p3 = scratch("garbage.json");
  write_file(p3, "{\"schema_version\": 1}");
  CHECK(run_cli({"verify", p3.string()}).code == 2);
}

TEST_CASE("oracle runs and honours caps") {
  Result r = run_cli({"oracle", data("theta.graph")});
  CHECK(r.code == 0);
  Result capped = run_cli({"oracle", data("k5.graph"), "--max-rotations", "10"});
  CHECK(capped.code == 5);
}

TEST_CASE("target parsing") {
  CHECK(cli::parse_target("minimal")->kind == cli::TargetKind::Minimal);
  CHECK(cli::parse_target("maximal")->kind == cli::TargetKind::Maximal);
  auto g = cli::parse_target("genus=12");
  REQUIRE(g.has_value());
  CHECK(g->kind == cli::TargetKind::Genus);
  CHECK(g->genus == 12);
  CHECK_FALSE(cli::parse_target("genus=").has_value());
  CHECK_FALSE(cli::parse_target("genus=-1").has_value());
  CHECK_FALSE(cli::parse_target("max").has_value());
}

#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ribbon/error.hpp"
#include "ribbon/graph.hpp"

using namespace ribbon;
using namespace ribbon::testing;

namespace {

ErrorKind error_kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected ribbon::Error");
  return ErrorKind::Parse;
}

void check_same_up_to_lengths(const MetricGraph& a, const MetricGraph& b, double tol) {
  REQUIRE(a.vertex_count() == b.vertex_count());
  REQUIRE(a.edge_count() == b.edge_count());
  for (VertexId v = 0; v < a.vertex_count(); ++v) CHECK(a.vertex_name(v) == b.vertex_name(v));
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    CHECK(a.edge(e).name == b.edge(e).name);
    CHECK(a.edge(e).tail == b.edge(e).tail);
    CHECK(a.edge(e).head == b.edge(e).head);
    CHECK(std::abs(a.length(e) - b.length(e)) <= tol);
  }
}

}  // namespace

TEST_CASE("darts pair up by xor") {
  CHECK(partner(0) == 1);
  CHECK(partner(5) == 4);
  CHECK(edge_of(7) == 3);
  MetricGraph g = theta();
  CHECK(g.dart_count() == 6);
  CHECK(g.dart_name(0) == "a+");
  CHECK(g.dart_name(5) == "c-");
  CHECK(g.find_dart("b-") == Dart{3});
  CHECK_FALSE(g.find_dart("b").has_value());
  CHECK(g.vertex_of(0) == 0);
  CHECK(g.vertex_of(1) == 1);
  CHECK(g.degree(0) == 3);
}

TEST_CASE("loops contribute two darts to one vertex") {
  MetricGraph g = bouquet2();
  CHECK(g.vertex_count() == 1);
  CHECK(g.degree(0) == 4);
  CHECK(g.is_loop(0));
}

TEST_CASE("parse theta") {
  MetricGraph g = parse_graph("# theta\nedge a u v 1.0\n\nedge b u v 1.0  # trailing\nedge c u v 1.0\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g == theta());
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_graph("edge a u v 1.0\nedgy b u v 1.0\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_graph("edge a u v 0.0\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("positive") != std::string::npos);
  }
  CHECK(error_kind_of([] { parse_graph("edge a u v -2\n"); }) == ErrorKind::Parse);
  CHECK(error_kind_of([] { parse_graph("edge a u v x\n"); }) == ErrorKind::Parse);
  CHECK(error_kind_of([] { parse_graph("edge a u v 1\nedge a v u 1\n"); }) == ErrorKind::Parse);
  CHECK(error_kind_of([] { parse_graph("# nothing\n"); }) == ErrorKind::Validation);
}

TEST_CASE("parse rejects a disconnected graph") {
  CHECK(error_kind_of([] { parse_graph("edge a u v 1\nedge b x y 1\n"); }) == ErrorKind::Validation);
}

TEST_CASE("format and parse round trip") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    MetricGraph g = random_graph(seed);
    CHECK(parse_graph(format_graph(g)) == g);
    CHECK(graph_hash(parse_graph(format_graph(g))) == graph_hash(g));
  }
  CHECK(graph_hash(theta()) != graph_hash(theta(1, 1, 2)));
  CHECK(graph_hash(theta()).rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("betti, euler characteristic, girth") {
  CHECK(betti(theta()) == 2);
  CHECK(euler_char(theta()) == -1);
  CHECK(betti(k4()) == 3);
  CHECK(euler_char(k4()) == -2);
  CHECK(betti(bouquet2()) == 2);
  CHECK(betti(k5()) == 6);
  CHECK(girth(theta()) == std::size_t{2});
  CHECK(girth(bouquet2()) == std::size_t{1});
  CHECK(girth(k4()) == std::size_t{3});
  CHECK(girth(k5()) == std::size_t{3});
  CHECK_FALSE(girth(from_lines({{"a", "x", "y", 1.0}})).has_value());
}

TEST_CASE("girth agrees with brute-force cycle search") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    MetricGraph g = random_graph(seed);
    REQUIRE(girth(g).has_value());
    CHECK(*girth(g) == oracle::girth(g));
    CHECK(static_cast<long>(betti(g)) + euler_char(g) == 1);
  }
}

TEST_CASE("validate reports degree and connectivity problems") {
  CHECK(validate(theta(), 3).empty());
  CHECK(validate(k4(), 3).empty());

  auto single = validate(from_lines({{"a", "x", "y", 1.0}}), 3);
  REQUIRE(single.size() == 2);
  for (const auto& v : single) CHECK(v.kind == ViolationKind::DegreeBelowFloor);

  MetricGraph two({"a", "b", "c", "x", "y", "z"},
                  {{"e0", 0, 1, 1.0}, {"e1", 1, 2, 1.0}, {"e2", 2, 0, 1.0},
                   {"f0", 3, 4, 1.0}, {"f1", 4, 5, 1.0}, {"f2", 5, 3, 1.0}});
  auto issues = validate(two, 2);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == ViolationKind::Disconnected);
  CHECK(validate(MetricGraph{}, 2).front().kind == ViolationKind::Empty);
}

TEST_CASE("graph construction checks lengths and indices") {
  CHECK(error_kind_of([] { MetricGraph({"u", "v"}, {{"a", 0, 1, 0.0}}); }) == ErrorKind::Validation);
  CHECK(error_kind_of([] { MetricGraph({"u", "v"}, {{"a", 0, 2, 1.0}}); }) == ErrorKind::Validation);
}

TEST_CASE("smoothing a subdivided K4 edge recovers K4") {
  MetricGraph sub = subdivide(k4(), 0, {0.4, 0.6});
  CHECK(sub.vertex_count() == 5);
  CHECK(smooth(sub) == k4());
  MetricGraph mid = subdivide(k4(), 3, {0.25, 0.25, 0.5});
  check_same_up_to_lengths(smooth(mid), k4(), 1e-12);
}

TEST_CASE("smoothing handles loops and theta subdivisions") {
  MetricGraph g = theta();
  for (const char* name : {"a", "b", "c"}) g = subdivide(g, *g.find_edge(name), {0.5, 0.5});
  CHECK(g.vertex_count() == 5);
  MetricGraph s = smooth(g);
  check_same_up_to_lengths(s, theta(), 1e-12);

  MetricGraph b = subdivide(bouquet2(), 1, {0.3, 0.7});
  CHECK(b.degree(1) == 2);
  check_same_up_to_lengths(smooth(b), bouquet2(), 1e-12);
}

TEST_CASE("smoothing rejects cycles and degree one") {
  CHECK(error_kind_of([] { smooth(triangle()); }) == ErrorKind::CycleGraph);
  CHECK(is_cycle(triangle()));
  CHECK_FALSE(is_cycle(theta()));
  MetricGraph pendant = from_lines({{"a", "u", "v", 1.0}, {"b", "u", "v", 1.0}, {"c", "u", "v", 1.0}, {"d", "v", "w", 1.0}});
  CHECK(error_kind_of([&] { smooth(pendant); }) == ErrorKind::Validation);
}

TEST_CASE("smoothing properties on random subdivisions") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    MetricGraph g = random_graph(seed);
    CHECK(smooth(g) == g);  // already minimum degree 3
    MetricGraph sub = g;
    const int rounds = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < rounds; ++k) {
      const EdgeId e = static_cast<EdgeId>(rng() % sub.edge_count());
      const double len = sub.length(e);
      const double cut = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
      sub = subdivide(sub, e, {len * cut, len * (1 - cut)});
    }
    MetricGraph s = smooth(sub);
    CHECK(betti(s) == betti(g));
    CHECK(std::abs(s.total_length() - g.total_length()) < 1e-9);
    CHECK(smooth(s) == s);
    check_same_up_to_lengths(s, g, 1e-9);
  }
}

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "ribbon/error.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/moves.hpp"
#include "ribbon/schema.hpp"
#include "ribbon/schema_json.hpp"

using namespace ribbon;
using namespace ribbon::testing;
using nlohmann::json;

namespace {

ErrorKind parse_failure(const std::string& text) {
  try {
    schema_from_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

std::vector<SurfaceSchema> samples() {
  std::vector<SurfaceSchema> out;
  for (const MetricGraph& g : {theta(), k4(), bouquet2(), theta(1.5, 2.0, 0.25)}) {
    out.push_back(naive_embedding(g));
    RotationSystem r = minimize_boundaries(g, default_rotation(g, 0)).rotation;
    out.push_back(assemble_sigma_surface(g, r));
    out.push_back(cap_standard(assemble_sigma_surface(g, r)));
    out.push_back(cap_target_genus(assemble_sigma_surface(g, r), essential_genus(g) + 3));
  }
  return out;
}

}  // namespace

TEST_CASE("schema documents have the expected top level") {
  json j = json::parse(schema_to_json(naive_embedding(theta())));
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(j.at("meta").at("graph_hash") == graph_hash(theta()));
  CHECK(j.at("meta").at("construction") == "naive");
  CHECK(j.at("blocks").size() == 8);
  CHECK(j.at("gluings").size() == 9);
  CHECK(j.at("summary").at("genus") == 5);
  CHECK(j.at("summary").at("minimal") == false);
  CHECK(j.at("meta").at("t").get<double>() == doctest::Approx(7.626737741123).epsilon(1e-11));
}

TEST_CASE("symbolic lengths are written with a prefix") {
  MetricGraph g = theta();
  json j = json::parse(schema_to_json(assemble_sigma_surface(g, default_rotation(g, 0))));
  const json& ribbon = j.at("blocks").at(0);
  CHECK(ribbon.at("kind") == "ribbon_surface");
  CHECK(ribbon.at("boundaries").at(0).at("length") == "sym:w0");
}

TEST_CASE("serialisation is a fixed point after one round trip") {
  for (const SurfaceSchema& s : samples()) {
    const std::string first = schema_to_json(s);
    SurfaceSchema back = schema_from_json(first);
    CHECK(schema_to_json(back) == first);
    CHECK(back.summary.genus == s.summary.genus);
    CHECK(back.graph == s.graph);
    CHECK(is_clean(verify_schema(back)));
  }
}

TEST_CASE("rounding keeps twelve significant digits") {
  CHECK(round_to_schema_precision(1.0 / 3.0) == 0.333333333333);
  CHECK(round_to_schema_precision(2.0) == 2.0);
}

TEST_CASE("malformed documents are parse errors") {
  CHECK(parse_failure("{") == ErrorKind::Parse);
  CHECK(parse_failure("[]") == ErrorKind::Parse);
  CHECK(parse_failure("{}") == ErrorKind::Parse);

  json j = json::parse(schema_to_json(naive_embedding(theta())));
  json bad_version = j;
  bad_version["schema_version"] = 99;
  CHECK(parse_failure(bad_version.dump()) == ErrorKind::Parse);

  json bad_kind = j;
  bad_kind["blocks"][0]["kind"] = "hexagon";
  CHECK(parse_failure(bad_kind.dump()) == ErrorKind::Parse);

  json bad_length = j;
  bad_length["blocks"][0]["boundaries"][0]["length"] = "w0";
  CHECK(parse_failure(bad_length.dump()) == ErrorKind::Parse);

  json no_gluings = j;
  no_gluings.erase("gluings");
  CHECK(parse_failure(no_gluings.dump()) == ErrorKind::Parse);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "skeleta/cli.hpp"
#include "skeleta/io.hpp"
#include "skeleta/sampling.hpp"

using namespace skeleta;
using skeleta::testing::Rng;

namespace {

std::string fx(const std::string& name) { return std::string(SKELETA_FIXTURES) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json parsed(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("ks on the chain") {
  const Result r = call({"ks", fx("chain.json"), fx("chain-form-a.json")});
  REQUIRE(r.code == kSuccess);
  const Json j = parsed(r);
  CHECK(j["strata"] == Json::array({"E3"}));
  CHECK(j["globalWeight"] == "1/3");
  CHECK(j["connected"] == true);
  CHECK(j["pseudomanifold"] == true);
  CHECK(j["degenerate"] == true);

  const Result v = call({"--samples", "50", "ks", fx("chain.json"), fx("chain-form-b.json"), "--verify"});
  REQUIRE(v.code == kSuccess);
  CHECK(parsed(v)["verification"]["failures"] == 0);
  CHECK(parsed(v)["verification"]["samplesChecked"] == 250);
}

TEST_CASE("essential and weight commands") {
  Result r = call({"essential", fx("chain.json"), fx("chain-form-a.json"), fx("chain-form-c.json")});
  REQUIRE(r.code == kSuccess);
  CHECK(parsed(r)["strata"] == Json::array({"E1", "E3"}));
  CHECK(parsed(r)["connected"] == false);
  CHECK(parsed(r)["globalWeights"] == Json::array({"1/3", "0"}));

  r = call({"weight", fx("chain.json"), fx("chain-form-b.json"), "--stratum", "C12", "--beta",
            "E1=1/2", "--beta", "E2=1/2"});
  REQUIRE(r.code == kSuccess);
  CHECK(parsed(r)["value"] == "1");
  CHECK(parsed(r)["strictLowerBound"] == false);

  r = call({"weight", fx("planes.json"), fx("planes-form-horizontal.json"), "--stratum", "C12",
            "--beta", "E1=1/3", "--beta", "E2=2/3"});
  REQUIRE(r.code == kSuccess);
  CHECK(parsed(r)["strictLowerBound"] == true);
}

TEST_CASE("complex with DOT output") {
  const Result r = call({"complex", fx("planes.json"), "--dot"});
  REQUIRE(r.code == kSuccess);
  CHECK(r.out.find("graph") != std::string::npos);
  CHECK(r.out.find("E1 (N=1)") != std::string::npos);
  CHECK(r.out.find("// 2-face C123: E1 E2 E3") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = r.out.find("--"); p != std::string::npos; p = r.out.find("--", p + 2)) ++edges;
  CHECK(edges == 3);

  const Json j = parsed(call({"complex", fx("star-curve.json")}));
  CHECK(j["vertexCount"] == 4);
  CHECK(j["faceCounts"] == Json::array({4, 3}));
}

TEST_CASE("check names each invalid fixture") {
  Result r = call({"check", fx("invalid-model-incompatible.json")});
  CHECK(r.code == kValidationError);
  CHECK(parsed(r)["issues"][0]["kind"] == "simplicial-incompatibility");
  CHECK(r.err.find("Q1234") != std::string::npos);

  r = call({"check", fx("planes.json"), fx("invalid-form-horizontal-vertex.json")});
  CHECK(r.code == kValidationError);
  CHECK(r.err.find("horizontal-vertex 'E2'") != std::string::npos);

  r = call({"check", "--rigid", fx("invalid-point.json")});
  CHECK(r.code == kValidationError);
  CHECK(parsed(r)["issues"][0]["kind"] == "point-not-on-model");

  r = call({"check", fx("planes.json"), fx("planes-form.json"), "--rigid", fx("point-23.json")});
  CHECK(r.code == kSuccess);
  CHECK(parsed(r)["valid"] == true);

  // Computing commands refuse invalid input with the same exit code.
  CHECK(call({"ks", fx("planes.json"), fx("invalid-form-horizontal-vertex.json")}).code ==
        kValidationError);
  CHECK(call({"retract", "--point", fx("invalid-point.json")}).code == kValidationError);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == kUsageError);
  CHECK(call({"bogus"}).code == kUsageError);
  CHECK(call({"ks", fx("chain.json")}).code == kUsageError);
  CHECK(call({"complex", fx("no-such-file.json")}).code == kUsageError);
  CHECK(call({"flow", "--f", "T1"}).code == kUsageError);
  CHECK(call({"--help"}).code == kSuccess);
}

TEST_CASE("flow and retract commands") {
  Result r = call({"flow", "--point", fx("point-11.json"), "--f", "T1+T2", "--s", "1"});
  REQUIRE(r.code == kSuccess);
  Json j = parsed(r);
  CHECK(j["value"] == "0");
  CHECK(j["terms"] == Json::parse(R"([{"i":0,"vK":"0"},{"i":1,"vK":"1"},{"i":2,"vK":"1"}])"));
  CHECK(j["s"] == "1");

  r = call({"flow", "--n1", "1", "--n2", "1", "--alpha", "1/2,1/2", "--f", "T1+T2", "--s", "7/3"});
  REQUIRE(r.code == kSuccess);
  CHECK(parsed(r)["value"] == "1/2");

  r = call({"flow", "--n1", "2", "--n2", "3", "--ramification", "5", "--x1", "u*(1+u)^3", "--x2",
            "u/(1+u)^2", "--f", "T1*T2"});
  REQUIRE(r.code == kSuccess);
  CHECK(parsed(r)["value"] == "2/5");

  r = call({"retract", "--point", fx("point-23.json")});
  REQUIRE(r.code == kSuccess);
  j = parsed(r);
  CHECK(j["monomial"]["alpha"] == Json::parse(R"({"E1":"1/5","E2":"1/5"})"));
  CHECK(j["skeletonPoint"]["barycentric"] == Json::parse(R"({"E1":"2/5","E2":"3/5"})"));

  CHECK(call({"flow", "--point", fx("point-11.json"), "--f", "T1", "--s", "-1"}).code ==
        kValidationError);
}

TEST_CASE("output file option") {
  const auto path = std::filesystem::temp_directory_path() / "skeleta-cli-test.json";
  const Result r = call({"-o", path.string(), "ks", fx("chain.json"), fx("chain-form-a.json")});
  REQUIRE(r.code == kSuccess);
  CHECK(r.out.empty());
  CHECK(read_json_file(path)["globalWeight"] == "1/3");
  std::filesystem::remove(path);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"complex", fx("kulikov.json")},
           {"essential", fx("chain.json"), fx("chain-form-a.json"), fx("chain-form-c.json")},
           {"--seed", "9", "ks", fx("kulikov.json"), fx("kulikov-form.json"), "--verify"},
           {"flow", "--point", fx("point-23.json"), "--f", "T1^2 + t*T2", "--s", "1/2"}}) {
    CHECK(call(args).out == call(args).out);
  }
}

TEST_CASE("property: JSON round-trips") {
  Rng rng(77);
  for (int k = 0; k < 50; ++k) {
    const ModelDescription m = skeleta::testing::random_model(rng);
    CHECK(model_from_json(Json::parse(to_json(m).dump())) == m);
    const DualComplex dc(m);
    const PluricanonicalForm f = skeleta::testing::random_form(rng, dc);
    CHECK(form_from_json(Json::parse(to_json(f).dump())) == f);
    const Subcomplex s = ks_skeleton(dc, f);
    CHECK(subcomplex_from_json(Json::parse(to_json(s).dump())) == s);
    for (const auto& [id, x] : dc.simplices()) {
      const SkeletonPoint p = random_interior_point(dc, id, rng);
      CHECK(point_from_json(Json::parse(to_json(p).dump())) == p);
    }
  }
  for (const char* name : {"point-11.json", "point-23.json"}) {
    const RigidPointSpec p = rigid_point_from_json(read_json_file(fx(name)));
    const RigidPointSpec q = rigid_point_from_json(Json::parse(to_json(p).dump()));
    CHECK(q.point.x1 == p.point.x1);
    CHECK(q.point.x2 == p.point.x2);
    CHECK(q.point.ramification == p.point.ramification);
  }
}

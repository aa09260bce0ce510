#include <doctest.h>

#include <array>

#include "generators.hpp"
#include "oracles.hpp"
#include "skeleta/io.hpp"
#include "skeleta/sampling.hpp"
#include "skeleta/weight.hpp"

using namespace skeleta;
using skeleta::testing::Rng;

namespace {

Json load(const std::string& name) {
  return read_json_file(std::string(SKELETA_FIXTURES) + "/" + name);
}
DualComplex model(const std::string& name) { return DualComplex(model_from_json(load(name))); }
PluricanonicalForm form(const std::string& name) { return form_from_json(load(name)); }

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Subcomplex of(std::initializer_list<const char*> ids) {
  Subcomplex s;
  for (const char* id : ids) s.strata.insert(id);
  return s;
}

PluricanonicalForm uniform_form(const DualComplex& dc, long nu, long m = 1) {
  PluricanonicalForm f;
  f.m = m;
  for (const auto& c : dc.model().components) f.vertical[c.id] = nu;
  return f;
}

}  // namespace

TEST_CASE("divisorial weights") {
  CHECK(divisorial_weight(1, 0, 1) == 1);
  CHECK(divisorial_weight(2, 1, 1) == 1);
  CHECK(divisorial_weight(3, 2, 1) == 1);
  CHECK(divisorial_weight(4, -3, 2) == q(-1, 4));
  CHECK_THROWS_AS(divisorial_weight(0, 0, 1), DomainError);
  CHECK_THROWS_AS(divisorial_weight(1, 0, 0), DomainError);
}

TEST_CASE("global weight") {
  const DualComplex chain = model("chain.json");
  CHECK(global_weight(chain, form("chain-form-b.json")) == 1);
  CHECK(global_weight(chain, form("chain-form-a.json")) == q(1, 3));
  const DualComplex k3 = model("kulikov.json");
  for (long c = -3; c <= 3; ++c) CHECK(global_weight(k3, uniform_form(k3, c)) == c + 1);
}

TEST_CASE("weight at points") {
  ModelDescription m{{{"E1", 1}, {"E2", 2}},
                     {{"E1", {"E1"}, {}},
                      {"E2", {"E2"}, {}},
                      {"C", {"E1", "E2"}, {{"E1", "E2"}, {"E2", "E1"}}}}};
  const DualComplex dc(m);
  PluricanonicalForm w{1, {{"E1", 0}, {"E2", 1}}, {}};
  const SkeletonPoint mid{"C", {{"E1", q(1, 2)}, {"E2", q(1, 2)}}};
  CHECK(weight_at(dc, w, mid) == WeightValue{1, false});
  CHECK(skeleta::testing::weight_by_local_equation(dc, w, mid) == ExtendedValue(1));

  // Vertex points give the divisorial weight.
  CHECK(weight_at(dc, w, {"E2", {{"E2", q(1, 1)}}}).value == divisorial_weight(2, 1, 1));
  // A boundary point of the edge is pushed to its vertex.
  CHECK(weight_at(dc, w, {"C", {{"E1", q(1, 1)}, {"E2", q(0, 1)}}}) == WeightValue{1, false});

  PluricanonicalForm flagged = w;
  flagged.horizontal = {"C"};
  CHECK(weight_at(dc, flagged, mid) == WeightValue{1, true});
}

TEST_CASE("ks skeleton examples") {
  const DualComplex chain = model("chain.json");
  CHECK(ks_skeleton(chain, form("chain-form-b.json")) == chain.full());
  CHECK(ks_skeleton(chain, form("chain-form-a.json")) == of({"E3"}));
  CHECK(ks_skeleton(chain, form("chain-form-c.json")) == of({"E1"}));

  const DualComplex k3 = model("kulikov.json");
  CHECK(ks_skeleton(k3, form("kulikov-form.json")) == k3.full());
  CHECK(k3.full().strata.size() == 14);

  // Horizontal flags remove the flagged faces and nothing else.
  const DualComplex planes = model("planes.json");
  CHECK(ks_skeleton(planes, form("planes-form.json")) == planes.full());
  CHECK(ks_skeleton(planes, form("planes-form-horizontal.json")) ==
        of({"E1", "E2", "E3", "C13", "C23"}));
}

TEST_CASE("essential skeleton") {
  const DualComplex chain = model("chain.json");
  const std::array one{form("chain-form-a.json")};
  CHECK(essential_skeleton(chain, one) == ks_skeleton(chain, one[0]));

  const std::array two{form("chain-form-a.json"), form("chain-form-c.json")};
  CHECK(essential_skeleton(chain, two) == of({"E1", "E3"}));

  const std::array scaled_pair{one[0], scaled(chain, one[0], 2)};
  CHECK(essential_skeleton(chain, scaled_pair) == ks_skeleton(chain, one[0]));

  CHECK_THROWS_AS(essential_skeleton(chain, std::span<const PluricanonicalForm>{}), DomainError);
}

TEST_CASE("connectivity") {
  const DualComplex k3 = model("kulikov.json");
  CHECK(is_connected(k3, ks_skeleton(k3, form("kulikov-form.json"))));

  const DualComplex two = model("disconnected.json");
  const Subcomplex s = ks_skeleton(two, form("disconnected-form.json"));
  CHECK(s == of({"E1", "E3"}));
  CHECK_FALSE(is_connected(two, s));

  CHECK(is_connected(k3, Subcomplex{}));
}

TEST_CASE("closed pseudo-manifolds") {
  const DualComplex cycle = model("cycle.json");
  CHECK(is_closed_pseudomanifold(cycle, cycle.full()));

  const DualComplex star = model("star-curve.json");
  CHECK_FALSE(is_closed_pseudomanifold(star, star.full()));

  const DualComplex chain = model("chain.json");
  CHECK(is_closed_pseudomanifold(chain, of({"E3"})));
  CHECK_FALSE(is_closed_pseudomanifold(chain, of({"E1", "E3"})));
  CHECK_FALSE(is_closed_pseudomanifold(chain, chain.full()));

  const DualComplex k3 = model("kulikov.json");
  CHECK(is_closed_pseudomanifold(k3, k3.full()));

  // The solid triangle is not closed: its edges lie in one 2-face each.
  const DualComplex planes = model("planes.json");
  CHECK_FALSE(is_closed_pseudomanifold(planes, planes.full()));
  // Not pure: an edge plus an isolated vertex.
  const DualComplex two = model("disconnected.json");
  CHECK_FALSE(is_closed_pseudomanifold(two, of({"E1", "E2", "C12", "E3"})));
  CHECK_THROWS_AS(is_closed_pseudomanifold(two, Subcomplex{}), DomainError);
}

TEST_CASE("form validation") {
  const DualComplex planes = model("planes.json");
  auto has = [](const std::vector<Issue>& issues, IssueKind kind, const std::string& subject) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const Issue& i) { return i.kind == kind && i.subject == subject; });
  };
  CHECK(validate_form(planes, form("planes-form.json")).empty());

  auto issues = validate_form(planes, form("invalid-form-horizontal-vertex.json"));
  CHECK(has(issues, IssueKind::HorizontalVertex, "E2"));
  CHECK_THROWS_AS(ks_skeleton(planes, form("invalid-form-horizontal-vertex.json")), ValidationError);

  PluricanonicalForm bad{0, {{"E1", 0}, {"E2", 0}, {"E9", 1}}, {"C12", "nowhere"}};
  issues = validate_form(planes, bad);
  CHECK(has(issues, IssueKind::BadLevel, "m"));
  CHECK(has(issues, IssueKind::MissingVertical, "E3"));
  CHECK(has(issues, IssueKind::UnknownVertical, "E9"));
  CHECK(has(issues, IssueKind::UnknownHorizontal, "nowhere"));
  // C12 is flagged but its coface C123 is not.
  CHECK(has(issues, IssueKind::HorizontalNotClosed, "C123"));
}

TEST_CASE("scaling and tensor powers") {
  const DualComplex chain = model("chain.json");
  const PluricanonicalForm w = form("chain-form-c.json");
  const PluricanonicalForm s = scaled(chain, w, -2);
  CHECK(s.vertical == std::map<std::string, long>{{"E1", -3}, {"E2", -3}, {"E3", -4}});
  CHECK(global_weight(chain, s) == global_weight(chain, w) - 2);
  const PluricanonicalForm p = tensor_power(w, 3);
  CHECK(p.m == 3);
  CHECK(p.vertical.at("E1") == -3);
  CHECK(global_weight(chain, p) == 3 * global_weight(chain, w));
}

TEST_CASE("property: weights on fixtures") {
  Rng rng(4242);
  const std::vector<std::pair<const char*, const char*>> cases{
      {"chain.json", "chain-form-a.json"},   {"chain.json", "chain-form-c.json"},
      {"planes.json", "planes-form.json"},   {"planes.json", "planes-form-horizontal.json"},
      {"kulikov.json", "kulikov-form.json"}, {"star-curve.json", "star-curve-form.json"},
      {"cycle.json", "cycle-form.json"},     {"disconnected.json", "disconnected-form.json"}};
  for (const auto& [mname, fname] : cases) {
    CAPTURE(fname);
    const DualComplex dc = model(mname);
    const PluricanonicalForm w = form(fname);
    const Rational g = global_weight(dc, w);
    const Subcomplex ks = ks_skeleton(dc, w);
    REQUIRE(dc.is_face_closed(ks));
    REQUIRE_FALSE(ks.empty());

    Rational vertex_min = weight_at(dc, w, {dc.model().components[0].id,
                                            {{dc.model().components[0].id, 1}}}).value;
    for (const auto& c : dc.model().components)
      vertex_min = std::min(vertex_min, weight_at(dc, w, {dc.vertex_stratum(c.id), {{c.id, 1}}}).value);
    CHECK(vertex_min == g);

    for (const auto& [id, s] : dc.simplices()) {
      for (int k = 0; k < 100; ++k) {
        const SkeletonPoint p = random_interior_point(dc, id, rng);
        const WeightValue v = weight_at(dc, w, p);
        REQUIRE(v.value >= g);
        REQUIRE(ExtendedValue(v.value) == skeleta::testing::weight_by_local_equation(dc, w, p));
        if (ks.strata.count(id)) REQUIRE(v.value == g);
      }
    }
  }
}

TEST_CASE("property: brute-force argmin agrees on random models") {
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const DualComplex dc(skeleta::testing::random_model(rng));
    const PluricanonicalForm w = skeleta::testing::random_form(rng, dc);
    REQUIRE(ks_skeleton(dc, w) == skeleta::testing::brute_force_ks(dc, w, 6));
  }
}

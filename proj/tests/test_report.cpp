#include <cmath>
#include <limits>

#include "cayley/errors.hpp"
#include "cayley/suites.hpp"
#include "doctest.h"

using namespace cayley;

TEST_CASE("checks") {
  CHECK(make_check("a", 1e-13, Relation::Less, 1e-12).pass);
  CHECK_FALSE(make_check("a", 1e-12, Relation::Less, 1e-12).pass);
  CHECK(make_check("a", 1e-12, Relation::LessEqual, 1e-12).pass);
  CHECK(make_check("a", 4, Relation::Equal, 4).pass);
  CHECK(make_check("a", -1e-9, Relation::GreaterEqual, -1e-8).pass);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (Relation r : {Relation::Less, Relation::LessEqual, Relation::Greater, Relation::GreaterEqual, Relation::Equal}) {
    CHECK_FALSE(make_check("nan", nan, r, 0.0).pass);
  }
  CHECK(std::string(relation_symbol(Relation::GreaterEqual)) == ">=");
}

TEST_CASE("canonical JSON") {
  nlohmann::json j = {{"b", 0.1}, {"a", {1, 2.5, nullptr}}, {"c", std::numeric_limits<double>::infinity()},
                      {"d", "x"}, {"e", true}};
  CHECK(canonical_dump(j) == R"({"a":[1,2.5,null],"b":0.10000000000000001,"c":null,"d":"x","e":true})");

  VerificationReport r;
  r.suite = "algebra";
  r.samples = 3;
  r.checks.push_back(make_check("x", 0.0, Relation::Less, 1.0));
  r.info["k"] = std::string("v");
  const std::string plain = format_json(r);
  CHECK(plain.back() == '\n');
  CHECK(plain.find("wallSeconds") == std::string::npos);
  CHECK(plain.find(R"("n":null)") != std::string::npos);
  CHECK(plain.find(R"("pass":true)") != std::string::npos);
  r.wall_seconds = 1.5;
  CHECK(format_json(r).find(R"("wallSeconds":1.5)") != std::string::npos);
  r.checks.push_back(make_check("y", 2.0, Relation::Less, 1.0));
  CHECK_FALSE(r.pass());
  CHECK(format_text(r).find("FAIL y") != std::string::npos);
}

TEST_CASE("registry") {
  const auto& reg = suite_registry();
  CHECK(reg.size() == 18);
  CHECK(reg.back().name == "all");
  const std::string listing = list_suites();
  CHECK(listing.find("theorem-b") != std::string::npos);
  CHECK(listing.find("lemma3") != std::string::npos);
}

TEST_CASE("run_suite rejects bad configurations") {
  SuiteConfig c;
  c.suite = "nope";
  CHECK_THROWS_AS(run_suite(c), UsageError);
  c.suite = "algebra";
  c.samples = 0;
  CHECK_THROWS_AS(run_suite(c), UsageError);
  c.samples = 10;
  c.n = 4;
  CHECK_THROWS_AS(run_suite(c), UsageError);
  c.suite = "theorem-a";
  c.n = 0;
  CHECK_THROWS_AS(run_suite(c), UsageError);
  c.n.reset();
  c.tol.alg = 0.0;
  CHECK_THROWS_AS(run_suite(c), UsageError);
}

TEST_CASE("suites are deterministic and independent of threading") {
  SuiteConfig c;
  c.suite = "planes";
  c.samples = 50;
  c.seed = 7;
  const VerificationReport a = run_suite(c);
  CHECK(a.pass());
  CHECK(a.n == std::nullopt);
  c.parallel = true;
  CHECK(format_json(run_suite(c)) == format_json(a));
  c.seed = 8;
  CHECK(format_json(run_suite(c)) != format_json(a));
  c.n = 2;
  const VerificationReport one = run_suite(c);
  CHECK(one.n == 2);
  for (const auto& check : one.checks) CHECK(check.name.rfind("planes.n2.", 0) == 0);
}

TEST_CASE("sample dumps") {
  const auto plane = nlohmann::json::parse(sample_dump("plane", 0, 4, 1));
  CHECK(plane["vectors"].size() == 4);
  CHECK(plane["vectors"][0].size() == 6);
  CHECK(plane["ambientDim"] == 6);
  const auto cx = nlohmann::json::parse(sample_dump("complex", 3, 2, 1));
  CHECK(cx["vectors"][1].size() == 54);
  CHECK(cx["layout"]["parts"].size() == 2);
  CHECK(sample_dump("infinity", 2, 3, 5) == sample_dump("infinity", 2, 3, 5));
  CHECK(sample_dump("infinity", 2, 3, 5) != sample_dump("infinity", 2, 3, 6));
  CHECK_THROWS_AS(sample_dump("torus", 1, 1, 0), UsageError);
  CHECK_THROWS_AS(sample_dump("plane", 4, 1, 0), UsageError);
  CHECK_THROWS_AS(sample_dump("plane", 1, 0, 0), UsageError);
}

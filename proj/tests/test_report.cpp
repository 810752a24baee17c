#include "kummer/report.hpp"

#include <doctest.h>

using namespace kummer;

TEST_CASE("rational serialization") {
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(rat_str(rat(-3, 4)) == "-3/4");
  CHECK(rat_str(rat(6, 4)) == "3/2");
  CHECK(rat_parse("7") == Rat(7));
  CHECK(rat_parse("-7/2") == rat(-7, 2));
  CHECK(rat_parse("4/6") == rat(2, 3));
  CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("suite bookkeeping") {
  CHECK(std::string(status_str(Status::PASS)) == "PASS");
  CHECK(std::string(status_str(Status::FAIL)) == "FAIL");
  CHECK(std::string(status_str(Status::SKIPPED)) == "SKIPPED");

  SuiteReport s;
  s.name = "demo";
  s.add("demo.one", "first claim", true, {{"value", "3/2"}});
  s.add("demo.two", "second claim", false);
  s.skip("demo.three", "third claim", "no data");
  CHECK(!s.passed());
  CHECK(s.count(Status::PASS) == 1);
  CHECK(s.count(Status::FAIL) == 1);
  CHECK(s.count(Status::SKIPPED) == 1);
  s.assertions[1].status = Status::PASS;
  CHECK(s.passed());  // SKIPPED does not fail a suite
}

TEST_CASE("run report JSON") {
  RunReport r;
  r.suite = "lattice";
  r.seed = 7;
  r.samples = 5;
  r.symbolic = false;
  SuiteReport s;
  s.name = "lattice";
  s.add("lattice.gram", "the form has the stated gram matrix", true);
  s.add("lattice.bad", "a failing claim", false, {{"got", "1/2"}});
  r.suites.push_back(s);

  nlohmann::json j = r.to_json();
  CHECK(j["suite"] == "lattice");
  CHECK(j["seed"] == 7);
  CHECK(j["samples"] == 5);
  CHECK(j["symbolic"] == false);
  CHECK(!j.contains("sweep"));        // empty fields are omitted
  CHECK(!j.contains("keum_digest"));
  CHECK(j["passed"] == false);
  REQUIRE(j["suites"].size() == 1);
  const auto& js = j["suites"][0];
  CHECK(js["pass_count"] == 1);
  CHECK(js["fail_count"] == 1);
  CHECK(js["skip_count"] == 0);
  REQUIRE(js["assertions"].size() == 2);
  CHECK(js["assertions"][0]["status"] == "PASS");
  CHECK(!js["assertions"][0].contains("witness"));  // empty witness omitted
  CHECK(js["assertions"][1]["witness"]["got"] == "1/2");

  r.sweep = "full";
  r.keum_digest = "deadbeef";
  nlohmann::json j2 = r.to_json();
  CHECK(j2["sweep"] == "full");
  CHECK(j2["keum_digest"] == "deadbeef");
}

TEST_CASE("content digest") {
  // Reference vectors of 64-bit FNV-1a.
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64_hex("abc") == "e71fa2190541574b");
  CHECK(fnv1a64("a") != fnv1a64("b"));
}

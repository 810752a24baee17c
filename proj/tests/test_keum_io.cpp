#include "kummer/keum_io.hpp"

#include <doctest.h>

#include <fstream>

using namespace kummer;

namespace {

std::string write_file(const std::string& name, const std::string& content) {
  std::ofstream out(name, std::ios::binary);
  out << content;
  return name;
}

nlohmann::json identity_entry() {
  nlohmann::json e;
  e["hexad"] = {"00", "16", "26", "13", "24", "34"};
  auto rows = nlohmann::json::array();
  for (int r = 0; r < 17; ++r) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < 17; ++c) row.push_back(r == c ? "1" : "0");
    rows.push_back(row);
  }
  e["matrix"] = rows;
  return e;
}

}  // namespace

TEST_CASE("well-formed table parses") {
  nlohmann::json j = nlohmann::json::array({identity_entry()});
  std::string raw = j.dump();
  auto path = write_file("keum_ok.json", raw);
  KeumTable t = parse_keum_table(path);
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].hexad.type() == 1);
  CHECK(t.entries[0].hexad.labels[0] == Label::zero());
  CHECK(t.entries[0].action.is_identity());
  CHECK(t.digest == fnv1a64_hex(raw));
  // Format validity does not imply acceptance: the gate still rejects it.
  CHECK(!validate_keum(t.entries[0].hexad, t.entries[0].action).ok);
}

TEST_CASE("rational matrix entries") {
  nlohmann::json e = identity_entry();
  e["matrix"][0][0] = "-3/7";
  auto path = write_file("keum_rat.json", nlohmann::json::array({e}).dump());
  KeumTable t = parse_keum_table(path);
  CHECK(t.entries[0].action.m(0, 0) == Rat(-3, 7));
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(parse_keum_table("no_such_file.json"), KeumParseError);
  CHECK_THROWS_AS(parse_keum_table(write_file("keum_empty.json", "")), KeumParseError);
  CHECK_THROWS_AS(parse_keum_table(write_file("keum_syntax.json", "{not json")),
                  KeumParseError);
  CHECK_THROWS_AS(parse_keum_table(write_file("keum_object.json", "{}")), KeumParseError);

  nlohmann::json no_matrix;
  no_matrix["hexad"] = {"00", "16", "26", "13", "24", "34"};
  CHECK_THROWS_AS(
      parse_keum_table(write_file("keum_nomat.json",
                                  nlohmann::json::array({no_matrix}).dump())),
      KeumParseError);

  nlohmann::json short_hexad = identity_entry();
  short_hexad["hexad"] = {"00", "16"};
  CHECK_THROWS_AS(
      parse_keum_table(write_file("keum_short.json",
                                  nlohmann::json::array({short_hexad}).dump())),
      KeumParseError);

  nlohmann::json bad_label = identity_entry();
  bad_label["hexad"][0] = "77";
  CHECK_THROWS_AS(
      parse_keum_table(write_file("keum_badlabel.json",
                                  nlohmann::json::array({bad_label}).dump())),
      KeumParseError);

  // Six valid labels that are an incidence set, not a hexad.
  nlohmann::json not_hexad = identity_entry();
  not_hexad["hexad"] = {"00", "16", "26", "36", "46", "56"};
  CHECK_THROWS_AS(
      parse_keum_table(write_file("keum_nothexad.json",
                                  nlohmann::json::array({not_hexad}).dump())),
      KeumParseError);

  nlohmann::json small_matrix = identity_entry();
  small_matrix["matrix"] = {{"1", "0"}, {"0", "1"}};
  CHECK_THROWS_AS(
      parse_keum_table(write_file("keum_small.json",
                                  nlohmann::json::array({small_matrix}).dump())),
      KeumParseError);

  nlohmann::json bad_rat = identity_entry();
  bad_rat["matrix"][3][5] = "x";
  CHECK_THROWS_AS(
      parse_keum_table(write_file("keum_badrat.json",
                                  nlohmann::json::array({bad_rat}).dump())),
      KeumParseError);
}

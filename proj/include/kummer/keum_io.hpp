#pragma once

// External table of infinite-order lattice actions attached to the 120
// type-1 Weber hexads. The library ships no such matrices; a table supplied
// at run time is accepted only after every entry passes the structural gate
// in validate_keum.
//
// File format: a JSON array of entries
//   { "hexad": ["00","16","26","13","24","34"],
//     "matrix": [[...17 rationals as strings...] x 17] }
// where matrix column j is the image of the j-th basis class (Lambda, then
// the sixteen nodes in canonical label order).

#include "kummer/isometry.hpp"
#include "kummer/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kummer {

struct KeumParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KeumEntry {
  WeberHexad hexad;
  LatticeIsometry action;
};

struct KeumTable {
  std::vector<KeumEntry> entries;
  std::string digest;  // FNV-1a 64 of the raw file bytes, hex
};

inline KeumTable parse_keum_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KeumParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string raw = buf.str();
  if (raw.empty()) throw KeumParseError(path + " is empty");

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(raw);
  } catch (const nlohmann::json::exception& e) {
    throw KeumParseError(path + ": " + e.what());
  }
  if (!j.is_array()) throw KeumParseError(path + ": top level must be an array");

  KeumTable table;
  table.digest = fnv1a64_hex(raw);
  for (std::size_t n = 0; n < j.size(); ++n) {
    const auto& e = j[n];
    std::string at = path + " entry " + std::to_string(n);
    if (!e.is_object() || !e.contains("hexad") || !e.contains("matrix"))
      throw KeumParseError(at + ": need hexad and matrix fields");
    const auto& jh = e["hexad"];
    if (!jh.is_array() || jh.size() != 6) throw KeumParseError(at + ": hexad must have 6 labels");
    LabelSet<6> labels;
    try {
      for (int i = 0; i < 6; ++i) labels[i] = Label::parse(jh[i].get<std::string>());
    } catch (const std::exception& ex) {
      throw KeumParseError(at + ": " + ex.what());
    }
    auto w = find_weber(labels);
    if (!w) throw KeumParseError(at + ": labels are not a hexad of the configuration");
    const auto& jm = e["matrix"];
    if (!jm.is_array() || jm.size() != kSurfaceRank)
      throw KeumParseError(at + ": matrix must be 17x17");
    RatMat m(kSurfaceRank, kSurfaceRank);
    for (std::size_t r = 0; r < kSurfaceRank; ++r) {
      if (!jm[r].is_array() || jm[r].size() != kSurfaceRank)
        throw KeumParseError(at + ": matrix must be 17x17");
      for (std::size_t c = 0; c < kSurfaceRank; ++c) {
        try {
          m(r, c) = rat_parse(jm[r][c].get<std::string>());
        } catch (const std::exception& ex) {
          throw KeumParseError(at + ": bad rational: " + ex.what());
        }
      }
    }
    table.entries.push_back({*w, LatticeIsometry(std::move(m))});
  }
  return table;
}

}  // namespace kummer

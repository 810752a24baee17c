#pragma once

// Structured verification reports: every assertion carries an identifier, a
// self-contained claim, a PASS/FAIL/SKIPPED status and exact witness data.
// Rationals are serialized as "num" or "num/den" strings, never as floats.

#include "kummer/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kummer {

enum class Status { PASS, FAIL, SKIPPED };

inline const char* status_str(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    default: return "SKIPPED";
  }
}

struct Assertion {
  std::string id;
  std::string claim;
  Status status = Status::PASS;
  nlohmann::json witness;  // exact values, rationals as strings
};

struct SuiteReport {
  std::string name;
  std::vector<Assertion> assertions;

  void add(const std::string& id, const std::string& claim, bool ok,
           nlohmann::json witness = nlohmann::json::object()) {
    assertions.push_back({id, claim, ok ? Status::PASS : Status::FAIL, std::move(witness)});
  }
  void skip(const std::string& id, const std::string& claim, const std::string& reason) {
    assertions.push_back({id, claim, Status::SKIPPED, nlohmann::json{{"reason", reason}}});
  }
  bool passed() const {
    for (const auto& a : assertions)
      if (a.status == Status::FAIL) return false;
    return true;
  }
  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& a : assertions)
      if (a.status == s) ++n;
    return n;
  }
};

struct RunReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool symbolic = false;
  std::string sweep;
  std::string keum_digest;  // empty when no table is loaded
  std::vector<SuiteReport> suites;

  bool passed() const {
    for (const auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["samples"] = samples;
    j["symbolic"] = symbolic;
    if (!sweep.empty()) j["sweep"] = sweep;
    if (!keum_digest.empty()) j["keum_digest"] = keum_digest;
    j["passed"] = passed();
    j["suites"] = nlohmann::json::array();
    for (const auto& s : suites) {
      nlohmann::json js;
      js["name"] = s.name;
      js["passed"] = s.passed();
      js["pass_count"] = s.count(Status::PASS);
      js["fail_count"] = s.count(Status::FAIL);
      js["skip_count"] = s.count(Status::SKIPPED);
      js["assertions"] = nlohmann::json::array();
      for (const auto& a : s.assertions) {
        nlohmann::json ja;
        ja["id"] = a.id;
        ja["claim"] = a.claim;
        ja["status"] = status_str(a.status);
        if (!a.witness.is_null() && !(a.witness.is_object() && a.witness.empty()))
          ja["witness"] = a.witness;
        js["assertions"].push_back(std::move(ja));
      }
      j["suites"].push_back(std::move(js));
    }
    return j;
  }

  void write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report file " + path);
    out << to_json().dump(2) << "\n";
  }
};

// FNV-1a, 64-bit: stable content digest for external data files.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
  std::ostringstream os;
  os << std::hex << fnv1a64(data);
  return os.str();
}

}  // namespace kummer

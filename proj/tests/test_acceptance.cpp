// Acceptance harness: runs the eight gate checks end to end, printing one
// status line each, with wall-clock budgets enforced per check. An optional
// argument names an external matrix table for the final gate; without it
// that check is reported SKIPPED. Exit code 0 when no line FAILs.

#include "kummer/keum_io.hpp"
#include "kummer/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace kummer;

namespace {

int failures = 0;

double run_timed(const std::function<bool(std::string&)>& body, double limit_s,
                 const char* name, int index) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!ok) ++failures;
  std::string padded = detail.empty() ? "" : detail + " ";
  std::printf("[%s] %d %s: %s(%.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL", index, name,
              padded.c_str(), dt, limit_s);
  std::fflush(stdout);
  return dt;
}

bool all_passed(const SuiteReport& rep, std::string& detail) {
  std::size_t pass = rep.count(Status::PASS), fail = rep.count(Status::FAIL);
  detail = std::to_string(pass) + " assertions";
  if (fail) {
    detail = std::to_string(fail) + " of " + std::to_string(pass + fail) + " assertions failed";
    for (const auto& a : rep.assertions)
      if (a.status == Status::FAIL) {
        detail += " [" + a.id + "]";
        break;
      }
  }
  return fail == 0;
}

bool ids_passed(const SuiteReport& rep, const std::vector<std::string>& ids,
                std::string& detail) {
  bool ok = true;
  for (const auto& id : ids) {
    bool found = false;
    for (const auto& a : rep.assertions)
      if (a.id == id) {
        found = true;
        if (a.status != Status::PASS) {
          ok = false;
          detail += "[" + id + " " + status_str(a.status) + "] ";
        }
      }
    if (!found) {
      ok = false;
      detail += "[" + id + " missing] ";
    }
  }
  if (ok) detail = std::to_string(ids.size()) + (ids.size() == 1 ? " check" : " checks");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string table_path = argc > 1 ? argv[1] : "";

  run_timed([](std::string& d) { return all_passed(suite_config(), d); }, 5,
            "configuration counts", 1);
  run_timed([](std::string& d) { return all_passed(suite_lattice(), d); }, 1,
            "lattice identities", 2);
  run_timed([](std::string& d) { return all_passed(suite_isometry(), d); }, 10,
            "isometry families", 3);
  run_timed([](std::string& d) { return all_passed(suite_threefold(), d); }, 5,
            "threefold intertwining", 4);

  run_timed(
      [](std::string& d) {
        SuiteOptions opt;
        opt.homing_trials = 0;
        return ids_passed(suite_chamber(opt),
                          {"chamber.wall_count", "chamber.interior_point",
                           "chamber.dimension_certificate", "chamber.face_dimensions"},
                          d);
      },
      300, "chamber walls and faces", 5);

  run_timed(
      [](std::string& d) {
        SuiteOptions opt;  // 50 seeded words of length at most 6
        return ids_passed(suite_chamber(opt), {"chamber.homing_roundtrip"}, d);
      },
      120, "homing descent", 6);

  run_timed(
      [](std::string& d) {
        SuiteOptions opt;  // five seeded specializations, 60s budget each
        return all_passed(suite_cremona(opt), d);
      },
      300, "cremona involution certificates", 7);

  if (table_path.empty()) {
    std::printf("[SKIPPED] 8 external table gate: no table supplied\n");
  } else {
    run_timed(
        [&table_path](std::string& d) {
          KeumTable table = parse_keum_table(table_path);
          SuiteReport gate = suite_keum(&table);
          if (!all_passed(gate, d)) return false;
          SuiteOptions opt;
          opt.keum = &table;
          opt.sweep = "full";
          std::string d2;
          bool ok = ids_passed(suite_chamber(opt),
                               {"chamber.face_dimensions", "chamber.homing_roundtrip"}, d2);
          d += "; " + d2;
          return ok;
        },
        600, "external table gate", 8);
  }

  return failures == 0 ? 0 : 1;
}

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qha {

/// One verified identity: the id names the check, the anchor states the
/// identity being measured in plain ASCII math.
struct CheckRecord {
  std::string id;
  std::string anchor;
  double error = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;
  nlohmann::ordered_json environment;
  double elapsed_seconds = 0.0;

  void add(const std::string& id, const std::string& anchor, double error, double tol) {
    records.push_back({id, anchor, error, tol, error <= tol});
  }

  bool all_pass() const {
    for (const CheckRecord& r : records)
      if (!r.pass) return false;
    return true;
  }

  /// Full report; the "timing" block is the only non-deterministic part.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["overall_pass"] = all_pass();
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const CheckRecord& r : records) {
      nlohmann::ordered_json rec;
      rec["id"] = r.id;
      rec["anchor"] = r.anchor;
      rec["error"] = r.error;
      rec["tol"] = r.tol;
      rec["pass"] = r.pass;
      recs.push_back(std::move(rec));
    }
    j["records"] = std::move(recs);
    j["environment"] = environment;
    j["timing"] = {{"elapsed_seconds", elapsed_seconds}};
    return j;
  }
};

}  // namespace qha
